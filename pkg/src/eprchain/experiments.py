"""Coupling-ratio sweeps, arch-peak detection and physical-unit conversion."""

import json
from dataclasses import dataclass
from importlib import resources

import numpy as np
from scipy import constants

from .chain import build_clean_chain
from .dynamics import evolve, trace_dynamics, protocol_initial_state
from .chain import build_sector_hamiltonian, diagonalize
from .entanglement import eof_between_AC

DEFAULT_SWEEP_POINTS = 500
DEFAULT_SWEEP_RANGE = (0.05, 0.55)


@dataclass(frozen=True)
class SweepResult:
    """Per-ratio entangling time and EOF observables of one protocol."""

    protocol: str
    ratios: np.ndarray
    t_E: np.ndarray
    eof_max: np.ndarray
    eof_at_half_tF: np.ndarray
    half_tF: np.ndarray


def ratio_sweep(protocol, ratio_min, ratio_max, n_points, n_sites=7,
                n_steps=None):
    """Trace the dynamics for a grid of coupling ratios.

    For every ratio the full window trace yields t_E and the maximum EOF;
    the analytic half period t_F / 2 and the EOF sampled exactly there
    give the analytic-overlay curves.
    """
    if not 0.0 < ratio_min < ratio_max <= 1.0:
        raise ValueError("need 0 < ratio_min < ratio_max <= 1")
    if n_points < 2:
        raise ValueError("a sweep needs at least 2 points")
    ratios = np.linspace(ratio_min, ratio_max, n_points)
    t_e = np.empty(n_points)
    eof_max = np.empty(n_points)
    eof_half = np.empty(n_points)
    half_tf = np.empty(n_points)
    for i, r in enumerate(ratios):
        spec = build_clean_chain(n_sites, float(r))
        trace = (trace_dynamics(spec, protocol) if n_steps is None
                 else trace_dynamics(spec, protocol, n_steps))
        t_e[i] = trace.t_E
        eof_max[i] = trace.eof_max
        half_tf[i] = trace.t_F / 2.0
        state0 = protocol_initial_state(spec, protocol)
        spectral = diagonalize(
            build_sector_hamiltonian(spec, state0.basis.n_excitations)
        )
        eof_half[i] = eof_between_AC(evolve(state0, spectral, half_tf[i]))
    return SweepResult(
        protocol=protocol, ratios=ratios, t_E=t_e, eof_max=eof_max,
        eof_at_half_tF=eof_half, half_tF=half_tf,
    )


def find_arch_peaks(sweep):
    """Ratios of strict local maxima of the EOF_max profile.

    Three-point comparison with plateau handling: a flat run counts as a
    single candidate and reports its leftmost ratio.
    """
    values = np.asarray(sweep.eof_max)
    if values.size < 3:
        raise ValueError("need at least 3 sweep points to detect peaks")
    # collapse plateaus to (start_index, value) runs
    runs = [(0, values[0])]
    for i in range(1, values.size):
        if values[i] != runs[-1][1]:
            runs.append((i, values[i]))
    peaks = []
    for k in range(1, len(runs) - 1):
        if runs[k - 1][1] < runs[k][1] > runs[k + 1][1]:
            peaks.append(float(sweep.ratios[runs[k][0]]))
    return peaks


@dataclass(frozen=True)
class PlatformEntry:
    """One hardware platform row: characteristic energy and coherence data."""

    name: str
    energy_value: float
    energy_unit: str
    decoherence_time: str
    quoted_entangling_time: str = ""
    reproduces_formula: bool = True

    def __post_init__(self):
        if self.energy_value <= 0.0:
            raise ValueError("characteristic energy must be positive")


# characteristic energy -> joules
_ENERGY_UNITS = {
    "eV": lambda v: v * constants.e,
    "meV": lambda v: v * constants.e * 1e-3,
    "ueV": lambda v: v * constants.e * 1e-6,
    "GHz": lambda v: v * constants.h * 1e9,       # photon energy h*f
    "MHz": lambda v: v * constants.h * 1e6,
    "hbar_MHz": lambda v: v * constants.hbar * 1e6,  # hbar * angular rate
}


def characteristic_energy_joules(platform):
    try:
        return _ENERGY_UNITS[platform.energy_unit](platform.energy_value)
    except KeyError:
        raise ValueError(
            f"unknown energy unit {platform.energy_unit!r}; "
            f"supported: {sorted(_ENERGY_UNITS)} or 'natural'"
        )


def physical_entangling_time(platform, t_E_natural):
    """Convert a natural-units entangling time to seconds, t = t_E hbar / E.

    With unit 'natural' the strong coupling is dimensionless and the time
    is returned unchanged (divided by the energy value).
    """
    if platform.energy_unit == "natural":
        return t_E_natural / platform.energy_value
    return t_E_natural * constants.hbar / characteristic_energy_joules(platform)


def load_platforms():
    """Platform table shipped with the package.

    Rows whose quoted entangling time does not follow from
    t = t_E hbar / E carry reproduces_formula = false; they are reported
    as printed, never adjusted.
    """
    text = resources.files("eprchain").joinpath("data/platforms.json").read_text()
    return [PlatformEntry(**row) for row in json.loads(text)]
