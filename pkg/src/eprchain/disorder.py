"""Seeded static disorder and ensemble statistics of the EOF observables.

Off-diagonal disorder shifts every bond by E_J * d * delta and diagonal
disorder sets every site energy to E_eps * d * delta, with d uniform on
[-0.5, 0.5].  Draws come from independent streams keyed by
(master_seed, level_index, realization_index), so results are identical
under any execution order or parallelism.
"""

from dataclasses import dataclass, replace

import numpy as np

from ._kernels import trace_eof_fid
from .chain import build_sector_hamiltonian, diagonalize
from .dynamics import protocol_initial_state, trace_dynamics
from .entanglement import ac_pair_table

KINDS = ("off_diagonal", "diagonal")

DEFAULT_REALIZATIONS = 1000
# grid per revival window for ensemble traces; coarser than the clean-trace
# default but still ~40 points per secondary oscillation
DEFAULT_ENSEMBLE_STEPS = 1200


@dataclass(frozen=True)
class DisorderConfig:
    """Disorder kind, strength scale, ensemble size and master seed."""

    kind: str
    scale: float = 0.0
    realizations: int = DEFAULT_REALIZATIONS
    master_seed: int = 0

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"kind must be one of {KINDS} (got {self.kind!r})")
        if self.scale < 0.0:
            raise ValueError("disorder scale must be nonnegative")
        if self.realizations < 1:
            raise ValueError("need at least one realization")


@dataclass(frozen=True)
class EnsembleStats:
    """Per-level mean / std / standard error of both EOF observables."""

    levels: np.ndarray
    mean_at_tE: np.ndarray
    std_at_tE: np.ndarray
    sem_at_tE: np.ndarray
    mean_max: np.ndarray
    std_max: np.ndarray
    sem_max: np.ndarray
    clean_t_E: float
    clean_t_F: float
    realizations: int


def _draws(master_seed, level_index, realization_index, count):
    seq = np.random.SeedSequence(
        entropy=master_seed, spawn_key=(level_index, realization_index)
    )
    return np.random.default_rng(seq).uniform(-0.5, 0.5, size=count)


def perturb(spec, config, realization_index, level_index=0):
    """One disordered copy of a clean chain, deterministic in its keys."""
    if config.scale == 0.0:
        return spec
    delta = spec.weak_coupling
    if config.kind == "off_diagonal":
        d = _draws(config.master_seed, level_index, realization_index,
                   spec.n_sites - 1)
        couplings = tuple(
            j + config.scale * di * delta for j, di in zip(spec.couplings, d)
        )
        return replace(spec, couplings=couplings)
    d = _draws(config.master_seed, level_index, realization_index,
               spec.n_sites)
    onsite = tuple(config.scale * di * delta for di in d)
    return replace(spec, onsite_energies=onsite)


def run_ensemble(spec, protocol, config, levels,
                 n_steps=DEFAULT_ENSEMBLE_STEPS):
    """Disorder-averaged EOF at the clean t_E and windowed EOF maximum.

    The clean chain fixes t_E (time of maximum entanglement of the
    unperturbed system) and the window [0, t_F]; every realization is then
    evolved over that same window.  A failed realization aborts the whole
    ensemble rather than biasing the statistics.
    """
    levels = np.asarray(levels, dtype=float)
    if levels.size == 0 or np.any(np.diff(levels) < 0):
        raise ValueError("levels must be a nonempty ascending vector")

    clean = trace_dynamics(spec, protocol)
    state0 = protocol_initial_state(spec, protocol)
    pair_i, pair_j, offsets = ac_pair_table(state0.basis)
    # the clean t_E joins the grid so level 0 reproduces the clean values
    times = np.union1d(np.linspace(0.0, clean.t_F, n_steps), [clean.t_E])
    te_index = int(np.searchsorted(times, clean.t_E))
    n_exc = state0.basis.n_excitations

    shape = (levels.size, config.realizations)
    at_te = np.empty(shape)
    at_max = np.empty(shape)
    for li, level in enumerate(levels):
        cfg = replace(config, scale=float(level))
        for ri in range(config.realizations):
            realization = perturb(spec, cfg, ri, level_index=li)
            spectral = diagonalize(build_sector_hamiltonian(realization, n_exc))
            coeffs = spectral.eigenvectors.T @ state0.amplitudes
            _, eof = trace_eof_fid(
                spectral.eigenvalues, spectral.eigenvectors, coeffs, times,
                pair_i, pair_j, offsets,
            )
            at_te[li, ri] = eof[te_index]
            at_max[li, ri] = eof.max()

    n = config.realizations
    std_te = at_te.std(axis=1)
    std_max = at_max.std(axis=1)
    return EnsembleStats(
        levels=levels,
        mean_at_tE=at_te.mean(axis=1),
        std_at_tE=std_te,
        sem_at_tE=std_te / np.sqrt(n),
        mean_max=at_max.mean(axis=1),
        std_max=std_max,
        sem_max=std_max / np.sqrt(n),
        clean_t_E=clean.t_E,
        clean_t_F=clean.t_F,
        realizations=n,
    )
