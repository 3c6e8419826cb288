"""Closed-form three-site effective model of the ABC chain.

For small coupling ratios the three gap states of the full chain behave
like a trimer of sites A, B, C with equal effective coupling eta.  The
trimer is exactly solvable and serves as the analytic oracle for the full
numerics: it fixes the revival period t_F = pi / (sqrt(2) eta), the
entangling time near t_F / 2, and the shape of the fidelity curve.
"""

from dataclasses import dataclass

import numpy as np

from .chain import sector_basis
from .state import QuantumState

SQRT2 = np.sqrt(2.0)

# Eigenvectors of the equal-coupling trimer, columns ordered by energy
# (-sqrt(2) eta, 0, +sqrt(2) eta).  Signs are frozen; consumers compare
# states only up to a global phase.
TRIMER_EIGENVECTORS = np.array(
    [
        [-0.5, 1.0 / SQRT2, 0.5],
        [1.0 / SQRT2, 0.0, 1.0 / SQRT2],
        [-0.5, -1.0 / SQRT2, 0.5],
    ]
)


@dataclass(frozen=True)
class TrimerModel:
    """Effective coupling, revival period and eigensystem of the trimer."""

    eta: float
    t_F: float
    energies: np.ndarray
    eigenvectors: np.ndarray


def effective_eta(ratio):
    """Effective trimer coupling of the clean 7-site chain.

    Equals 1/sqrt(2) times the splitting between the zero mode and the
    positive gap state: eta = (1/2) sqrt(1 + 3 r^2 - sqrt(1 + 6 r^2 + r^4)).
    """
    r2 = ratio * ratio
    inner = 1.0 + 3.0 * r2 - np.sqrt(1.0 + 6.0 * r2 + r2 * r2)
    return 0.5 * np.sqrt(max(inner, 0.0))


def fidelity_period(eta):
    """Revival period t_F = pi / (sqrt(2) eta).

    Raises
    ------
    ValueError
        If eta is not positive: a decoupled chain has no finite revival.
    """
    if eta <= 0.0:
        raise ValueError("no finite revival: effective coupling is zero")
    return np.pi / (SQRT2 * eta)


def trimer_model(ratio):
    """Bundle eta, t_F and the trimer eigensystem for a coupling ratio."""
    eta = effective_eta(ratio)
    return TrimerModel(
        eta=eta,
        t_F=fidelity_period(eta),
        energies=np.array([-SQRT2 * eta, 0.0, SQRT2 * eta]),
        eigenvectors=TRIMER_EIGENVECTORS.copy(),
    )


def trimer_hamiltonian(eta):
    """The 3x3 equal-coupling matrix, kept for oracle cross-checks."""
    return np.array([[0.0, eta, 0.0], [eta, 0.0, eta], [0.0, eta, 0.0]])


def trimer_fidelity(t, eta):
    """Analytic fidelity of the centre-injected trimer, cos^2(sqrt(2) eta t).

    The initial state splits equally over the two outer eigenstates, so
    its self-overlap oscillates at the single Bohr frequency 2 sqrt(2) eta;
    both injection protocols share this curve by particle-hole symmetry.
    """
    return np.cos(SQRT2 * eta * np.asarray(t)) ** 2


def trimer_state_at(t, eta, protocol="single"):
    """Exact trimer state at time t for either injection protocol.

    The centre-injected state evolves to
    (-i sin(theta)/sqrt(2), cos(theta), -i sin(theta)/sqrt(2)) with
    theta = sqrt(2) eta t.  The pair protocol is its particle-hole image:
    every site occupation is swapped, mapping the 1-excitation amplitudes
    onto complemented bitmasks in the 2-excitation sector.
    """
    if eta <= 0.0:
        raise ValueError("effective coupling must be positive")
    theta = SQRT2 * eta * t
    side = -1j * np.sin(theta) / SQRT2
    centre = np.cos(theta)
    if protocol == "single":
        basis = sector_basis(3, 1)
        amps = np.zeros(3, dtype=complex)
        amps[basis.index_of(0b001)] = side   # excitation at A
        amps[basis.index_of(0b010)] = centre
        amps[basis.index_of(0b100)] = side
    elif protocol == "pair":
        basis = sector_basis(3, 2)
        amps = np.zeros(3, dtype=complex)
        amps[basis.index_of(0b110)] = side   # hole at A
        amps[basis.index_of(0b101)] = centre
        amps[basis.index_of(0b011)] = side
    else:
        raise ValueError(f"unknown protocol {protocol!r}")
    return QuantumState(basis, amps)
