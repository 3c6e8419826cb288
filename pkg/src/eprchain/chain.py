"""Dimerized ABC-chain Hamiltonians in fixed-excitation sectors.

The chain alternates weak and strong couplings so that the first site (A),
the central site (B) and the last site (C) hang off the rest of the chain
through weak bonds only.  The XY hopping Hamiltonian conserves the total
excitation number, so everything here is built inside a single sector.
"""

from dataclasses import dataclass
from itertools import combinations

import numpy as np

ENERGY_UNIT = 1.0  # strong coupling fixes the energy scale


class ChainError(ValueError):
    """Invalid chain description or unsupported sector request."""


class DiagonalizationError(RuntimeError):
    """The dense symmetric eigensolver failed to converge."""


def _validate_length(n_sites):
    if n_sites < 7 or (n_sites - 7) % 4 != 0:
        raise ChainError(
            f"chain length must be 7 + 4k (got {n_sites}); shorter or "
            "intermediate lengths break the ABC coupling pattern"
        )


@dataclass(frozen=True)
class ChainSpec:
    """Immutable description of a linear chain.

    Parameters
    ----------
    n_sites : int
        Number of sites N, must satisfy N = 7 + 4k.
    strong_coupling : float
        Strong bond energy (the unit of energy, 1 by convention).
    weak_coupling : float
        Weak bond energy, 0 <= weak <= strong for clean chains.
    onsite_energies : tuple of float
        Length-N site energies.
    couplings : tuple of float
        Length-(N-1) nearest-neighbour bond energies.
    """

    n_sites: int
    strong_coupling: float
    weak_coupling: float
    onsite_energies: tuple
    couplings: tuple

    def __post_init__(self):
        _validate_length(self.n_sites)
        if len(self.onsite_energies) != self.n_sites:
            raise ChainError("onsite_energies must have one entry per site")
        if len(self.couplings) != self.n_sites - 1:
            raise ChainError("couplings must have one entry per bond")

    @property
    def ratio(self):
        """Coupling ratio weak/strong, the single clean-chain control knob."""
        return self.weak_coupling / self.strong_coupling

    @property
    def site_a(self):
        """0-based index of site A (site 1 in 1-based convention)."""
        return 0

    @property
    def site_b(self):
        """0-based index of the central site B."""
        return (self.n_sites - 1) // 2

    @property
    def site_c(self):
        """0-based index of site C (the last site)."""
        return self.n_sites - 1


def build_clean_chain(n_sites=7, ratio=0.1):
    """Build the unperturbed ABC chain with strong coupling 1.

    The bond pattern on the left half alternates weak, strong, weak, ...
    ending on a weak bond at the central site; the right half mirrors it.
    For N=7 this gives (d, D, d, d, D, d) with d the weak and D the strong
    coupling.

    Raises
    ------
    ChainError
        If n_sites is not 7 + 4k or ratio is outside [0, 1].
    """
    _validate_length(n_sites)
    if not 0.0 <= ratio <= 1.0:
        raise ChainError(f"coupling ratio must lie in [0, 1] (got {ratio})")
    half = (n_sites - 1) // 2
    left = tuple(ratio if i % 2 == 0 else 1.0 for i in range(half))
    return ChainSpec(
        n_sites=n_sites,
        strong_coupling=1.0,
        weak_coupling=float(ratio),
        onsite_energies=(0.0,) * n_sites,
        couplings=left + left[::-1],
    )


@dataclass(frozen=True)
class SectorBasis:
    """Ordered occupation-bitmask basis of a fixed-excitation sector.

    Bit i of a mask is the occupation of (0-based) site i.  Masks are
    sorted ascending so amplitude indices are reproducible across runs.
    """

    n_sites: int
    n_excitations: int
    states: tuple

    @property
    def dimension(self):
        return len(self.states)

    def index_of(self, mask):
        """Basis index of an occupation bitmask."""
        i = int(np.searchsorted(self.states, mask))
        if i >= len(self.states) or self.states[i] != mask:
            raise ChainError(f"mask {mask:b} is not in this sector")
        return i


def sector_basis(n_sites, n_excitations):
    """Enumerate the fixed-excitation basis, lexicographic by bitmask."""
    if n_excitations not in (1, 2):
        raise ChainError(
            f"only 1- and 2-excitation sectors are supported "
            f"(got {n_excitations})"
        )
    masks = sorted(
        sum(1 << s for s in occ)
        for occ in combinations(range(n_sites), n_excitations)
    )
    return SectorBasis(n_sites, n_excitations, tuple(masks))


@dataclass(frozen=True)
class SectorHamiltonian:
    """Real symmetric Hamiltonian restricted to one excitation sector."""

    basis: SectorBasis
    matrix: np.ndarray

    def __post_init__(self):
        self.matrix.setflags(write=False)


def build_sector_hamiltonian(spec, n_excitations):
    """Hopping + on-site Hamiltonian in the chosen sector.

    Off-diagonal entries connect bitmasks that differ by one excitation
    hopping across a single bond; diagonal entries sum the on-site
    energies of the occupied sites.
    """
    basis = sector_basis(spec.n_sites, n_excitations)
    return SectorHamiltonian(basis, _sector_matrix(basis, spec))


def _sector_matrix(basis, spec):
    dim = basis.dimension
    h = np.zeros((dim, dim))
    eps = np.asarray(spec.onsite_energies, dtype=float)
    for i, mask in enumerate(basis.states):
        occ = [s for s in range(basis.n_sites) if mask >> s & 1]
        h[i, i] = eps[occ].sum()
        for bond in range(basis.n_sites - 1):
            lo, hi = 1 << bond, 1 << (bond + 1)
            # hop only if exactly one end of the bond is occupied
            if bool(mask & lo) != bool(mask & hi):
                j = basis.index_of(mask ^ lo ^ hi)
                h[i, j] = h[j, i] = spec.couplings[bond]
    return h


@dataclass(frozen=True)
class SpectralDecomposition:
    """Eigenvalues (ascending) and orthonormal eigenvectors of a sector."""

    basis: SectorBasis
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    def __post_init__(self):
        self.eigenvalues.setflags(write=False)
        self.eigenvectors.setflags(write=False)


def diagonalize(hamiltonian):
    """Dense symmetric eigendecomposition of a sector Hamiltonian.

    Raises
    ------
    DiagonalizationError
        On eigensolver non-convergence; no partial data is returned.
    """
    try:
        evals, evecs = np.linalg.eigh(hamiltonian.matrix)
    except np.linalg.LinAlgError as err:
        raise DiagonalizationError(f"symmetric eigensolver failed: {err}")
    return SpectralDecomposition(hamiltonian.basis, evals, evecs)


def closed_form_spectrum(ratio):
    """Analytic single-excitation energies of the clean 7-site chain.

    Returns the seven energies in ascending order: a lower band pair, the
    three gap states (one exactly zero) and an upper band pair.
    """
    r2 = ratio * ratio
    s = np.sqrt(1.0 + 6.0 * r2 + r2 * r2)
    e3 = np.sqrt((1.0 + 3.0 * r2 + s) / 2.0)
    e2 = np.sqrt(1.0 + r2)
    e1 = np.sqrt((1.0 + 3.0 * r2 - s) / 2.0)
    return np.array([-e3, -e2, -e1, 0.0, e1, e2, e3])
