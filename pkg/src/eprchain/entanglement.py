"""Two-qubit entanglement of formation between the end sites A and C.

A chain state is reduced to the 4x4 density matrix of sites A and C by a
partial trace over everything in between, and the Wootters construction
turns that matrix into a concurrence and an entanglement of formation.
"""

from dataclasses import dataclass

import numpy as np

# Antidiagonal spin-flip operator sigma_y (x) sigma_y in the ordered
# product basis {|00>, |01>, |10>, |11>} of (A, C), A most significant.
SPIN_FLIP = np.array(
    [
        [0.0, 0.0, 0.0, -1.0],
        [0.0, 0.0, 1.0, 0.0],
        [0.0, 1.0, 0.0, 0.0],
        [-1.0, 0.0, 0.0, 0.0],
    ]
)

HERMITICITY_TOL = 1e-12
TRACE_TOL = 1e-12
PSD_TOL = 1e-10
EIGENVALUE_CLAMP = 1e-8


class DensityMatrixError(ValueError):
    """A 4x4 matrix failed the density-matrix invariants."""


@dataclass(frozen=True)
class TwoQubitDensity:
    """Hermitian, unit-trace, positive semidefinite 4x4 matrix for (A, C)."""

    matrix: np.ndarray

    def __post_init__(self):
        rho = np.asarray(self.matrix, dtype=complex)
        if rho.shape != (4, 4):
            raise DensityMatrixError(f"expected a 4x4 matrix, got {rho.shape}")
        if np.max(np.abs(rho - rho.conj().T)) > HERMITICITY_TOL:
            raise DensityMatrixError("matrix is not Hermitian")
        if abs(np.trace(rho).real - 1.0) > TRACE_TOL:
            raise DensityMatrixError("matrix does not have unit trace")
        if np.linalg.eigvalsh(rho).min() < -PSD_TOL:
            raise DensityMatrixError("matrix is not positive semidefinite")
        rho.setflags(write=False)
        object.__setattr__(self, "matrix", rho)


@dataclass(frozen=True)
class EntanglementResult:
    """Spin-flip eigenvalue roots (descending), tangle and EOF."""

    lambdas: np.ndarray
    tangle: float
    eof: float


def binary_entropy(x):
    """Shannon entropy of a bit, -x log2 x - (1-x) log2 (1-x), 0 at the ends."""
    x = np.asarray(x, dtype=float)
    out = np.zeros_like(x)
    inside = (x > 0.0) & (x < 1.0)
    xi = x[inside]
    out[inside] = -xi * np.log2(xi) - (1.0 - xi) * np.log2(1.0 - xi)
    return out if out.ndim else float(out)


def eof_from_tangle(tangle):
    """Entanglement of formation from the tangle, h((1 + sqrt(1 - tau)) / 2)."""
    return binary_entropy((1.0 + np.sqrt(max(1.0 - tangle, 0.0))) / 2.0)


def ac_group_index(mask, site_a, site_c):
    """Slot 0..3 of a bitmask in the (A, C) product basis, A most significant."""
    return 2 * (mask >> site_a & 1) + (mask >> site_c & 1)


def ac_pair_table(basis):
    """Index pairs realizing the partial trace onto sites A and C.

    For every (g, g') entry of the reduced matrix, lists the basis index
    pairs (i, j) whose environment occupations coincide.  Returned as flat
    arrays (pair_i, pair_j) with offsets[s] .. offsets[s+1] covering slot
    s = 4 g + g'; this is the layout the evolution kernels consume.
    """
    site_a, site_c = 0, basis.n_sites - 1
    env_mask = ~((1 << site_a) | (1 << site_c))
    groups = {}
    for i, mask in enumerate(basis.states):
        groups.setdefault(mask & env_mask, []).append(
            (ac_group_index(mask, site_a, site_c), i)
        )
    slots = [[] for _ in range(16)]
    for members in groups.values():
        for g1, i in members:
            for g2, j in members:
                slots[4 * g1 + g2].append((i, j))
    offsets = np.zeros(17, dtype=np.int64)
    pair_i, pair_j = [], []
    for s, pairs in enumerate(slots):
        offsets[s + 1] = offsets[s] + len(pairs)
        pair_i.extend(i for i, _ in pairs)
        pair_j.extend(j for _, j in pairs)
    return (
        np.asarray(pair_i, dtype=np.int64),
        np.asarray(pair_j, dtype=np.int64),
        offsets,
    )


def reduce_to_AC(state):
    """Partial trace of a chain state onto the two-qubit (A, C) subsystem."""
    pair_i, pair_j, offsets = ac_pair_table(state.basis)
    amps = state.amplitudes
    rho = np.zeros((4, 4), dtype=complex)
    prods = amps[pair_i] * amps[pair_j].conj()
    for s in range(16):
        rho[s // 4, s % 4] = prods[offsets[s]:offsets[s + 1]].sum()
    return TwoQubitDensity(rho)


def concurrence(rho):
    """Wootters lambda procedure on a two-qubit density matrix.

    The lambdas are the decreasing square roots of the eigenvalues of
    rho * rho_tilde, with rho_tilde the spin-flipped conjugate.  They are
    computed as the singular values of the symmetric overlap matrix built
    from the subnormalized eigenvectors of rho, which is exact in the
    rank-deficient (pure) limit where a general eigensolver on
    rho * rho_tilde loses half the working digits; the compiled evolution
    kernel keeps the direct eigensolver route, so the two stay
    cross-checked.  Returns the tangle tau = max(l1 - l2 - l3 - l4, 0)^2
    together with the EOF.

    Raises
    ------
    DensityMatrixError
        If an eigenvalue of rho is negative beyond the clamp threshold,
        which signals an invalid density matrix upstream.
    """
    mat = rho.matrix
    probs, vecs = np.linalg.eigh(mat)
    if probs.min() < -EIGENVALUE_CLAMP:
        raise DensityMatrixError(
            f"density matrix has eigenvalue {probs.min()} < -{EIGENVALUE_CLAMP}"
        )
    sub = vecs * np.sqrt(np.clip(probs, 0.0, None))
    overlap = sub.T @ SPIN_FLIP @ sub
    lambdas = np.sort(np.linalg.svd(overlap, compute_uv=False))[::-1]
    tangle = max(lambdas[0] - lambdas[1] - lambdas[2] - lambdas[3], 0.0) ** 2
    return EntanglementResult(lambdas=lambdas, tangle=tangle,
                              eof=eof_from_tangle(tangle))


def eof_between_AC(state):
    """EOF between sites A and C of a chain state."""
    return concurrence(reduce_to_AC(state)).eof
