"""Pure-numpy evolution kernel, used when the compiled core is unavailable.

Vectorizes over the whole time grid: one batched phase/matvec step, one
gather-reduce for the reduced density matrices and one batched 4x4
eigenvalue call for the concurrence.
"""

import numpy as np

BACKEND_NAME = "python"

# sign pattern of sigma_y (x) sigma_y on the antidiagonal
_FLIP_SIGN = np.array([-1.0, 1.0, 1.0, -1.0])


def trace_eof_fid(eigenvalues, eigenvectors, coeffs, times, pair_i, pair_j,
                  offsets):
    """Fidelity vs the initial state and EOF(A, C) on a time grid.

    Parameters
    ----------
    eigenvalues, eigenvectors : arrays (d,), (d, d)
        Spectral decomposition of the sector Hamiltonian.
    coeffs : complex array (d,)
        Initial state in the eigenbasis, V.T @ psi0.
    times : array (T,)
        Evaluation times.
    pair_i, pair_j, offsets : int64 arrays
        Partial-trace index pairs in the slot layout of
        ``entanglement.ac_pair_table``.

    Returns
    -------
    (fidelity, eof) : float arrays (T,)
    """
    times = np.asarray(times, dtype=float)
    phases = np.exp(-1j * np.outer(times, eigenvalues))
    modes = phases * coeffs                       # (T, d) eigenbasis amps
    fidelity = np.abs(modes @ coeffs.conj()) ** 2
    psi = modes @ eigenvectors.T                  # (T, d) site-basis amps

    prods = psi[:, pair_i] * psi[:, pair_j].conj()
    rho = np.empty((times.size, 4, 4), dtype=complex)
    for s in range(16):
        rho[:, s // 4, s % 4] = prods[:, offsets[s]:offsets[s + 1]].sum(axis=1)

    flip = _FLIP_SIGN[:, None] * _FLIP_SIGN[None, :]
    rho_tilde = flip * rho[:, ::-1, ::-1].conj()
    evals = np.linalg.eigvals(rho @ rho_tilde).real
    lambdas = np.sort(np.sqrt(np.clip(evals, 0.0, None)), axis=1)
    diff = lambdas[:, 3] - lambdas[:, 2] - lambdas[:, 1] - lambdas[:, 0]
    tangle = np.clip(diff, 0.0, None) ** 2

    x = (1.0 + np.sqrt(np.clip(1.0 - tangle, 0.0, None))) / 2.0
    eof = np.zeros_like(x)
    inside = (x > 0.0) & (x < 1.0)
    xi = x[inside]
    eof[inside] = -xi * np.log2(xi) - (1.0 - xi) * np.log2(1.0 - xi)
    return fidelity, eof
