# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled evolution kernel: per-time-step EOF and fidelity.

Same contract as the pure-numpy fallback, but with the per-step work
(phase rotation, partial-trace gather, 4x4 spin-flip eigenproblem) done
in C.  The 4x4 eigenvalues come from LAPACK zgeev, matching the general
eigensolver route of the reference implementation.
"""

import numpy as np

cimport cython
from libc.math cimport cos, sin, sqrt, log2
from scipy.linalg.cython_lapack cimport zgeev

BACKEND_NAME = "compiled"

cdef double _FLIP[4]
_FLIP[0] = -1.0
_FLIP[1] = 1.0
_FLIP[2] = 1.0
_FLIP[3] = -1.0


cdef inline double _binary_entropy(double x) nogil:
    if x <= 0.0 or x >= 1.0:
        return 0.0
    return -x * log2(x) - (1.0 - x) * log2(1.0 - x)


def trace_eof_fid(const double[::1] eigenvalues not None,
                  const double[:, ::1] eigenvectors not None,
                  const double complex[::1] coeffs not None,
                  const double[::1] times not None,
                  const long[::1] pair_i not None,
                  const long[::1] pair_j not None,
                  const long[::1] offsets not None):
    """Fidelity vs the initial state and EOF(A, C) on a time grid.

    Arguments and return layout match ``_fallback.trace_eof_fid``.
    """
    cdef Py_ssize_t d = eigenvalues.shape[0]
    cdef Py_ssize_t nt = times.shape[0]

    fid_arr = np.empty(nt, dtype=np.float64)
    eof_arr = np.empty(nt, dtype=np.float64)
    cdef double[::1] fid = fid_arr
    cdef double[::1] eof = eof_arr

    psi_arr = np.empty(d, dtype=np.complex128)
    mode_arr = np.empty(d, dtype=np.complex128)
    cdef double complex[::1] psi = psi_arr
    cdef double complex[::1] mode = mode_arr

    cdef double complex rho[4][4]
    cdef double complex rho_t[4][4]
    cdef double complex r[16]
    cdef double complex w[4]
    cdef double complex vdummy[1]
    cdef double complex work[64]
    cdef double rwork[8]
    cdef double lam[4]
    cdef int n4 = 4, lda = 4, ldv = 1, lwork = 64, info = 0
    cdef char jobn = b'N'

    cdef Py_ssize_t it, i, j, k, s, p, a, b
    cdef double t, ph, fr, fi, tmp, diff, tangle, x
    cdef double complex acc, z

    for it in range(nt):
        t = times[it]
        fr = 0.0
        fi = 0.0
        for k in range(d):
            z = coeffs[k] * (cos(eigenvalues[k] * t)
                             - 1j * sin(eigenvalues[k] * t))
            mode[k] = z
            z = z * coeffs[k].conjugate()
            fr += z.real
            fi += z.imag
        fid[it] = fr * fr + fi * fi

        for i in range(d):
            acc = 0.0
            for k in range(d):
                acc = acc + eigenvectors[i, k] * mode[k]
            psi[i] = acc

        for s in range(16):
            acc = 0.0
            for p in range(offsets[s], offsets[s + 1]):
                acc = acc + psi[pair_i[p]] * psi[pair_j[p]].conjugate()
            rho[s >> 2][s & 3] = acc

        for a in range(4):
            for b in range(4):
                rho_t[a][b] = (_FLIP[a] * _FLIP[b]
                               * rho[3 - a][3 - b].conjugate())

        # r = rho @ rho_tilde; layout irrelevant for eigenvalues
        for a in range(4):
            for b in range(4):
                acc = 0.0
                for k in range(4):
                    acc = acc + rho[a][k] * rho_t[k][b]
                r[4 * a + b] = acc

        zgeev(&jobn, &jobn, &n4, &r[0], &lda, &w[0], &vdummy[0], &ldv,
              &vdummy[0], &ldv, &work[0], &lwork, &rwork[0], &info)
        if info != 0:
            raise RuntimeError(f"zgeev failed with info={info} at step {it}")

        for a in range(4):
            tmp = w[a].real
            lam[a] = sqrt(tmp) if tmp > 0.0 else 0.0
        # descending insertion sort of 4 values
        for a in range(1, 4):
            tmp = lam[a]
            b = a
            while b > 0 and lam[b - 1] < tmp:
                lam[b] = lam[b - 1]
                b -= 1
            lam[b] = tmp

        diff = lam[0] - lam[1] - lam[2] - lam[3]
        tangle = diff * diff if diff > 0.0 else 0.0
        tmp = 1.0 - tangle
        x = (1.0 + (sqrt(tmp) if tmp > 0.0 else 0.0)) / 2.0
        eof[it] = _binary_entropy(x)

    return fid_arr, eof_arr
