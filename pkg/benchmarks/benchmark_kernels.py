"""Compare the compiled evolution kernel against the pure-Python fallback.

Times the fused fidelity/EOF trace kernel on both backends for the single
and pair protocols and prints the per-trace wall time and speedup.  Run
from the repository root::

    python3 benchmarks/benchmark_kernels.py
"""

import time

import numpy as np

from eprchain._kernels import _fallback
from eprchain.chain import build_clean_chain, build_sector_hamiltonian, diagonalize
from eprchain.dynamics import protocol_initial_state
from eprchain.entanglement import ac_pair_table
from eprchain.trimer import effective_eta, fidelity_period

try:
    from eprchain._kernels import _core
except ImportError:
    _core = None

N_STEPS = 4000
REPEATS = 5
RATIO = 0.33


def kernel_args(protocol):
    spec = build_clean_chain(7, RATIO)
    state0 = protocol_initial_state(spec, protocol)
    spectral = diagonalize(
        build_sector_hamiltonian(spec, state0.basis.n_excitations)
    )
    coeffs = spectral.eigenvectors.T @ state0.amplitudes
    pair_i, pair_j, offsets = ac_pair_table(state0.basis)
    times = np.linspace(0.0, fidelity_period(effective_eta(RATIO)), N_STEPS)
    return (spectral.eigenvalues, spectral.eigenvectors, coeffs, times,
            pair_i, pair_j, offsets)


def best_time(impl, args):
    best = np.inf
    for _ in range(REPEATS):
        start = time.perf_counter()
        impl.trace_eof_fid(*args)
        best = min(best, time.perf_counter() - start)
    return best


def main():
    print(f"{N_STEPS}-step trace at ratio {RATIO}, best of {REPEATS} runs")
    for protocol in ("single", "pair"):
        args = kernel_args(protocol)
        t_py = best_time(_fallback, args)
        line = f"  {protocol:>6}: python {t_py * 1e3:8.2f} ms"
        if _core is not None:
            t_c = best_time(_core, args)
            line += f"   compiled {t_c * 1e3:8.2f} ms   speedup {t_py / t_c:5.1f}x"
            fid_c, eof_c = _core.trace_eof_fid(*args)
            fid_p, eof_p = _fallback.trace_eof_fid(*args)
            line += (f"   max|dfid| {np.abs(fid_c - fid_p).max():.1e}"
                     f"   max|deof| {np.abs(eof_c - eof_p).max():.1e}")
        else:
            line += "   (compiled kernel not built)"
        print(line)


if __name__ == "__main__":
    main()
