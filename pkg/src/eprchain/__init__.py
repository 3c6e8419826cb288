"""Bell-pair generation on dimerized ABC spin chains.

Exact sector dynamics, entanglement-of-formation tracking, closed-form
trimer analytics and seeded disorder-robustness ensembles, with a
compiled evolution kernel (pure-Python fallback selected at import).
"""

__version__ = "0.1.0"

from ._kernels import BACKEND as kernel_backend
from .chain import (ChainSpec, SectorBasis, SectorHamiltonian,
                    SpectralDecomposition, build_clean_chain,
                    build_sector_hamiltonian, closed_form_spectrum,
                    diagonalize, sector_basis)
from .disorder import DisorderConfig, EnsembleStats, perturb, run_ensemble
from .dynamics import (DynamicsTrace, evolve, fidelity, inject_pair,
                       inject_single, trace_dynamics)
from .entanglement import (EntanglementResult, TwoQubitDensity, concurrence,
                           eof_between_AC, reduce_to_AC)
from .experiments import (PlatformEntry, SweepResult, find_arch_peaks,
                          load_platforms, physical_entangling_time,
                          ratio_sweep)
from .state import QuantumState, basis_state
from .trimer import (TrimerModel, effective_eta, fidelity_period,
                     trimer_fidelity, trimer_model, trimer_state_at)

__all__ = [
    "ChainSpec", "SectorBasis", "SectorHamiltonian", "SpectralDecomposition",
    "build_clean_chain", "build_sector_hamiltonian", "closed_form_spectrum",
    "diagonalize", "sector_basis",
    "QuantumState", "basis_state",
    "DynamicsTrace", "evolve", "fidelity", "inject_pair", "inject_single",
    "trace_dynamics",
    "EntanglementResult", "TwoQubitDensity", "concurrence", "eof_between_AC",
    "reduce_to_AC",
    "TrimerModel", "effective_eta", "fidelity_period", "trimer_fidelity",
    "trimer_model", "trimer_state_at",
    "DisorderConfig", "EnsembleStats", "perturb", "run_ensemble",
    "PlatformEntry", "SweepResult", "find_arch_peaks", "load_platforms",
    "physical_entangling_time", "ratio_sweep",
    "kernel_backend",
]
