"""Normalized amplitude vectors over a fixed-excitation basis sector."""

from dataclasses import dataclass

import numpy as np

from .chain import SectorBasis

NORM_TOL = 1e-9


class SectorMismatchError(ValueError):
    """Two states or a state and an operator live in different sectors."""


@dataclass(frozen=True)
class QuantumState:
    """Complex amplitudes over a SectorBasis, unit 2-norm."""

    basis: SectorBasis
    amplitudes: np.ndarray

    def __post_init__(self):
        amps = np.asarray(self.amplitudes, dtype=complex)
        if amps.shape != (self.basis.dimension,):
            raise ValueError(
                f"amplitude vector of length {amps.shape} does not match "
                f"basis dimension {self.basis.dimension}"
            )
        norm = np.linalg.norm(amps)
        if abs(norm - 1.0) > NORM_TOL:
            raise ValueError(f"state is not normalized (norm = {norm!r})")
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)


def basis_state(basis, mask):
    """Unit amplitude on a single occupation bitmask."""
    amps = np.zeros(basis.dimension, dtype=complex)
    amps[basis.index_of(mask)] = 1.0
    return QuantumState(basis, amps)


def check_same_sector(a, b):
    if a.basis != b.basis:
        raise SectorMismatchError(
            "states belong to different sectors "
            f"({a.basis.n_sites} sites / {a.basis.n_excitations} exc vs "
            f"{b.basis.n_sites} sites / {b.basis.n_excitations} exc)"
        )
