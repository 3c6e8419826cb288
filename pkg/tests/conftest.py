import numpy as np
import pytest

from eprchain.chain import build_clean_chain


def full_space_hamiltonian(spec):
    """Brute-force 2^N Hamiltonian from raising/lowering operators.

    Built by kron products, independent of the sector construction; full
    index bit i is the occupation of site i (site 0 least significant).
    """
    n = spec.n_sites
    eye = np.eye(2)
    number = np.diag([0.0, 1.0])
    raise_op = np.array([[0.0, 0.0], [1.0, 0.0]])   # |1><0|
    lower_op = raise_op.T

    def site_op(op, site):
        mats = [eye] * n
        mats[site] = op
        out = np.array([[1.0]])
        for m in reversed(mats):                     # site 0 least significant
            out = np.kron(out, m)
        return out

    h = np.zeros((2 ** n, 2 ** n))
    for i, eps in enumerate(spec.onsite_energies):
        h += eps * site_op(number, i)
    for bond, j in enumerate(spec.couplings):
        hop = site_op(raise_op, bond) @ site_op(lower_op, bond + 1)
        h += j * (hop + hop.T)
    return h


def embed_in_full_space(state):
    """Lift a sector state into the 2^N amplitude vector."""
    full = np.zeros(2 ** state.basis.n_sites, dtype=complex)
    for idx, mask in enumerate(state.basis.states):
        full[mask] = state.amplitudes[idx]
    return full


@pytest.fixture
def clean7():
    return build_clean_chain(7, 0.1)
