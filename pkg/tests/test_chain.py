import numpy as np
import pytest

from eprchain.chain import (ChainError, ChainSpec, build_clean_chain,
                            build_sector_hamiltonian, closed_form_spectrum,
                            diagonalize, sector_basis)


def test_clean_pattern_n7():
    spec = build_clean_chain(7, 0.5)
    assert spec.couplings == (0.5, 1.0, 0.5, 0.5, 1.0, 0.5)
    assert spec.onsite_energies == (0.0,) * 7
    assert (spec.site_a, spec.site_b, spec.site_c) == (0, 3, 6)


def test_clean_pattern_n11():
    spec = build_clean_chain(11, 0.1)
    assert spec.couplings == (0.1, 1.0, 0.1, 1.0, 0.1, 0.1, 1.0, 0.1, 1.0, 0.1)


def test_zero_ratio_decouples_into_dimers_and_lone_sites():
    spec = build_clean_chain(7, 0.0)
    assert spec.couplings == (0.0, 1.0, 0.0, 0.0, 1.0, 0.0)
    # spectrum of two isolated dimers plus three isolated sites
    spectral = diagonalize(build_sector_hamiltonian(spec, 1))
    np.testing.assert_allclose(
        spectral.eigenvalues, [-1, -1, 0, 0, 0, 1, 1], atol=1e-12
    )


@pytest.mark.parametrize("bad_n", [5, 6, 8, 9, 10, 12])
def test_invalid_length_rejected(bad_n):
    with pytest.raises(ChainError):
        build_clean_chain(bad_n, 0.1)


@pytest.mark.parametrize("bad_ratio", [-0.1, 1.5])
def test_invalid_ratio_rejected(bad_ratio):
    with pytest.raises(ChainError):
        build_clean_chain(7, bad_ratio)


def test_single_excitation_sector_is_tridiagonal():
    spec = build_clean_chain(7, 0.1)
    h = build_sector_hamiltonian(spec, 1).matrix
    assert h.shape == (7, 7)
    np.testing.assert_allclose(np.diag(h, 1), spec.couplings)
    np.testing.assert_allclose(h, np.diag(np.diag(h, 1), 1)
                               + np.diag(np.diag(h, 1), -1))


def test_two_excitation_sector_row_sums_bounded():
    spec = build_clean_chain(7, 0.3)
    h = build_sector_hamiltonian(spec, 2).matrix
    assert h.shape == (21, 21)
    bound = 2 * (spec.strong_coupling + spec.weak_coupling)
    assert np.abs(h).sum(axis=1).max() <= bound + 1e-12


def test_hopping_preserves_excitation_number():
    spec = build_clean_chain(7, 0.4)
    ham = build_sector_hamiltonian(spec, 2)
    states = ham.basis.states
    rows, cols = np.nonzero(ham.matrix)
    for i, j in zip(rows, cols):
        assert bin(states[i]).count("1") == bin(states[j]).count("1")


def test_unsupported_excitation_count():
    spec = build_clean_chain(7, 0.1)
    with pytest.raises(ChainError):
        build_sector_hamiltonian(spec, 3)


def test_spectrum_symmetric_about_zero():
    spec = build_clean_chain(7, 0.1)
    evals = diagonalize(build_sector_hamiltonian(spec, 1)).eigenvalues
    np.testing.assert_allclose(evals, -evals[::-1], atol=1e-10)
    assert abs(evals[3]) < 1e-10


def test_gap_state_energies_ratio_01():
    spec = build_clean_chain(7, 0.1)
    evals = diagonalize(build_sector_hamiltonian(spec, 1)).eigenvalues
    expected = [-1.01480, -1.004987, -0.013935, 0.0, 0.013935, 1.004987,
                1.01480]
    np.testing.assert_allclose(evals, expected, atol=1e-5)


def test_identity_scaled_chain():
    c = 0.7
    spec = ChainSpec(7, 0.0, 0.0, (c,) * 7, (0.0,) * 6)
    evals = diagonalize(build_sector_hamiltonian(spec, 1)).eigenvalues
    np.testing.assert_allclose(evals, c, atol=1e-12)


def test_eigenvector_orthonormality_and_reconstruction():
    spec = build_clean_chain(7, 0.37)
    ham = build_sector_hamiltonian(spec, 2)
    spectral = diagonalize(ham)
    v = spectral.eigenvectors
    assert np.abs(v.T @ v - np.eye(v.shape[0])).max() < 1e-12
    rebuilt = v @ np.diag(spectral.eigenvalues) @ v.T
    assert np.abs(rebuilt - ham.matrix).max() < 1e-10


def test_closed_form_spectrum_matches_numeric():
    for ratio in np.linspace(0.0, 1.0, 100):
        spec = build_clean_chain(7, float(ratio))
        numeric = diagonalize(build_sector_hamiltonian(spec, 1)).eigenvalues
        np.testing.assert_allclose(
            closed_form_spectrum(ratio), numeric, atol=1e-10
        )


def test_closed_form_values():
    np.testing.assert_allclose(
        closed_form_spectrum(0.1)[5], np.sqrt(1.01), atol=1e-12
    )
    np.testing.assert_allclose(
        closed_form_spectrum(0.0), [-1, -1, 0, 0, 0, 1, 1], atol=1e-12
    )


def test_basis_ordering_is_lexicographic():
    basis = sector_basis(7, 2)
    assert basis.dimension == 21
    assert list(basis.states) == sorted(basis.states)
    assert basis.states[0] == 0b0000011
