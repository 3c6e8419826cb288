import numpy as np
import pytest
from scipy.linalg import expm

from eprchain.chain import (build_clean_chain, build_sector_hamiltonian,
                            diagonalize, sector_basis)
from eprchain.dynamics import trace_dynamics
from eprchain.entanglement import eof_between_AC
from eprchain.trimer import (SQRT2, TRIMER_EIGENVECTORS, effective_eta,
                             fidelity_period, trimer_fidelity,
                             trimer_hamiltonian, trimer_model,
                             trimer_state_at)


def numeric_gap_eta(ratio):
    """Independent eta: positive gap-state energy of the 7-site chain over sqrt(2)."""
    spec = build_clean_chain(7, ratio)
    evals = diagonalize(build_sector_hamiltonian(spec, 1)).eigenvalues
    return evals[4] / SQRT2


def test_eta_limits_and_values():
    assert effective_eta(0.0) == 0.0
    np.testing.assert_allclose(effective_eta(0.1), 0.009854, atol=5e-7)
    np.testing.assert_allclose(effective_eta(0.33), 0.09520, atol=5e-6)


@pytest.mark.parametrize("ratio", [0.05, 0.1, 0.2, 0.33, 0.37, 0.52, 0.9])
def test_eta_matches_numeric_gap(ratio):
    np.testing.assert_allclose(
        effective_eta(ratio), numeric_gap_eta(ratio), atol=1e-10
    )


def test_fidelity_period():
    np.testing.assert_allclose(fidelity_period(1.0 / SQRT2), np.pi)
    np.testing.assert_allclose(
        fidelity_period(effective_eta(0.10)), 225.4, atol=0.05
    )
    # half period sits near the quoted entangling time at ratio 0.52
    assert abs(fidelity_period(effective_eta(0.52)) / 2 - 5.57) < 0.5
    with pytest.raises(ValueError, match="no finite revival"):
        fidelity_period(0.0)


def test_trimer_eigensystem_matches_printed_vectors():
    eta = 0.3
    evals, evecs = np.linalg.eigh(trimer_hamiltonian(eta))
    np.testing.assert_allclose(evals, [-SQRT2 * eta, 0.0, SQRT2 * eta],
                               atol=1e-12)
    for k in range(3):
        ref = TRIMER_EIGENVECTORS[:, k]
        sign = np.sign(evecs[:, k] @ ref)
        np.testing.assert_allclose(sign * evecs[:, k], ref, atol=1e-12)


def test_centre_state_expansion_coefficients():
    centre = np.array([0.0, 1.0, 0.0])
    a_minus = centre @ TRIMER_EIGENVECTORS[:, 0]
    a_zero = centre @ TRIMER_EIGENVECTORS[:, 1]
    a_plus = centre @ TRIMER_EIGENVECTORS[:, 2]
    np.testing.assert_allclose([a_minus, a_plus], [1 / SQRT2, 1 / SQRT2],
                               atol=1e-15)
    assert a_zero == 0.0


def test_site_energy_assignments():
    # coefficient-weighted energies of the site states over the trimer
    # eigenbasis: magnitude sqrt(2) eta on the outer sites, 0 at the
    # centre, so the gap between neighbouring assignments is sqrt(2) eta
    eta = 0.25
    energies = np.array([-SQRT2 * eta, 0.0, SQRT2 * eta])
    assigned = TRIMER_EIGENVECTORS @ energies
    np.testing.assert_allclose(np.abs(assigned), [SQRT2 * eta, 0.0,
                                                  SQRT2 * eta], atol=1e-12)
    # that gap equals the zero-mode / gap-state splitting of the chain
    ratio = 0.2
    evals = diagonalize(
        build_sector_hamiltonian(build_clean_chain(7, ratio), 1)
    ).eigenvalues
    np.testing.assert_allclose(SQRT2 * effective_eta(ratio),
                               evals[4] - evals[3], atol=1e-12)


def test_trimer_fidelity_against_matrix_exponential():
    eta = effective_eta(0.2)
    h = trimer_hamiltonian(eta)
    centre = np.array([0.0, 1.0, 0.0], dtype=complex)
    for t in np.linspace(0.0, 2 * fidelity_period(eta), 1000):
        psi = expm(-1j * h * t) @ centre
        np.testing.assert_allclose(
            trimer_fidelity(t, eta), abs(centre @ psi) ** 2, atol=1e-10
        )


def test_trimer_fidelity_endpoints():
    eta = effective_eta(0.1)
    t_f = fidelity_period(eta)
    np.testing.assert_allclose(trimer_fidelity(0.0, eta), 1.0)
    np.testing.assert_allclose(trimer_fidelity(t_f / 2, eta), 0.0, atol=1e-12)
    np.testing.assert_allclose(trimer_fidelity(t_f, eta), 1.0, atol=1e-12)


def test_trimer_state_single_bell_time():
    eta = 0.4
    t_bell = np.pi / (2 * SQRT2 * eta)
    state = trimer_state_at(t_bell, eta, "single")
    basis = sector_basis(3, 1)
    expected = np.zeros(3, dtype=complex)
    expected[basis.index_of(0b001)] = -1j / SQRT2
    expected[basis.index_of(0b100)] = -1j / SQRT2
    np.testing.assert_allclose(state.amplitudes, expected, atol=1e-12)


def test_trimer_state_pair_bell_time():
    eta = 0.4
    t_bell = np.pi / (2 * SQRT2 * eta)
    state = trimer_state_at(t_bell, eta, "pair")
    basis = sector_basis(3, 2)
    expected = np.zeros(3, dtype=complex)
    expected[basis.index_of(0b011)] = -1j / SQRT2   # sites A, B occupied
    expected[basis.index_of(0b110)] = -1j / SQRT2   # sites B, C occupied
    np.testing.assert_allclose(state.amplitudes, expected, atol=1e-12)


def test_trimer_state_initial_conditions():
    eta = 0.4
    single0 = trimer_state_at(0.0, eta, "single")
    assert single0.amplitudes[sector_basis(3, 1).index_of(0b010)] == 1.0
    pair0 = trimer_state_at(0.0, eta, "pair")
    assert pair0.amplitudes[sector_basis(3, 2).index_of(0b101)] == 1.0
    with pytest.raises(ValueError):
        trimer_state_at(0.0, eta, "triple")


def test_particle_hole_eof_identity():
    eta = 0.17
    for t in np.linspace(0.0, fidelity_period(eta), 60):
        eof_single = eof_between_AC(trimer_state_at(t, eta, "single"))
        eof_pair = eof_between_AC(trimer_state_at(t, eta, "pair"))
        assert abs(eof_single - eof_pair) < 1e-12


def test_full_chain_extrema_match_trimer_at_low_ratio():
    spec = build_clean_chain(7, 0.1)
    trace = trace_dynamics(spec, "single")
    # the analytic minimum at t_F / 2 and maximum at t_F each have a
    # full-chain local extremum within 2% of t_F
    fid = trace.fidelity
    t_min = trace.times[np.argmin(fid)]
    assert abs(t_min - trace.t_F / 2) < 0.02 * trace.t_F
    local_max = list(np.flatnonzero((fid[1:-1] >= fid[:-2])
                                    & (fid[1:-1] > fid[2:])) + 1)
    if fid[-1] > fid[-2]:          # revival peak at (or just past) t_F
        local_max.append(len(fid) - 1)
    nearest = trace.times[local_max][np.argmin(
        np.abs(trace.times[local_max] - trace.t_F))]
    assert abs(nearest - trace.t_F) < 0.02 * trace.t_F
    # and the revival itself is nearly complete there
    assert fid[-1] >= 0.99


def test_trimer_model_bundle():
    model = trimer_model(0.2)
    np.testing.assert_allclose(model.t_F, np.pi / (SQRT2 * model.eta))
    np.testing.assert_allclose(model.energies,
                               [-SQRT2 * model.eta, 0, SQRT2 * model.eta])
