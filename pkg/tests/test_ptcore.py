import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ptqs import linalg, oracle, ptcore
from ptqs.errors import (
    BrokenPhaseError,
    ExceptionalPointError,
    NotSymmetricError,
    UnsupportedCouplingError,
)
from ptqs.linalg import IDENTITY, PARITY, adjoint, inverse, max_abs_diff
from ptqs.ptcore import Phase, PTParams

# frozen from an independent evaluation of arcsin(1/4), sec and tan at that angle
ALPHA_REF = 0.252680255142
SEC_REF = 1.032795558989
TAN_REF = 0.258198889747


def test_params_reject_non_finite():
    with pytest.raises(ValueError):
        PTParams(float("nan"), 1.0, 0.0)


def test_general_hamiltonian():
    H = ptcore.build_general_hamiltonian(PTParams(1, 1, 0, 0))
    assert max_abs_diff(H, [[1, 1], [1, 1]]) == 0
    p = PTParams(2.0, 1.0, math.pi / 5, math.pi / 7)
    H = ptcore.build_general_hamiltonian(p)
    assert abs(linalg.det(H) - 3.0) <= 1e-14
    assert max_abs_diff(ptcore.pt_commutator(H), 0) <= 1e-14


@settings(max_examples=200, deadline=None)
@given(
    st.floats(-5, 5),
    st.floats(-5, 5),
    st.floats(-2 * math.pi, 2 * math.pi),
    st.floats(-2 * math.pi, 2 * math.pi),
)
def test_general_hamiltonian_is_pt_symmetric(rho, sigma, varphi, phi):
    H = ptcore.build_general_hamiltonian(PTParams(rho, sigma, varphi, phi))
    assert max_abs_diff(ptcore.pt_commutator(H), 0) <= 1e-14 * max(1.0, abs(rho), abs(sigma))


def test_symmetric_hamiltonian():
    H = ptcore.build_symmetric_hamiltonian(PTParams(1, 2, math.pi / 6))
    expected = [[math.sqrt(3) / 2 + 0.5j, 2], [2, math.sqrt(3) / 2 - 0.5j]]
    assert max_abs_diff(H, expected) <= 1e-15
    assert max_abs_diff(H, H.T) == 0
    assert max_abs_diff(ptcore.build_symmetric_hamiltonian(PTParams(1.5, 0.7, 0.0)), [[1.5, 0.7], [0.7, 1.5]]) == 0
    with pytest.raises(NotSymmetricError):
        ptcore.build_symmetric_hamiltonian(PTParams(1, 2, 0.3, math.pi / 4))
    flipped = ptcore.build_symmetric_hamiltonian(PTParams(1, 2, 0.3, math.pi))
    assert flipped[0, 1] == -2


def test_classify_phase():
    assert ptcore.classify_phase(PTParams(1, 2, math.pi / 6)).phase is Phase.UNBROKEN
    assert ptcore.classify_phase(PTParams(1, 0.5, math.pi / 2)).phase is Phase.BROKEN
    assert ptcore.classify_phase(PTParams(1, 0.5, math.pi / 6)).phase is Phase.EXCEPTIONAL
    assert ptcore.classify_phase(PTParams(1, 2, math.pi / 6)).discriminant == pytest.approx(3.75)
    # sigma = 0 with a Hermitian diagonal is already diagonal
    assert ptcore.classify_phase(PTParams(1, 0, 0)).phase is Phase.UNBROKEN
    assert ptcore.classify_phase(PTParams(1, 0, 0.2)).phase is Phase.BROKEN


def test_decompose_errors():
    with pytest.raises(BrokenPhaseError) as info:
        ptcore.decompose(PTParams(1, 0.5, math.pi / 2))
    plus, minus = info.value.eigenvalues
    assert plus == pytest.approx(complex(0, math.sqrt(3) / 2), abs=1e-15)
    assert minus == plus.conjugate()
    with pytest.raises(ExceptionalPointError):
        ptcore.decompose(PTParams(1, 0.5, math.pi / 6))
    with pytest.raises(UnsupportedCouplingError):
        ptcore.decompose(PTParams(0.2, 1.0, 0.1, math.pi))
    with pytest.raises(ValueError):
        ptcore.spectral_decompose(IDENTITY, PTParams(1, 2, 0.1))


def test_decompose_examples(ref_spec):
    spec = ptcore.decompose(PTParams(1, 1, math.pi / 6))
    assert spec.E_plus == pytest.approx(math.sqrt(3), abs=1e-15)
    assert spec.E_minus == pytest.approx(0.0, abs=1e-15)
    herm = ptcore.decompose(PTParams(1, 2, 0))
    assert (herm.E_plus, herm.E_minus, herm.alpha) == (3.0, -1.0, 0.0)
    assert max_abs_diff(herm.A, herm.V) <= 1e-15
    assert max_abs_diff(herm.eta_plus, IDENTITY) == 0

    assert ref_spec.alpha == pytest.approx(ALPHA_REF, abs=1e-12)
    assert ref_spec.E_plus == pytest.approx(math.sqrt(3) / 2 + math.sqrt(3.75), abs=1e-14)
    u = ref_spec.u_plus
    assert abs(np.vdot(u, u) - SEC_REF) <= 1e-12
    assert ref_spec.sec_alpha == pytest.approx(SEC_REF, abs=1e-12)
    assert ref_spec.tan_alpha == pytest.approx(TAN_REF, abs=1e-12)


def test_sigma_zero_diagonal():
    spec = ptcore.decompose(PTParams(1.5, 0.0, 0.0))
    assert (spec.E_plus, spec.E_minus, spec.alpha, spec.beta) == (1.5, 1.5, 0.0, 0.0)


def test_metric_examples(ref_spec, draws):
    assert max_abs_diff(ptcore.build_metric(ptcore.decompose(PTParams(2, 1, 0))), IDENTITY) == 0
    expected = [[SEC_REF, -1j * TAN_REF], [1j * TAN_REF, SEC_REF]]
    assert max_abs_diff(ptcore.build_metric(ref_spec), expected) <= 1e-12
    completeness = sum(np.outer(u, u.conj()) for u in ref_spec.mass_basis)
    assert max_abs_diff(inverse(completeness), ref_spec.eta_plus) <= 1e-12
    for spec, _ in draws:
        assert abs(linalg.det(spec.eta_plus) - 1) <= 1e-10


def test_c_operator_examples(draws):
    herm = ptcore.decompose(PTParams(2, 1, 0))
    assert max_abs_diff(ptcore.build_c_operator(herm), PARITY) == 0
    for spec, _ in draws:
        assert max_abs_diff(linalg.commutator(spec.C, spec.hamiltonian), 0) <= 1e-12
        assert abs(linalg.det(spec.C) + 1) <= 1e-10


def test_hermitian_equivalent(ref_spec):
    herm = ptcore.decompose(PTParams(2, 1, 0))
    eq = ptcore.build_hermitian_equivalent(herm)
    assert max_abs_diff(eq.G, IDENTITY) == 0
    assert max_abs_diff(eq.H_prime, herm.hamiltonian) <= 1e-15

    eq = ptcore.build_hermitian_equivalent(ref_spec)
    assert max_abs_diff(eq.H_prime, [[0.866025403784, 1.936491673104], [1.936491673104, 0.866025403784]]) <= 1e-12
    assert max_abs_diff(eq.H_prime, ref_spec.H_prime) <= 1e-15
    assert max_abs_diff(eq.V @ eq.H_prime @ inverse(eq.V), np.diag([ref_spec.E_plus, ref_spec.E_minus])) <= 1e-12
    assert max_abs_diff(ref_spec.A, eq.V @ eq.G) <= 1e-12
    r = 1 / math.sqrt(2)
    assert max_abs_diff(eq.u_prime_plus, [r, r]) == 0
    assert max_abs_diff(eq.u_prime_minus, [r, -r]) == 0


def test_spectral_invariants(draws):
    for spec, _ in draws:
        p, H = spec.params, spec.hamiltonian
        assert spec.E_plus >= spec.E_minus
        assert abs(math.sin(spec.alpha) - p.rho * math.sin(p.varphi) / p.sigma) <= 1e-12
        assert max_abs_diff(spec.A @ H @ spec.A_inv, np.diag([spec.E_plus, spec.E_minus])) <= 1e-12
        assert max_abs_diff(PARITY @ H @ inverse(PARITY), adjoint(H)) <= 1e-12
        assert max_abs_diff(spec.eta_plus @ H @ inverse(spec.eta_plus), adjoint(H)) <= 1e-12
        assert max_abs_diff(spec.C @ spec.C, IDENTITY) <= 1e-12
        assert max_abs_diff(spec.G @ spec.G, spec.eta_plus) <= 1e-12
        assert max_abs_diff(spec.G @ H @ inverse(spec.G), spec.H_prime) <= 1e-12
        assert max_abs_diff(spec.H_prime, adjoint(spec.H_prime)) == 0
        assert max_abs_diff(spec.A, spec.V @ spec.G) <= 1e-12
        assert max_abs_diff(spec.A @ spec.A, IDENTITY) <= 1e-12
        assert abs(linalg.det(spec.A) + 1) <= 1e-12
        assert abs(spec.beta - 2 * math.sqrt(p.discriminant)) <= 1e-12
        lhs = IDENTITY + spec.eta_plus @ spec.eta_plus
        assert max_abs_diff(lhs, 2 * spec.sec_alpha * spec.eta_plus) <= 1e-12


def test_completeness_and_flavor_reconstruction(draws):
    for spec, _ in draws:
        completeness = sum(np.outer(u, u.conj()) for u in spec.mass_basis)
        assert max_abs_diff(completeness, inverse(spec.eta_plus)) <= 1e-12
        gram = [[np.vdot(x, y) for y in spec.mass_basis] for x in spec.mass_basis]
        assert max_abs_diff(gram, spec.eta_plus) <= 1e-12
        for i, e in enumerate(IDENTITY):
            rebuilt = spec.A_inv[i, 0] * spec.u_plus + spec.A_inv[i, 1] * spec.u_minus
            assert max_abs_diff(rebuilt, e) <= 1e-12


def test_eigenvalues_match_characteristic_polynomial(draws):
    for spec, _ in draws:
        plus, minus = oracle.eigen_by_charpoly(spec.hamiltonian)
        assert max(abs(plus - spec.E_plus), abs(minus - spec.E_minus)) <= 1e-12


def test_spectral_data_is_read_only(ref_spec):
    with pytest.raises(ValueError):
        ref_spec.eta_plus[0, 0] = 0
