import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pstnet.errors import CentralityError, ParameterError
from pstnet.pipeline import build_system, design
from pstnet.solver import (
    build_hamiltonian,
    cyclic_closed_form,
    phase_pattern,
)
from tests.conftest import MATRIX


@pytest.mark.parametrize("family,n", MATRIX)
def test_phase_constraint_and_pairing(family, n, system_for):
    system = system_for(family, n)
    plan = design(system, theta=0.3, t0=1.7)
    pattern = phase_pattern(system.data, system.resolve_target(None), system.scheme)
    for jt, w in zip(plan.tilde, pattern.weights):
        # e^{-i(t0 Jt + theta)} must cancel the eigenspace weight's phase
        lhs = np.exp(-1j * (plan.t0 * jt + plan.theta))
        assert abs(lhs - np.conj(w) / abs(w)) < 1e-9
    # the designed Hamiltonian must be Hermitian with conjugate-paired classes
    h = build_hamiltonian(system.scheme, plan)
    assert np.abs(h - h.conj().T).max() < 1e-12 * max(1.0, np.abs(h).max())
    for i, ip in enumerate(system.scheme.inverse_pairing):
        assert abs(plan.couplings[ip] - np.conj(plan.couplings[i])) < 1e-12


@pytest.mark.parametrize("family,n", MATRIX)
def test_t0_scaling(family, n, system_for):
    system = system_for(family, n)
    p1 = design(system, theta=0.2, t0=1.0)
    p2 = design(system, theta=0.2, t0=2.5, strategy="custom", n_choices=p1.n_choices)
    j1 = np.array(p1.couplings) * p1.t0
    j2 = np.array(p2.couplings) * p2.t0
    assert np.abs(j1 - j2).max() < 1e-12


def test_theta_shift_only_moves_identity_coupling(system_for):
    # adding delta to theta shifts every mode by -delta/t0, which lands
    # entirely on the identity-class coupling
    system = system_for("v8n", 3)
    base = design(system, theta=0.0, t0=1.0)
    delta = 0.37
    shifted = design(system, theta=delta, t0=1.0, strategy="custom",
                     n_choices=base.n_choices)
    diff = np.array(shifted.couplings) - np.array(base.couplings)
    assert abs(diff[0] + delta) < 1e-12
    assert np.abs(diff[1:]).max() < 1e-12


def test_paper_cyclic_matches_closed_form():
    for m in (2, 3, 4, 5, 6):
        system = build_system("cyclic", 2 * m)
        for theta in (0.0, math.pi / 7):
            for t0 in (1.0, 2.0):
                plan = design(system, theta=theta, t0=t0, strategy="paper-cyclic")
                want = cyclic_closed_form(m, theta, t0)
                assert np.abs(np.array(plan.couplings) - want).max() < 1e-12


def test_paper_cyclic_rejected_off_cycle(system_for):
    with pytest.raises(ParameterError):
        design(system_for("u6n", 2), strategy="paper-cyclic")


def test_custom_wrong_length(system_for):
    with pytest.raises(ParameterError):
        design(system_for("u6n", 2), strategy="custom", n_choices=(0, 1))


def test_noncentral_target_rejected(system_for):
    system = system_for("u6n", 2)
    with pytest.raises(CentralityError):
        design(system, target="b")


def test_clifford_minimal_pattern(system_for):
    # theta=0: mode couplings vanish on linear irreps, +/-pi on the large one;
    # the coupling on the central gamma word is exactly zero
    system = system_for("clifford", 4)
    plan = design(system, theta=0.0, t0=1.0)
    tilde = np.array(plan.tilde)
    large = [l for l, m in enumerate(system.data.multiplicities) if m > 1]
    assert len(large) == 1
    linear = [l for l in range(len(tilde)) if l not in large]
    assert np.abs(tilde[linear]).max() < 1e-12
    assert abs(abs(tilde[large[0]]) - math.pi) < 1e-12
    assert abs(plan.couplings[-1]) == 0.0
    assert abs(plan.couplings[0] - math.pi / 2) < 1e-12
    assert abs(plan.couplings[1] + math.pi / 2) < 1e-12


def test_cycle_strategy_plan_real_symmetric(system_for):
    system = system_for("cyclic", 4)
    plan = design(system, theta=0.0, strategy="paper-cyclic")
    h = build_hamiltonian(system.scheme, plan)
    assert np.abs(h.imag).max() < 1e-15
    assert np.abs(h - h.T).max() < 1e-15


def test_invalid_t0(system_for):
    with pytest.raises(ParameterError):
        design(system_for("u6n", 2), t0=0.0)


@settings(max_examples=25, deadline=None)
@given(theta=st.floats(-math.pi, math.pi), t0=st.floats(0.1, 10.0))
def test_plan_phase_identity_property(theta, t0):
    system = build_system("dihedral_even", 4)
    plan = design(system, theta=theta, t0=t0)
    pattern = phase_pattern(system.data, system.resolve_target(None), system.scheme)
    for jt, phi in zip(plan.tilde, pattern.phi):
        assert abs(np.exp(-1j * (t0 * jt + theta)) - np.exp(1j * phi)) < 1e-9
