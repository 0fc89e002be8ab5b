import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pstnet.dynamics import (
    FockBasis,
    QuditState,
    fidelity_trace,
    fock_oracle,
    propagator,
    second_quantized,
    verify_qudit_transfer,
)
from pstnet.errors import CapacityError, ParameterError
from pstnet.pipeline import build_system, design
from pstnet.solver import CouplingPlan, build_hamiltonian
from tests.conftest import MATRIX


def _zero_plan(system):
    d1 = system.scheme.num_classes
    modes = len(system.data.multiplicities)
    return CouplingPlan(theta=0.0, t0=1.0, n_choices=(0,) * modes,
                        tilde=(0.0,) * modes, couplings=(0j,) * d1,
                        target_class=system.default_target,
                        target_vertex=system.singleton_vertex(system.default_target),
                        strategy="custom")


def test_propagator_identity_at_zero(system_for):
    system = system_for("u6n", 2)
    plan = design(system, theta=0.1)
    u = propagator(system, plan, 0.0)
    assert np.abs(u - np.eye(system.scheme.N)).max() < 1e-12


@settings(max_examples=20, deadline=None)
@given(t=st.floats(-20.0, 20.0))
def test_propagator_unitary_at_random_times(t):
    system = build_system("dihedral_even", 4)
    plan = design(system, theta=0.2, t0=1.3)
    u = propagator(system, plan, t)
    assert np.abs(u.conj().T @ u - np.eye(system.scheme.N)).max() < 1e-10


def test_trace_initial_condition_and_grid(system_for):
    system = system_for("v8n", 3)
    plan = design(system, theta=0.0)
    trace = fidelity_trace(system, plan, steps=100)
    assert trace.times[0] == 0.0
    target = plan.target_vertex
    assert abs(trace.amplitude[0] - (1.0 if target == 0 else 0.0)) < 1e-12
    assert np.isclose(trace.times, plan.t0).any()


def test_zero_plan_is_stationary(system_for):
    system = system_for("dihedral_even", 4)
    plan = _zero_plan(system)
    stay = fidelity_trace(system, plan, target=0)
    assert np.abs(np.abs(stay.amplitude) - 1.0).max() < 1e-12
    go = fidelity_trace(system, plan)
    assert np.abs(go.amplitude).max() < 1e-12


def test_trace_matches_propagator_column(system_for):
    system = system_for("u6n", 3)
    plan = design(system, theta=0.4, t0=0.9)
    trace = fidelity_trace(system, plan, steps=7)
    for t, f in zip(trace.times[:5], trace.amplitude[:5]):
        u = propagator(system, plan, t)
        assert abs(u[plan.target_vertex, 0] - f) < 1e-12


def test_fock_basis_shape_and_round_trip():
    basis = FockBasis(4, 3)
    assert len(basis) == math.comb(4 + 3 - 1, 3)
    for i, occ in enumerate(basis.states):
        assert sum(occ) == 3
        assert basis.index[occ] == i


def test_fock_cap():
    with pytest.raises(CapacityError):
        FockBasis(100, 5, cap=1000)


@pytest.mark.parametrize("family,n", MATRIX)
def test_oracle_equivalence_single_boson(family, n, system_for):
    system = system_for(family, n)
    plan = design(system, theta=0.25, t0=1.1)
    h = build_hamiltonian(system.scheme, plan)
    basis = FockBasis(system.scheme.N, 1)
    final = fock_oracle(h, 1, basis.single_site_state(0), plan.t0)
    col = np.zeros(system.scheme.N, dtype=complex)
    for i, occ in enumerate(basis.states):
        col[occ.index(1)] = final[i]
    u = propagator(system, plan, plan.t0)
    assert np.abs(col - u[:, 0]).max() <= 1e-9


def test_boson_number_conserved():
    system = build_system("u6n", 1)
    plan = design(system, theta=0.0)
    h = build_hamiltonian(system.scheme, plan)
    basis = FockBasis(system.scheme.N, 2)
    final = fock_oracle(h, 2, basis.single_site_state(0), 3.7)
    assert abs(np.linalg.norm(final) - 1.0) < 1e-12
    number = sum(abs(a) ** 2 * sum(occ) for a, occ in zip(final, basis.states))
    assert abs(number - 2.0) < 1e-12


def test_two_site_interference():
    # one boson on each end of a single bond: at the 50:50 time t = pi/(4J)
    # the "one on each site" output amplitude interferes to zero
    # (Hong-Ou-Mandel pattern)
    j = 0.8
    h = np.array([[0.0, j], [j, 0.0]])
    basis = FockBasis(2, 2)
    initial = np.zeros(len(basis), dtype=complex)
    initial[basis.index[(1, 1)]] = 1.0
    final = fock_oracle(h, 2, initial, math.pi / (4 * j))
    assert abs(final[basis.index[(1, 1)]]) < 1e-12
    # the two bosons bunch with equal weight on either site
    assert abs(abs(final[basis.index[(2, 0)]]) ** 2 - 0.5) < 1e-12
    h2 = second_quantized(h, basis)
    assert np.abs(h2 - h2.conj().T).max() < 1e-12


def test_mode_factorization(system_for):
    # (b_1^+)^2 evolves into the symmetrized product of one-particle
    # amplitudes: sqrt(2) f_j f_k off-diagonal, f_j^2 on-diagonal
    system = system_for("u6n", 2)
    plan = design(system, theta=0.6, t0=1.0)
    h = build_hamiltonian(system.scheme, plan)
    f = propagator(system, plan, plan.t0)[:, 0]
    basis = FockBasis(system.scheme.N, 2)
    final = fock_oracle(h, 2, basis.single_site_state(0), plan.t0)
    for i, occ in enumerate(basis.states):
        sites = [k for k, c in enumerate(occ) if c]
        if len(sites) == 1:
            want = f[sites[0]] ** 2
        else:
            want = math.sqrt(2) * f[sites[0]] * f[sites[1]]
        assert abs(final[i] - want) <= 1e-9


def test_qudit_transfer_levels():
    for family, n in (("cyclic", 4), ("u6n", 2)):
        system = build_system(family, n)
        plan = design(system, theta=math.pi / 5, t0=1.0)
        for d in (1, 2):
            fid = verify_qudit_transfer(system, plan, d)
            assert fid >= 1.0 - 1e-8


def test_qudit_custom_state_and_validation(system_for):
    system = system_for("cyclic", 4)
    plan = design(system, theta=0.0)
    fid = verify_qudit_transfer(system, plan, 2, QuditState((1.0, 1j, -0.5)))
    assert fid >= 1.0 - 1e-8
    with pytest.raises(ParameterError):
        verify_qudit_transfer(system, plan, 0)
    with pytest.raises(ParameterError):
        verify_qudit_transfer(system, plan, 2, QuditState((1.0, 0.0)))
