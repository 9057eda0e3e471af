from fractions import Fraction
from itertools import product

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from conftest import cycle, instances, star
from factorlab import (
    FractionalAssignment,
    VertexFuncs,
    build_complete,
    build_empty,
    factor_defect_witness,
    has_fractional_factor,
    join,
    verify_assignment,
)
from factorlab.deficiency import witness_slack
from factorlab.errors import InvalidArgumentError, InvalidStateError
from factorlab.factors import factor_slack
from factorlab.flow import feasible_circulation

HALF = Fraction(1, 2)


def criterion_holds(graph, vf):
    n = graph.order
    for labels in product(range(3), repeat=n):
        S = [x for x in range(n) if labels[x] == 1]
        T = [x for x in range(n) if labels[x] == 2]
        if factor_slack(graph, vf, S, T) < 0:
            return False
    return True


def test_star_is_infeasible():
    ok, h = has_fractional_factor(star(3), VertexFuncs.constant(4, 1, 1))
    assert not ok and h is None


def test_cycle_gets_half_everywhere():
    ok, h = has_fractional_factor(cycle(4), VertexFuncs.constant(4, 1, 1))
    assert ok
    assert all(h[e] == HALF for e in cycle(4).edges)


def test_k4_full_factor():
    ok, h = has_fractional_factor(build_complete(4), VertexFuncs.constant(4, 3, 3))
    assert ok and all(h[e] == 1 for e in build_complete(4).edges)


def test_zero_lower_bound_on_k2():
    ok, h = has_fractional_factor(build_complete(2), VertexFuncs.constant(2, 0, 1))
    assert ok and verify_assignment(build_complete(2), VertexFuncs.constant(2, 0, 1), h)


def test_domain_mismatch():
    with pytest.raises(InvalidArgumentError):
        has_fractional_factor(cycle(4), VertexFuncs.constant(3, 1, 1))


def test_verify_assignment_examples():
    c4 = cycle(4)
    vf = VertexFuncs.constant(4, 1, 1)
    assert verify_assignment(c4, vf, FractionalAssignment({e: HALF for e in c4.edges}))
    assert not verify_assignment(c4, vf, FractionalAssignment({e: Fraction(1) for e in c4.edges}))
    k2 = build_complete(2)
    assert verify_assignment(k2, VertexFuncs.constant(2, 1, 1), FractionalAssignment({(0, 1): Fraction(1)}))
    with pytest.raises(InvalidArgumentError):
        verify_assignment(c4, vf, FractionalAssignment({(0, 1): HALF}))


def test_verify_rejects_out_of_range_edge_value():
    k2 = build_complete(2)
    assert not verify_assignment(k2, VertexFuncs.constant(2, 0, 3), FractionalAssignment({(0, 1): Fraction(3, 2)}))


def test_defect_witness_star():
    w = factor_defect_witness(star(3), VertexFuncs.constant(4, 1, 1))
    assert (w.S, w.T, w.U, w.H, w.slack) == ((0,), (1, 2, 3), (), (), -2)


def test_defect_witness_clique_join():
    graph = join([build_complete(2), build_empty(4)])
    w = factor_defect_witness(graph, VertexFuncs.constant(6, 2, 3))
    assert (w.S, w.T, w.slack) == ((0, 1), (2, 3, 4, 5), -2)


def test_defect_witness_isolated_pair():
    w = factor_defect_witness(build_empty(2), VertexFuncs.constant(2, 1, 1))
    assert (w.S, w.T, w.slack) == ((), (0, 1), -2)


def test_defect_witness_on_feasible_instance():
    with pytest.raises(InvalidStateError):
        factor_defect_witness(cycle(4), VertexFuncs.constant(4, 1, 1))


def test_circulation_with_lower_bounds():
    flows = feasible_circulation(3, [(0, 1, 2, 3), (1, 2, 1, 5), (2, 0, 0, 4)])
    assert flows is not None and flows[0] == flows[1] == flows[2] >= 2
    assert feasible_circulation(2, [(0, 1, 2, 3), (1, 0, 0, 1)]) is None


@given(instances(max_order=6))
def test_solver_matches_criterion(inst):
    graph, vf = inst
    ok, h = has_fractional_factor(graph, vf)
    assert ok == criterion_holds(graph, vf)
    if ok:
        assert verify_assignment(graph, vf, h)
        assert h.is_half_integral()
        assert set(h.values.values()) <= {0, HALF, 1}
    else:
        w = factor_defect_witness(graph, vf)
        assert w.slack < 0
        assert witness_slack(graph, vf, w.S, w.T, w.U, w.H) == w.slack


@given(instances(max_order=6), st.data())
def test_adding_an_edge_keeps_feasibility(inst, data):
    graph, vf = inst
    missing = list(graph.nonadjacent_pairs())
    assume(missing)
    ok, _ = has_fractional_factor(graph, vf)
    assume(ok)
    u, v = data.draw(st.sampled_from(missing))
    assert has_fractional_factor(graph.add_edge(u, v), vf)[0]


@given(instances(max_order=7))
def test_zero_lower_bounds_always_feasible(inst):
    graph, vf = inst
    ok, h = has_fractional_factor(graph, VertexFuncs([0] * graph.order, vf.f))
    assert ok
