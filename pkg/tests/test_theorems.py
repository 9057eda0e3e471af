from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from conftest import graphs
from factorlab import RESULTS, ScenarioParams, VertexFuncs, build_complete, check_hypotheses, verify_implication
from factorlab.errors import InvalidArgumentError
from factorlab.theorems import at_least, critical_threshold, exceeds, id_threshold, order_bound

SHARP_PARAMS = ScenarioParams(2, 3, 1, 1, 1)


def clause(verdict, name):
    return next(c for c in verdict.clauses if c.name == name)


def test_t1_on_sharp_critical(sharp_critical):
    graph, vf = sharp_critical
    v = check_hypotheses(graph, vf, SHARP_PARAMS, "T1")
    assert clause(v, "order").holds
    assert not clause(v, "min_degree").holds
    assert v.failing_clauses() == ["min_degree"]
    assert order_bound(2, 3, 1, 1, 1, -2) == (28, 3)
    assert critical_threshold(12, 2, 3, 1, 1) == (27, 5)


def test_t1_on_k12():
    v = verify_implication(build_complete(12), VertexFuncs.constant(12, 2, 3), SHARP_PARAMS, "T1")
    assert v.hypotheses_hold and v.conclusion_checked and v.consistent


def test_t1_sharp_critical_not_required(sharp_critical):
    graph, vf = sharp_critical
    v = verify_implication(graph, vf, SHARP_PARAMS, "T1")
    assert not v.hypotheses_hold and v.conclusion_checked is None and v.consistent
    forced = verify_implication(graph, vf, SHARP_PARAMS, "T1", force=True)
    assert forced.conclusion_checked is False and forced.consistent
    assert forced.counterexample["removed_vertices"] == [0]


def test_t4_on_sharp_id(sharp_id):
    graph, vf = sharp_id
    p = ScenarioParams(2, 3, 1, 0, 0)
    v = check_hypotheses(graph, vf, p, "T4")
    assert clause(v, "order").holds
    assert not clause(v, "min_degree").holds
    assert id_threshold(10, 2, 3, 1) == (50, 8)


def test_standing_hypothesis_failure_skips_conclusion():
    v = verify_implication(build_complete(5), VertexFuncs.constant(5, 1, 3), ScenarioParams(1, 3, 0), "T1")
    assert not v.hypotheses_hold
    assert clause(v, "standing").holds is False
    assert v.conclusion_checked is None and v.consistent


def test_unknown_theorem():
    with pytest.raises(InvalidArgumentError):
        check_hypotheses(build_complete(3), VertexFuncs.constant(3, 2, 3), SHARP_PARAMS, "T9")


def test_negative_params_rejected():
    with pytest.raises(InvalidArgumentError):
        ScenarioParams(2, 3, -1)


def test_constant_rows_reject_varying_functions():
    vf = VertexFuncs([2] * 13 + [3], [4] * 14)
    p = ScenarioParams(2, 4, 1, 1, 1)
    v = check_hypotheses(build_complete(14), vf, p, "table4.1")
    assert v.failing_clauses() == ["constant"]
    assert check_hypotheses(build_complete(14), vf, p, "T1").hypotheses_hold


def test_complete_graph_rows():
    vf = VertexFuncs.constant(12, 2, 3)
    for which in ("lemma2", "lemma3"):
        v = verify_implication(build_complete(12), vf, SHARP_PARAMS, which, method="criterion")
        assert v.hypotheses_hold and v.conclusion_checked
    v = check_hypotheses(build_complete(9), VertexFuncs.constant(9, 2, 3), SHARP_PARAMS, "lemma2")
    assert not clause(v, "order").holds


def test_every_result_has_known_conclusion():
    assert len(RESULTS) == 22
    assert {r.conclusion for r in RESULTS.values()} == {"critical-deleted", "deleted", "id-deleted"}


@given(st.integers(-50, 50), st.integers(-500, 500), st.integers(1, 40))
def test_threshold_comparisons_are_exact(value, num, den):
    assert exceeds(value, num, den) == (value > Fraction(num, den))
    assert at_least(value, num, den) == (value >= Fraction(num, den))


@given(st.integers(2, 4), st.integers(0, 3), st.integers(0, 2), st.integers(0, 2), st.integers(1, 30))
def test_threshold_formulas_match_rationals(a, extra, nprime, m, n):
    d = extra
    b = a + d + extra
    num, den = critical_threshold(n, a, b, d, nprime)
    assert Fraction(num, den) == Fraction((b - d) * n + (a + d) * nprime, a + b)
    num, den = order_bound(a, b, d, m, nprime, -2)
    assert Fraction(num, den) == Fraction((a + b + 2 * m - 2) * (a + b), a + d) + nprime
    num, den = id_threshold(n, a, b, d)
    assert Fraction(num, den) == Fraction((a + b) * n, b + 2 * a + d)


params = st.builds(
    lambda a, d, gap, nprime, m: ScenarioParams(a, a + d + gap, d, nprime, m),
    st.integers(2, 3), st.integers(0, 2), st.integers(0, 1), st.integers(0, 2), st.integers(0, 2),
)


@st.composite
def dense_graphs(draw):
    n = draw(st.integers(6, 14))
    full = build_complete(n)
    removed = draw(st.lists(st.sampled_from(full.edges), max_size=n, unique=True))
    return full.remove_edges(removed)


@given(dense_graphs(), params, st.data())
def test_t1_monotone_under_edge_addition(graph, p, data):
    vf = VertexFuncs.constant(graph.order, p.a, p.b)
    missing = list(graph.nonadjacent_pairs())
    assume(missing)
    before = check_hypotheses(graph, vf, p, "T1").hypotheses_hold
    u, v = data.draw(st.sampled_from(missing))
    after = check_hypotheses(graph.add_edge(u, v), vf, p, "T1").hypotheses_hold
    assert after or not before


@given(graphs(min_order=2, max_order=12), params)
def test_table2_rows_are_theorems_at_nprime_zero(graph, p):
    vf = VertexFuncs.constant(graph.order, p.a, p.b)
    p0 = ScenarioParams(p.a, p.b, p.delta, 0, p.m)
    for row, theorem in (("table2.1", "T1"), ("table2.2", "T2"), ("table2.3", "T3")):
        left = check_hypotheses(graph, vf, p, row)
        right = check_hypotheses(graph, vf, p0, theorem)
        assert [(c.name, c.holds) for c in left.clauses] == [(c.name, c.holds) for c in right.clauses]
    for row, base in (("table5.1", "table4.1"), ("table5.2", "table4.2"), ("table5.3", "table4.3")):
        left = check_hypotheses(graph, vf, p, row)
        right = check_hypotheses(graph, vf, p0, base)
        assert [(c.name, c.holds) for c in left.clauses] == [(c.name, c.holds) for c in right.clauses]


@given(graphs(min_order=2, max_order=12), params)
def test_table4_rows_match_theorems_for_constant_functions(graph, p):
    vf = VertexFuncs.constant(graph.order, p.a, p.b)
    for row, theorem in (("table4.1", "T1"), ("table4.3", "T3"), ("table6.1", "T4"), ("table6.2", "T5"), ("table6.3", "T6")):
        assert check_hypotheses(graph, vf, p, row).hypotheses_hold == check_hypotheses(graph, vf, p, theorem).hypotheses_hold
