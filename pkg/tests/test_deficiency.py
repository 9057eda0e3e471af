from itertools import combinations, product

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import cycle, instances, star
from factorlab import (
    DeficiencyWitness,
    VertexFuncs,
    build_complete,
    check_lemma1,
    check_lemma4,
    has_fractional_factor,
    inner_max,
    slack,
    witness_slack,
)
from factorlab.deficiency import base_value, check_id_deleted
from factorlab.errors import InsufficientEdgesError, InvalidArgumentError, SizeLimitError
from factorlab.graph import Graph, build_empty

SHARP_S = tuple(range(5))
SHARP_T = tuple(range(5, 12))


def brute_inner(graph, vf, S, T, nprime, m):
    """Direct maximum over all U and all H with |H| = min(m, |E(G - U)|)."""
    # each edge's share of sum_T d_H(x) - e_H(T, S), straight from the definition
    contrib = {
        (u, v): (u in T) + (v in T) - ((u in T and v in S) or (v in T and u in S))
        for u, v in graph.edges
    }
    best = None
    for U in combinations(sorted(S), nprime):
        avail = [e for e in graph.edges if e[0] not in U and e[1] not in U]
        f_u = sum(vf.f[u] for u in U)
        for H in combinations(avail, min(m, len(avail))):
            value = f_u + sum(contrib[e] for e in H)
            best = value if best is None else max(best, value)
    return best


def all_pairs(n):
    for labels in product(range(3), repeat=n):
        yield [x for x in range(n) if labels[x] == 1], [x for x in range(n) if labels[x] == 2]


def test_inner_max_sharp_critical(sharp_critical):
    graph, vf = sharp_critical
    r = inner_max(graph, vf, SHARP_S, SHARP_T, 1, 1)
    assert r.value == 3
    assert r.U == (0,)
    assert len(r.H) == 1


def test_inner_max_trivial(sharp_critical):
    graph, vf = sharp_critical
    r = inner_max(graph, vf, (0, 1), (), 0, 0)
    assert (r.value, r.U, r.H) == (0, (), ())


def test_inner_max_cycle_single_edge():
    c4 = cycle(4)
    r = inner_max(c4, VertexFuncs.constant(4, 1, 1), (), (0,), 0, 1)
    assert r.value == 1
    assert r.H[0] in ((0, 1), (0, 3))


def test_inner_max_errors(sharp_critical):
    graph, vf = sharp_critical
    with pytest.raises(InvalidArgumentError):
        inner_max(graph, vf, (0,), (5,), 2, 0)
    with pytest.raises(InvalidArgumentError):
        inner_max(graph, vf, (0, 1), (1, 2), 0, 0)
    with pytest.raises(InsufficientEdgesError):
        inner_max(build_empty(3), VertexFuncs.constant(3, 1, 1), (), (0,), 0, 1)
    assert inner_max(build_empty(3), VertexFuncs.constant(3, 1, 1), (), (0,), 0, 1, strict=False).value == 0


def test_slack_examples(sharp_critical):
    graph, vf = sharp_critical
    assert slack(graph, vf, SHARP_S, SHARP_T, 1, 1) == -2
    assert slack(graph, vf, (), (), 0, 0) == 0
    assert slack(star(3), VertexFuncs.constant(4, 1, 1), (0,), (1, 2, 3), 0, 0) == -2


def test_check_lemma1_sharp_critical(sharp_critical):
    graph, vf = sharp_critical
    v = check_lemma1(graph, vf, 1, 1)
    assert not v.holds
    assert v.witness == DeficiencyWitness(SHARP_S, SHARP_T, (0,), ((1, 2),), -2)


def test_check_lemma1_holds_examples():
    assert check_lemma1(build_complete(9), VertexFuncs.constant(9, 2, 3), 0, 1).holds
    assert check_lemma1(cycle(4), VertexFuncs.constant(4, 1, 1), 0, 0).holds


def test_check_lemma4_examples(sharp_critical):
    graph, _ = sharp_critical
    v = check_lemma4(graph, 2, 3, 1, 1)
    assert not v.holds and v.witness.slack == -2
    assert check_lemma4(build_complete(9), 2, 3, 0, 1).holds
    assert check_lemma4(build_complete(1), 0, 0, 0, 0).holds
    with pytest.raises(InvalidArgumentError):
        check_lemma4(build_complete(3), 3, 2, 0, 0)


def test_size_cap_enforced(monkeypatch):
    monkeypatch.setenv("FACTORLAB_SIZE_CAP", "5")
    with pytest.raises(SizeLimitError):
        check_lemma1(build_complete(6), VertexFuncs.constant(6, 1, 1), 0, 0)


def test_parallel_matches_serial(sharp_critical):
    graph, vf = sharp_critical
    assert check_lemma1(graph, vf, 1, 1, workers=3) == check_lemma1(graph, vf, 1, 1)
    sparse = Graph(9, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (0, 8), (0, 4)])
    vf9 = VertexFuncs.constant(9, 2, 3)
    assert check_lemma1(sparse, vf9, 1, 1, workers=4) == check_lemma1(sparse, vf9, 1, 1)


def test_criterion_id_deleted_sharp_id(sharp_id):
    graph, vf = sharp_id
    v = check_id_deleted(graph, vf, 0)
    assert not v.holds
    assert v.independent_set == (0, 1, 2, 3)
    assert v.witness.slack == -2
    assert witness_slack(graph.remove_vertices(v.independent_set)[0], vf.restrict(range(4, 10)),
                         *[tuple(x - 4 for x in s) for s in (v.witness.S, v.witness.T, v.witness.U)], ()) == -2


def _atlas(n):
    return [Graph(n, g.edges()) for g in nx.graph_atlas_g() if g.number_of_nodes() == n]


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_inner_max_exhaustive(n):
    """Greedy inner maximum against brute force on every graph of order n (up to
    isomorphism), every (S, T), n' <= 2 and m <= 2."""
    for graph in _atlas(n):
        vf = VertexFuncs([1 + x % 2 for x in range(n)], [2 + x % 3 for x in range(n)])
        for S, T in all_pairs(n):
            for nprime in range(min(2, len(S)) + 1):
                for m in range(3):
                    expected = brute_inner(graph, vf, S, T, nprime, m)
                    got = inner_max(graph, vf, S, T, nprime, m, strict=False)
                    assert got.value == expected
                    assert witness_slack(graph, vf, S, T, got.U, got.H) == base_value(graph, vf, S, T) - expected


@given(instances(min_order=6, max_order=6), st.data())
def test_inner_max_order_six(inst, data):
    graph, vf = inst
    labels = data.draw(st.lists(st.integers(0, 2), min_size=6, max_size=6))
    S = [x for x in range(6) if labels[x] == 1]
    T = [x for x in range(6) if labels[x] == 2]
    nprime = data.draw(st.integers(0, min(2, len(S))))
    m = data.draw(st.integers(0, 2))
    assert inner_max(graph, vf, S, T, nprime, m, strict=False).value == brute_inner(graph, vf, S, T, nprime, m)


@given(instances(max_order=6))
def test_m_zero_criterion_matches_solver(inst):
    graph, vf = inst
    assert check_lemma1(graph, vf, 0, 0).holds == has_fractional_factor(graph, vf)[0]


@given(instances(max_order=6), st.integers(0, 2), st.integers(0, 2))
def test_witness_recomputes(inst, nprime, m):
    graph, vf = inst
    v = check_lemma1(graph, vf, nprime, m)
    if not v.holds:
        w = v.witness
        assert w.slack < 0 and len(w.S) >= nprime
        assert witness_slack(graph, vf, w.S, w.T, w.U, w.H) == w.slack
        assert set(w.U) <= set(w.S) and not set(w.S) & set(w.T)


@given(instances(max_order=6), st.data())
def test_slack_antitone(inst, data):
    graph, vf = inst
    labels = data.draw(st.lists(st.integers(0, 2), min_size=graph.order, max_size=graph.order))
    S = [x for x in range(graph.order) if labels[x] == 1]
    T = [x for x in range(graph.order) if labels[x] == 2]
    nprime = data.draw(st.integers(0, len(S)))
    m = data.draw(st.integers(0, 3))
    base = slack(graph, vf, S, T, nprime, m, strict=False)
    assert slack(graph, vf, S, T, nprime, m + 1, strict=False) <= base
    if nprime < len(S):
        assert slack(graph, vf, S, T, nprime + 1, m, strict=False) <= base


@given(instances(max_order=5), st.integers(0, 2))
def test_inner_max_nprime_monotone_on_free_edges(inst, m):
    graph, vf = inst
    S = tuple(range(graph.order))
    for nprime in range(graph.order):
        lo = inner_max(graph, vf, S, (), nprime, m, strict=False).value
        hi = inner_max(graph, vf, S, (), nprime + 1, m, strict=False).value
        assert hi >= lo


def test_witness_roundtrip():
    w = DeficiencyWitness((0, 1), (2,), (0,), ((1, 2),), -3)
    assert DeficiencyWitness.from_dict(w.to_dict()) == w
    assert w.relabel([4, 5, 6]) == DeficiencyWitness((4, 5), (6,), (4,), ((5, 6),), -3)
