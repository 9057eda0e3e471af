from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import cycle, instances, star
from factorlab import (
    VertexFuncs,
    build_complete,
    build_empty,
    check_critical_deleted,
    check_id_deleted,
    check_lemma1,
    has_fractional_factor,
    is_critical_deleted,
    is_deleted,
    is_id_deleted,
)
from factorlab.errors import InvalidArgumentError
from factorlab.graph import independent_sets


def naive_deleted(graph, vf, m):
    for H in combinations(graph.edges, min(m, graph.size)):
        if not has_fractional_factor(graph.remove_edges(H), vf)[0]:
            return False
    return True


def naive_critical(graph, vf, nprime, m):
    for W in combinations(range(graph.order), nprime):
        sub, kept = graph.remove_vertices(W)
        if not naive_deleted(sub, vf.restrict(kept), m):
            return False
    return True


def test_deleted_examples():
    assert is_deleted(cycle(4), VertexFuncs.constant(4, 1, 1), 1)
    assert is_deleted(build_complete(9), VertexFuncs.constant(9, 2, 3), 1)
    assert not is_deleted(star(3), VertexFuncs.constant(4, 1, 1), 0)


def test_critical_deleted_sharp_critical(sharp_critical):
    graph, vf = sharp_critical
    r = check_critical_deleted(graph, vf, 1, 1)
    assert not r.holds
    assert r.removed_vertices == (0,)
    assert len(r.removed_edges) == 1


def test_critical_deleted_k12():
    r = check_critical_deleted(build_complete(12), VertexFuncs.constant(12, 2, 3), 1, 1)
    assert r.holds
    assert r.solves <= 12 * 55


def test_critical_deleted_rejects_large_nprime():
    with pytest.raises(InvalidArgumentError):
        is_critical_deleted(cycle(4), VertexFuncs.constant(4, 1, 1), 5, 0)


def test_deleting_every_vertex():
    assert is_critical_deleted(build_complete(2), VertexFuncs.constant(2, 1, 1), 2, 0)


def test_id_deleted_sharp_id(sharp_id):
    graph, vf = sharp_id
    r = check_id_deleted(graph, vf, 0)
    assert not r.holds
    assert r.removed_vertices == (0, 1, 2, 3)


def test_id_deleted_examples():
    assert is_id_deleted(build_complete(5), VertexFuncs.constant(5, 1, 2), 0)
    r = check_id_deleted(build_empty(3), VertexFuncs.constant(3, 1, 1), 0)
    assert not r.holds and r.removed_vertices == ()


def test_fewer_edges_than_m_deletes_all():
    k2 = build_complete(2)
    assert is_deleted(k2, VertexFuncs.constant(2, 0, 1), 5)
    assert not is_deleted(k2, VertexFuncs.constant(2, 1, 1), 5)


@given(instances(max_order=6))
def test_zero_deletions_is_factor_existence(inst):
    graph, vf = inst
    assert is_deleted(graph, vf, 0) == has_fractional_factor(graph, vf)[0]
    assert is_critical_deleted(graph, vf, 0, 0) == has_fractional_factor(graph, vf)[0]


@given(instances(max_order=6), st.integers(0, 2), st.integers(0, 2))
def test_pool_shortcut_matches_naive(inst, nprime, m):
    graph, vf = inst
    nprime = min(nprime, graph.order)
    assert is_critical_deleted(graph, vf, nprime, m) == naive_critical(graph, vf, nprime, m)


@given(instances(max_order=6), st.integers(0, 2), st.integers(0, 2))
def test_brute_force_matches_criterion(inst, nprime, m):
    graph, vf = inst
    nprime = min(nprime, graph.order)
    assert is_critical_deleted(graph, vf, nprime, m) == check_lemma1(graph, vf, nprime, m).holds


@given(instances(max_order=6), st.integers(0, 2))
def test_antitone_in_m(inst, m):
    graph, vf = inst
    if graph.size > m and is_deleted(graph, vf, m + 1):
        assert is_deleted(graph, vf, m)


@given(instances(max_order=6), st.integers(0, 1))
def test_id_deleted_implies_deleted(inst, m):
    graph, vf = inst
    if is_id_deleted(graph, vf, m):
        assert is_deleted(graph, vf, m)


@given(instances(max_order=6), st.integers(0, 1))
def test_id_deleted_reports_first_failing_set(inst, m):
    graph, vf = inst
    r = check_id_deleted(graph, vf, m)
    failing = [I for I in independent_sets(graph)
               if not naive_deleted(*_minus(graph, vf, I), m)]
    assert r.holds == (not failing)
    if failing:
        assert r.removed_vertices == failing[0]


def _minus(graph, vf, I):
    sub, kept = graph.remove_vertices(I)
    return sub, vf.restrict(kept)
