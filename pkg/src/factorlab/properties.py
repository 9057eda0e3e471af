"""Definition-level checkers for the deleted, critical-deleted and ID-deleted
properties.

Each one literally removes every admissible vertex set and edge set and asks the
flow solver for a fractional factor. Deleting edges never needs a rebuilt
network: the removed arcs just get zero capacity. A solve is skipped only when
an earlier factor of the same graph already puts zero weight on every removed
edge, because that factor is itself a witness for the smaller graph.

When a graph has fewer than ``m`` edges, all of them are deleted.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import InvalidArgumentError
from .factors import FactorNetwork, VertexFuncs
from .graph import Graph, independent_sets

_POOL_SIZE = 8


@dataclass(frozen=True)
class PropertyCheck:
    """Outcome of a brute-force check; on failure names the first failing removal."""

    holds: bool
    removed_vertices: tuple[int, ...] | None = None
    removed_edges: tuple[tuple[int, int], ...] | None = None
    solves: int = 0

    def to_dict(self) -> dict:
        return {
            "holds": self.holds,
            "removed_vertices": list(self.removed_vertices) if self.removed_vertices is not None else None,
            "removed_edges": [list(e) for e in self.removed_edges] if self.removed_edges is not None else None,
            "solves": self.solves,
        }


def check_deleted(graph: Graph, vf: VertexFuncs, m: int) -> PropertyCheck:
    if m < 0:
        raise InvalidArgumentError("m must be non-negative")
    vf.check_domain(graph)
    net = FactorNetwork(graph)
    k = min(m, graph.size)
    pool: list[list[int]] = []
    solves = 0
    for removed in combinations(range(graph.size), k):
        if any(all(flow[i] == 0 for i in removed) for flow in pool):
            continue
        flow = net.solve(vf.g, vf.f, removed)
        solves += 1
        if flow is None:
            return PropertyCheck(False, (), tuple(graph.edges[i] for i in removed), solves)
        pool.append(flow)
        if len(pool) > _POOL_SIZE:
            pool.pop(0)
    return PropertyCheck(True, solves=solves)


def is_deleted(graph: Graph, vf: VertexFuncs, m: int) -> bool:
    """Whether a fractional factor survives the deletion of any ``m`` edges."""
    return check_deleted(graph, vf, m).holds


def _check_after_vertex_removals(graph, vf, m, removals) -> PropertyCheck:
    solves = 0
    for W in removals:
        sub, kept = graph.remove_vertices(W)
        result = check_deleted(sub, vf.restrict(kept), m)
        solves += result.solves
        if not result.holds:
            H = tuple(tuple(sorted((kept[u], kept[v]))) for u, v in result.removed_edges)
            return PropertyCheck(False, tuple(W), H, solves)
    return PropertyCheck(True, solves=solves)


def check_critical_deleted(graph: Graph, vf: VertexFuncs, nprime: int, m: int) -> PropertyCheck:
    vf.check_domain(graph)
    if nprime < 0 or m < 0:
        raise InvalidArgumentError("n' and m must be non-negative")
    if nprime > graph.order:
        raise InvalidArgumentError(f"cannot delete {nprime} vertices from a graph of order {graph.order}")
    return _check_after_vertex_removals(graph, vf, m, combinations(range(graph.order), nprime))


def is_critical_deleted(graph: Graph, vf: VertexFuncs, nprime: int, m: int) -> bool:
    """Whether ``G - W`` is fractional ``(g, f, m)``-deleted for every ``n'``-set ``W``."""
    return check_critical_deleted(graph, vf, nprime, m).holds


def check_id_deleted(graph: Graph, vf: VertexFuncs, m: int) -> PropertyCheck:
    vf.check_domain(graph)
    if m < 0:
        raise InvalidArgumentError("m must be non-negative")
    return _check_after_vertex_removals(graph, vf, m, independent_sets(graph))


def is_id_deleted(graph: Graph, vf: VertexFuncs, m: int) -> bool:
    """Whether ``G - I`` is fractional ``(g, f, m)``-deleted for every independent set ``I``,
    the empty set included."""
    return check_id_deleted(graph, vf, m).holds
