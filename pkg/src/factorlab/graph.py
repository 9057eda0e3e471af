"""Immutable simple graphs on dense integer vertex ids, plus the degree statistics
the degree-condition predicates read."""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import total_ordering
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import InvalidArgumentError, SizeLimitError

DEFAULT_SIZE_CAP = 16


def size_cap() -> int:
    """Largest order accepted by exhaustive checkers (env ``FACTORLAB_SIZE_CAP``)."""
    raw = os.environ.get("FACTORLAB_SIZE_CAP")
    if raw is None:
        return DEFAULT_SIZE_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise InvalidArgumentError(f"FACTORLAB_SIZE_CAP must be an integer, got {raw!r}")
    if cap < 1:
        raise InvalidArgumentError("FACTORLAB_SIZE_CAP must be positive")
    return cap


def require_within_cap(order: int, what: str = "exhaustive check") -> None:
    cap = size_cap()
    if order > cap:
        raise SizeLimitError(f"{what} limited to order <= {cap}, got {order}")


@total_ordering
class _Infinity:
    """Sentinel larger than every integer; sigma2 of a complete graph."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return False

    def __gt__(self, other):
        return other is not self

    def __hash__(self):
        return hash("factorlab.INFINITY")

    def __repr__(self):
        return "INFINITY"


INFINITY = _Infinity()


class Graph:
    """A simple undirected graph on vertices ``0..n-1``.

    Edges are stored as sorted pairs ``(u, v)`` with ``u < v``; the edge tuple is
    kept in lexicographic order so edge indices are stable.
    """

    __slots__ = ("_n", "_edges", "_adj", "_masks", "_index")

    def __init__(self, order: int, edges: Iterable[tuple[int, int]] = ()):
        if order < 0:
            raise InvalidArgumentError("order must be non-negative")
        seen = set()
        for u, v in edges:
            if not (0 <= u < order and 0 <= v < order):
                raise InvalidArgumentError(f"edge ({u}, {v}) out of range for order {order}")
            if u == v:
                raise InvalidArgumentError(f"self-loop at vertex {u}")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise InvalidArgumentError(f"parallel edge {e}")
            seen.add(e)
        self._n = order
        self._edges = tuple(sorted(seen))
        adj = [set() for _ in range(order)]
        masks = [0] * order
        for u, v in self._edges:
            adj[u].add(v)
            adj[v].add(u)
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        self._adj = tuple(frozenset(a) for a in adj)
        self._masks = tuple(masks)
        self._index = {e: i for i, e in enumerate(self._edges)}

    @property
    def order(self) -> int:
        return self._n

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return self._edges

    @property
    def size(self) -> int:
        return len(self._edges)

    def vertices(self) -> range:
        return range(self._n)

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def neighbor_mask(self, v: int) -> int:
        return self._masks[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self._adj]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def edge_index(self, u: int, v: int) -> int:
        return self._index[(u, v) if u < v else (v, u)]

    def is_complete(self) -> bool:
        return self.size == self._n * (self._n - 1) // 2

    def nonadjacent_pairs(self) -> Iterator[tuple[int, int]]:
        for u, v in combinations(range(self._n), 2):
            if v not in self._adj[u]:
                yield u, v

    def degree_into(self, v: int, mask: int) -> int:
        """Number of neighbours of ``v`` inside the vertex bitmask ``mask``."""
        return (self._masks[v] & mask).bit_count()

    def remove_edges(self, removed: Iterable[tuple[int, int]]) -> Graph:
        drop = {(u, v) if u < v else (v, u) for u, v in removed}
        missing = drop.difference(self._index)
        if missing:
            raise InvalidArgumentError(f"edges not in graph: {sorted(missing)}")
        return Graph(self._n, (e for e in self._edges if e not in drop))

    def add_edge(self, u: int, v: int) -> Graph:
        return Graph(self._n, self._edges + ((u, v),))

    def remove_vertices(self, removed: Iterable[int]) -> tuple[Graph, list[int]]:
        """Delete vertices and relabel the rest densely, preserving order.

        Returns the new graph and ``kept``, where ``kept[i]`` is the old id of new
        vertex ``i``.
        """
        drop = set(removed)
        for v in drop:
            self._check_vertex(v)
        kept = [v for v in range(self._n) if v not in drop]
        new_id = {old: i for i, old in enumerate(kept)}
        edges = [(new_id[u], new_id[v]) for u, v in self._edges if u in new_id and v in new_id]
        return Graph(len(kept), edges), kept

    def _check_vertex(self, v: int) -> None:
        if not (isinstance(v, int) and 0 <= v < self._n):
            raise InvalidArgumentError(f"vertex {v!r} out of range for order {self._n}")

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self):
        return hash((self._n, self._edges))

    def __repr__(self):
        return f"Graph(order={self._n}, edges={list(self._edges)})"


def build_complete(n: int) -> Graph:
    if n < 1:
        raise InvalidArgumentError("complete graph needs n >= 1")
    return Graph(n, combinations(range(n), 2))


def build_empty(n: int) -> Graph:
    if n < 1:
        raise InvalidArgumentError("empty graph needs n >= 1")
    return Graph(n)


def join(parts: Sequence[Graph]) -> Graph:
    """Disjoint union of ``parts`` plus every edge between two distinct parts.

    Part ``i`` occupies a contiguous id block following part ``i-1``, so a
    three-part join ``A v B v C`` links A to C as well as to B.
    """
    if not parts:
        raise InvalidArgumentError("join needs at least one part")
    offsets = []
    total = 0
    for p in parts:
        offsets.append(total)
        total += p.order
    edges = []
    for p, off in zip(parts, offsets):
        edges.extend((u + off, v + off) for u, v in p.edges)
    for i, j in combinations(range(len(parts)), 2):
        for u in range(parts[i].order):
            for v in range(parts[j].order):
                edges.append((u + offsets[i], v + offsets[j]))
    return Graph(total, edges)


@dataclass(frozen=True)
class DegreeStats:
    min_degree: int
    sigma2: object  # int, or INFINITY when there is no nonadjacent pair


def degree_stats(g: Graph) -> DegreeStats:
    degs = g.degrees()
    min_degree = min(degs) if degs else 0
    sigma2 = INFINITY
    for u, v in g.nonadjacent_pairs():
        s = degs[u] + degs[v]
        if sigma2 is INFINITY or s < sigma2:
            sigma2 = s
    return DegreeStats(min_degree, sigma2)


def is_independent_set(g: Graph, vertices: Iterable[int]) -> bool:
    vs = list(vertices)
    mask = 0
    for v in vs:
        g._check_vertex(v)
        mask |= 1 << v
    return all(not (g.neighbor_mask(v) & mask) for v in vs)


def independent_sets(g: Graph) -> Iterator[tuple[int, ...]]:
    """All independent sets (including the empty set) in lexicographic order.

    Backtracking with adjacency pruning: a vertex is only branched on when it is
    not adjacent to anything already chosen.
    """
    n = g.order
    masks = [g.neighbor_mask(v) for v in range(n)]

    def extend(chosen: tuple[int, ...], start: int, blocked: int):
        yield chosen
        for v in range(start, n):
            if not (blocked >> v) & 1:
                yield from extend(chosen + (v,), v + 1, blocked | masks[v] | (1 << v))

    yield from extend((), 0, 0)
