"""Exact fractional (g,f)-factor decisions.

Each undirected edge ``uv`` becomes two unit arcs ``u' -> v''`` and
``v' -> u''`` between a left and a right copy of the vertex set. The left copy
of ``x`` must send between ``g(x)`` and ``f(x)`` units, the right copy must
receive between ``g(x)`` and ``f(x)``. An integral circulation in that network
averages back to an edge weighting with values in {0, 1/2, 1}; conversely any
fractional factor yields a fractional circulation, hence an integral one.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Mapping, Sequence

from .errors import InvalidArgumentError, InvalidStateError
from .flow import FlowNetwork
from .graph import Graph
from .witness import DeficiencyWitness

@dataclass(frozen=True)
class VertexFuncs:
    """Integer lower/upper degree targets ``g`` and ``f``, one entry per vertex."""

    g: tuple[int, ...]
    f: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "g", tuple(int(x) for x in self.g))
        object.__setattr__(self, "f", tuple(int(x) for x in self.f))
        if len(self.g) != len(self.f):
            raise InvalidArgumentError("g and f must have the same length")
        for x, (lo, hi) in enumerate(zip(self.g, self.f)):
            if lo < 0 or hi < lo:
                raise InvalidArgumentError(f"need 0 <= g <= f at vertex {x}, got g={lo}, f={hi}")

    @classmethod
    def constant(cls, n: int, a: int, b: int) -> VertexFuncs:
        return cls((a,) * n, (b,) * n)

    def __len__(self):
        return len(self.g)

    def restrict(self, kept: Sequence[int]) -> VertexFuncs:
        return VertexFuncs(tuple(self.g[v] for v in kept), tuple(self.f[v] for v in kept))

    def is_constant(self, a: int, b: int) -> bool:
        return all(x == a for x in self.g) and all(x == b for x in self.f)

    def satisfies_band(self, a: int, b: int, delta: int) -> bool:
        """``a <= g(x) <= f(x) - delta <= b - delta`` at every vertex."""
        return all(a <= lo and lo <= hi - delta and hi <= b for lo, hi in zip(self.g, self.f))

    def check_domain(self, graph: Graph) -> None:
        if len(self.g) != graph.order:
            raise InvalidArgumentError(
                f"vertex functions cover {len(self.g)} vertices, graph has {graph.order}"
            )


@dataclass(frozen=True)
class FractionalAssignment:
    """Edge weights keyed by sorted edge ``(u, v)``."""

    values: Mapping[tuple[int, int], Fraction] = field(default_factory=dict)

    def __getitem__(self, edge):
        u, v = edge
        return self.values[(u, v) if u < v else (v, u)]

    def degree(self, graph: Graph, x: int) -> Fraction:
        return sum((self[(x, y)] for y in graph.neighbors(x)), Fraction(0))

    def is_half_integral(self) -> bool:
        return all(2 * w == int(2 * w) for w in self.values.values())


class FactorNetwork:
    """Doubled flow network of one graph, reusable across many ``(g, f)`` queries.

    Only capacities change between queries, so ``solve`` can be called
    repeatedly (e.g. once per deleted edge set) without rebuilding topology.
    """

    SS, SK, S, T = 0, 1, 2, 3

    def __init__(self, graph: Graph):
        self.graph = graph
        n = graph.order
        left = lambda x: 4 + x  # noqa: E731
        right = lambda x: 4 + n + x  # noqa: E731
        net = FlowNetwork(4 + 2 * n)
        self._ss_left = [net.add_arc(self.SS, left(x), 0) for x in range(n)]
        self._ss_t = net.add_arc(self.SS, self.T, 0)
        self._edge_arcs = []
        for u, v in graph.edges:
            self._edge_arcs.append((net.add_arc(left(u), right(v), 1), net.add_arc(left(v), right(u), 1)))
        self._s_left = [net.add_arc(self.S, left(x), 0) for x in range(n)]
        self._right_t = [net.add_arc(right(x), self.T, 0) for x in range(n)]
        self._right_sk = [net.add_arc(right(x), self.SK, 0) for x in range(n)]
        self._s_sk = net.add_arc(self.S, self.SK, 0)
        self._t_s = net.add_arc(self.T, self.S, 0)
        self._net = net
        self._degrees = graph.degrees()

    def solve(self, g: Sequence[int], f: Sequence[int], removed: Sequence[int] = ()) -> list[int] | None:
        """Integral doubled flow per edge (0, 1 or 2 = twice ``h(e)``), or ``None``.

        ``removed`` lists edge indices treated as absent.
        """
        # d^h(x) <= d(x), so a lower bound above the remaining degree is fatal
        degs = self._degrees
        if removed:
            degs = list(degs)
            for k in removed:
                u, v = self.graph.edges[k]
                degs[u] -= 1
                degs[v] -= 1
        for lo, d in zip(g, degs):
            if lo > d:
                return None
        cap = list(self._net.cap)
        total_g = 0
        for x, (lo, hi) in enumerate(zip(g, f)):
            cap[self._ss_left[x]] = lo
            cap[self._right_sk[x]] = lo
            cap[self._s_left[x]] = hi - lo
            cap[self._right_t[x]] = hi - lo
            total_g += lo
        for k in removed:
            a1, a2 = self._edge_arcs[k]
            cap[a1] = cap[a2] = 0
        # warm start: saturate the bypass SS -> t -> s -> SK; t -> s is uncapacitated
        # in the circulation, and 2|E| bounds any flow it can really carry
        cap[self._ss_t ^ 1] = total_g
        cap[self._t_s] = 2 * len(self._edge_arcs) + 1
        cap[self._t_s ^ 1] = total_g
        cap[self._s_sk ^ 1] = total_g
        # then direct SS -> u' -> v'' -> SK hops, one arc per edge on the first
        # pass so the load spreads as halves before any edge takes a full unit
        need = total_g
        for one_per_edge in (True, False):
            for (u, v), (a1, a2) in zip(self.graph.edges, self._edge_arcs):
                for x, y, a in ((u, v, a1), (v, u, a2)):
                    if cap[a] and cap[self._ss_left[x]] and cap[self._right_sk[y]]:
                        cap[a] = 0
                        cap[a ^ 1] = 1
                        cap[self._ss_left[x]] -= 1
                        cap[self._ss_left[x] ^ 1] += 1
                        cap[self._right_sk[y]] -= 1
                        cap[self._right_sk[y] ^ 1] += 1
                        need -= 1
                        if one_per_edge:
                            break
        if need and self._net.augment(self.SS, self.SK, cap, need) < need:
            return None
        return [cap[a1 ^ 1] + cap[a2 ^ 1] for a1, a2 in self._edge_arcs]

    def assignment(self, doubled: Sequence[int], removed: Sequence[int] = ()) -> FractionalAssignment:
        skip = set(removed)
        return FractionalAssignment(
            {e: Fraction(w, 2) for k, (e, w) in enumerate(zip(self.graph.edges, doubled)) if k not in skip}
        )


def has_fractional_factor(graph: Graph, vf: VertexFuncs) -> tuple[bool, FractionalAssignment | None]:
    """Decide whether ``graph`` has a fractional ``(g, f)``-factor.

    Returns ``(True, h)`` with a half-integral witness, or ``(False, None)``.
    """
    vf.check_domain(graph)
    net = FactorNetwork(graph)
    doubled = net.solve(vf.g, vf.f)
    if doubled is None:
        return False, None
    return True, net.assignment(doubled)


def verify_assignment(graph: Graph, vf: VertexFuncs, h: FractionalAssignment) -> bool:
    vf.check_domain(graph)
    if set(h.values) != set(graph.edges):
        raise InvalidArgumentError("assignment must be defined on exactly the edge set")
    if any(not (0 <= w <= 1) for w in h.values.values()):
        return False
    deg = [Fraction(0)] * graph.order
    for (u, v), w in h.values.items():
        deg[u] += w
        deg[v] += w
    return all(lo <= d <= hi for lo, d, hi in zip(vf.g, deg, vf.f))


def factor_slack(graph: Graph, vf: VertexFuncs, S, T) -> int:
    """``f(S) + d_{G-S}(T) - g(T)`` for disjoint vertex sets."""
    smask = 0
    for v in S:
        smask |= 1 << v
    rest = ((1 << graph.order) - 1) & ~smask
    return (
        sum(vf.f[v] for v in S)
        + sum(graph.degree_into(x, rest) for x in T)
        - sum(vf.g[x] for x in T)
    )


def best_defect_sets(graph: Graph, vf: VertexFuncs) -> DeficiencyWitness:
    """Minimum of ``f(S) + d_{G-S}(T) - g(T)`` over disjoint pairs.

    For each ``S`` the best ``T`` collects exactly the vertices outside ``S``
    whose degree in ``G - S`` falls short of ``g``, so only ``2^n`` sets ``S``
    are scanned: by size, then lexicographically, keeping the first minimum.
    """
    n = graph.order
    full = (1 << n) - 1
    masks = [graph.neighbor_mask(x) for x in range(n)]
    best = None
    for size in range(n + 1):
        for S in combinations(range(n), size):
            smask = 0
            fs = 0
            for v in S:
                smask |= 1 << v
                fs += vf.f[v]
            rest = full & ~smask
            value = fs
            T = []
            for x in range(n):
                if not (smask >> x) & 1:
                    c = (masks[x] & rest).bit_count() - vf.g[x]
                    if c < 0:
                        value += c
                        T.append(x)
            if best is None or value < best.slack:
                best = DeficiencyWitness(S, tuple(T), slack=value)
    return best


def factor_defect_witness(graph: Graph, vf: VertexFuncs) -> DeficiencyWitness:
    """Deficiency certificate for an instance with no fractional factor."""
    vf.check_domain(graph)
    best = best_defect_sets(graph, vf)
    if best.slack >= 0:
        raise InvalidStateError("instance has a fractional factor; no defect witness exists")
    return best
