"""The two sharpness families: graphs sitting just below the degree thresholds,
with the deficiency witness that rules the conclusion out.

Both take ``b = a + delta`` and ``g = a``, ``f = b`` everywhere. When ``t`` is
omitted the smallest valid ``t`` is used.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .deficiency import inner_max, witness_slack
from .errors import InvalidArgumentError
from .factors import VertexFuncs
from .graph import Graph, build_complete, build_empty, degree_stats, is_independent_set, join
from .theorems import (
    ScenarioParams,
    aux_degree,
    critical_threshold,
    exceeds,
    at_least,
    id_order_bound,
    id_threshold,
    order_bound,
)
from .witness import DeficiencyWitness

_MAX_T = 10_000


@dataclass(frozen=True)
class Construction:
    graph: Graph
    vf: VertexFuncs
    params: ScenarioParams
    t: int
    witness: DeficiencyWitness
    independent_set: tuple[int, ...] | None = None

    def to_dict(self) -> dict:
        return {
            "t": self.t,
            "order": self.graph.order,
            "params": self.params.to_dict(),
            "witness": self.witness.to_dict(),
            "independent_set": list(self.independent_set) if self.independent_set is not None else None,
        }


def _check_a(a: int, delta: int):
    if a < 2 or delta < 0:
        raise InvalidArgumentError("need a >= 2 and delta >= 0")


def critical_violations(a: int, delta: int, nprime: int, m: int, t: int) -> list[str]:
    """Inequalities the critical-deleted construction needs but ``t`` fails."""
    b = a + delta
    n = (a + b) * t + 1 + nprime
    bad = []
    num, den = order_bound(a, b, delta, m, nprime, -2)
    if not exceeds(n, num, den):
        bad.append(f"n = {n} > (b+a+2m-2)(b+a)/(a+delta) + n' = {Fraction(num, den)}")
    num, den = aux_degree(a, b, delta, m, nprime)
    if not at_least(nprime + a * t, num, den):
        bad.append(f"delta(G) = {nprime + a * t} >= m + n' + b(b-delta)/(a+delta) = {Fraction(num, den)}")
    return bad


def minimal_critical_t(a: int, delta: int, nprime: int, m: int) -> int:
    _check_a(a, delta)
    for t in range(1, _MAX_T):
        if not critical_violations(a, delta, nprime, m, t):
            return t
    raise InvalidArgumentError("no valid t found")


def build_critical_sharpness(a: int, delta: int, nprime: int, m: int, t: int | None = None) -> Construction:
    """``K_{at+n'}`` joined with ``(bt+1)K_1``: just below every critical-deleted
    degree threshold, and not critical-deleted.

    The witness takes ``S`` = the clique and ``T`` = the independent side; its
    slack is ``-a``.
    """
    _check_a(a, delta)
    if nprime < 0 or m < 0:
        raise InvalidArgumentError("n' and m must be non-negative")
    if t is None:
        t = minimal_critical_t(a, delta, nprime, m)
    if t < 1:
        raise InvalidArgumentError("t must be positive")
    bad = critical_violations(a, delta, nprime, m, t)
    if bad:
        raise InvalidArgumentError(f"t = {t} too small: fails " + "; ".join(bad))
    b = a + delta
    clique = a * t + nprime
    graph = join([build_complete(clique), build_empty(b * t + 1)])
    vf = VertexFuncs.constant(graph.order, a, b)
    S = tuple(range(clique))
    T = tuple(range(clique, graph.order))
    inner = inner_max(graph, vf, S, T, nprime, m)
    witness = DeficiencyWitness(S, T, inner.U, inner.H, witness_slack(graph, vf, S, T, inner.U, inner.H))
    return Construction(graph, vf, ScenarioParams(a, b, delta, nprime, m), t, witness)


def id_violations(a: int, delta: int, m: int, t: int) -> list[str]:
    b = a + delta
    n = 2 + (2 * b + a) * t
    num, den = id_order_bound(a, b, delta, m, -2)
    if not exceeds(n, num, den):
        return [f"n = {n} > (b+2a+delta)(b+a+2m-2)/(a+delta) = {Fraction(num, den)}"]
    return []


def minimal_id_t(a: int, delta: int, m: int) -> int:
    _check_a(a, delta)
    for t in range(1, _MAX_T):
        if not id_violations(a, delta, m, t):
            return t
    raise InvalidArgumentError("no valid t found")


def build_id_sharpness(a: int, delta: int, m: int, t: int | None = None) -> Construction:
    """``(bt+1)K_1``, ``K_{at}``, ``(bt+1)K_1`` joined pairwise: just below the
    ID-deleted degree thresholds, and not ID-deleted.

    Deleting the first independent side leaves ``K_{at}`` joined with the second
    side, where ``S`` = the clique and ``T`` = the remaining side give slack
    ``-a``. The witness is reported in the ids of the full graph.
    """
    _check_a(a, delta)
    if m < 0:
        raise InvalidArgumentError("m must be non-negative")
    if t is None:
        t = minimal_id_t(a, delta, m)
    if t < 1:
        raise InvalidArgumentError("t must be positive")
    bad = id_violations(a, delta, m, t)
    if bad:
        raise InvalidArgumentError(f"t = {t} too small: fails " + "; ".join(bad))
    b = a + delta
    side = b * t + 1
    graph = join([build_empty(side), build_complete(a * t), build_empty(side)])
    vf = VertexFuncs.constant(graph.order, a, b)
    I = tuple(range(side))
    assert is_independent_set(graph, I)
    sub, kept = graph.remove_vertices(I)
    sub_vf = vf.restrict(kept)
    S = tuple(range(a * t))
    T = tuple(range(a * t, sub.order))
    inner = inner_max(sub, sub_vf, S, T, 0, m)
    local = DeficiencyWitness(S, T, inner.U, inner.H, witness_slack(sub, sub_vf, S, T, inner.U, inner.H))
    return Construction(graph, vf, ScenarioParams(a, b, delta, 0, m), t, local.relabel(kept), I)


@dataclass(frozen=True)
class Chain:
    """``lower (<|<=) value < upper`` as exact rationals."""

    name: str
    value: int
    upper: Fraction
    lower: Fraction
    lower_strict: bool = True

    @property
    def holds(self) -> bool:
        below = self.value < self.upper
        above = self.value > self.lower if self.lower_strict else self.value >= self.lower
        return below and above

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "value": self.value,
            "upper": str(self.upper),
            "lower": str(self.lower),
            "lower_strict": self.lower_strict,
            "holds": self.holds,
        }


def _pair_max(graph: Graph) -> int:
    degs = graph.degrees()
    return min(max(degs[u], degs[v]) for u, v in graph.nonadjacent_pairs())


def critical_chains(c: Construction) -> list[Chain]:
    """threshold > metric > threshold - 1 for delta(G) and the nonadjacent-pair
    maximum; for sigma2 the lower end is non-strict."""
    p = c.params
    thr = Fraction(*critical_threshold(c.graph.order, p.a, p.b, p.delta, p.nprime))
    stats = degree_stats(c.graph)
    return [
        Chain("min_degree", stats.min_degree, thr, thr - 1),
        Chain("max_degree_pair", _pair_max(c.graph), thr, thr - 1),
        Chain("sigma2", stats.sigma2, 2 * thr, 2 * thr - 1, lower_strict=False),
    ]


def id_chains(c: Construction) -> list[Chain]:
    p = c.params
    thr = Fraction(*id_threshold(c.graph.order, p.a, p.b, p.delta))
    stats = degree_stats(c.graph)
    return [
        Chain("min_degree", stats.min_degree, thr, thr - 1),
        Chain("max_degree_pair", _pair_max(c.graph), thr, thr - 1),
        Chain("sigma2", stats.sigma2, 2 * thr, 2 * thr - 1),
    ]
