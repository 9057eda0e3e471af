"""Degree-condition predicates for the critical-deleted and ID-deleted sufficiency
results, and implication checks against the property oracles.

Every threshold is a rational ``num / den`` with ``den > 0`` and is compared by
cross-multiplication, so no clause ever touches floating point. Order bounds
are strict, degree bounds are non-strict.

Result ids:

* ``T1``..``T3`` and ``table4.1``..``table4.3``: critical-deleted conclusions
  (minimum degree, degree of nonadjacent pairs, degree sum ``sigma2``).
* ``table2.*`` and ``table5.*``: the same conditions with ``n' = 0``, concluding
  fractional ``(g, f, m)``-deleted.
* ``T4``..``T6`` and ``table6.*``: ID-deleted conclusions.
* ``lemma2``, ``lemma3`` (critical-deleted) and ``cor4``, ``cor5`` (deleted):
  complete graphs above an order bound.

Table rows 4, 5 and 6 and ``lemma3``/``cor5`` additionally require ``g = a``
and ``f = b`` everywhere. The order bound of rows ``table4.2``/``table5.2`` is
encoded as printed (with ``b + a - 2 + 2m``), which is weaker than the
``b + a + 2m - 1`` of ``T2``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .errors import InvalidArgumentError
from .factors import VertexFuncs
from .graph import INFINITY, Graph, degree_stats, require_within_cap


@dataclass(frozen=True)
class ScenarioParams:
    a: int
    b: int
    delta: int = 0
    nprime: int = 0
    m: int = 0

    def __post_init__(self):
        for name in ("a", "b", "delta", "nprime", "m"):
            if getattr(self, name) < 0:
                raise InvalidArgumentError(f"{name} must be non-negative")

    def standing_hypothesis(self) -> bool:
        """``b - delta >= a >= 2``."""
        return self.b - self.delta >= self.a >= 2

    def to_dict(self) -> dict:
        return {"a": self.a, "b": self.b, "delta": self.delta, "nprime": self.nprime, "m": self.m}


@dataclass(frozen=True)
class Clause:
    name: str
    holds: bool
    detail: str = ""

    def to_dict(self) -> dict:
        return {"name": self.name, "holds": self.holds, "detail": self.detail}


@dataclass(frozen=True)
class TheoremVerdict:
    theorem: str
    hypotheses_hold: bool
    clauses: tuple[Clause, ...]
    conclusion: str
    conclusion_checked: bool | None = None
    consistent: bool | None = None
    counterexample: dict | None = field(default=None, compare=False)

    def failing_clauses(self) -> list[str]:
        return [c.name for c in self.clauses if not c.holds]

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "hypotheses_hold": self.hypotheses_hold,
            "clauses": [c.to_dict() for c in self.clauses],
            "conclusion": self.conclusion,
            "conclusion_checked": self.conclusion_checked,
            "consistent": self.consistent,
            "counterexample": self.counterexample,
        }


def exceeds(value: int, num: int, den: int) -> bool:
    """``value > num / den`` for ``den > 0``."""
    return value * den > num


def at_least(value: int, num: int, den: int) -> bool:
    """``value >= num / den`` for ``den > 0``."""
    return value * den >= num


# Rational thresholds as (numerator, denominator); a is at least 2 wherever they
# are evaluated, so every denominator is positive.

def critical_threshold(n, a, b, d, nprime):
    """((b - delta) n + (a + delta) n') / (a + b)"""
    return (b - d) * n + (a + d) * nprime, a + b


def id_threshold(n, a, b, d):
    """(a + b) n / (b + 2a + delta)"""
    return (a + b) * n, b + 2 * a + d


def order_bound(a, b, d, m, nprime, shift):
    """(b + a + 2m + shift)(a + b) / (a + delta) + n'"""
    return (b + a + 2 * m + shift) * (a + b) + nprime * (a + d), a + d


def id_order_bound(a, b, d, m, shift):
    """(b + a + 2m + shift)(b + 2a + delta) / (a + delta)"""
    return (b + a + 2 * m + shift) * (b + 2 * a + d), a + d


def aux_degree(a, b, d, m, nprime):
    """b (b - delta) / (a + delta) + m + n'"""
    return b * (b - d) + (m + nprime) * (a + d), a + d


def id_aux_degree(n, a, b, d, m):
    """(a + delta) n / (b + 2a + delta) + b (b - delta) / (a + delta) + m"""
    k = b + 2 * a + d
    return (a + d) ** 2 * n + b * (b - d) * k + m * k * (a + d), k * (a + d)


def _fmt(num, den):
    return f"{num}/{den}" if den != 1 else str(num)


@dataclass(frozen=True)
class _Metrics:
    n: int
    min_degree: int
    min_pair_max: object  # min over nonadjacent xy of max(d(x), d(y)); INFINITY if none
    sigma2: object
    complete: bool


def _metrics(graph: Graph) -> _Metrics:
    stats = degree_stats(graph)
    degs = graph.degrees()
    pair = INFINITY
    for u, v in graph.nonadjacent_pairs():
        mx = max(degs[u], degs[v])
        if pair is INFINITY or mx < pair:
            pair = mx
    return _Metrics(graph.order, stats.min_degree, pair, stats.sigma2, graph.is_complete())


def _order(mt, bound):
    num, den = bound
    return Clause("order", exceeds(mt.n, num, den), f"n={mt.n} > {_fmt(num, den)}")


def _min_degree(mt, bound, name="min_degree"):
    num, den = bound
    return Clause(name, at_least(mt.min_degree, num, den), f"delta(G)={mt.min_degree} >= {_fmt(num, den)}")


def _pair(mt, bound):
    num, den = bound
    ok = mt.min_pair_max is INFINITY or at_least(mt.min_pair_max, num, den)
    return Clause("max_degree_pair", ok, f"min over nonadjacent xy of max(d(x),d(y))={mt.min_pair_max} >= {_fmt(num, den)}")


def _sigma2(mt, bound):
    num, den = bound
    ok = mt.sigma2 is INFINITY or at_least(mt.sigma2, 2 * num, den)
    return Clause("sigma2", ok, f"sigma2={mt.sigma2} >= {_fmt(2 * num, den)}")


def _complete(mt):
    return Clause("complete", mt.complete, "G is complete")


CRITICAL, DELETED, ID_DELETED = "critical-deleted", "deleted", "id-deleted"


@dataclass(frozen=True)
class _Result:
    conclusion: str
    constant: bool
    clauses: Callable[[_Metrics, ScenarioParams], list[Clause]]


def _crit_rows(np_used: bool):
    """Rows built from the minimum-degree / pair / sigma2 conditions with ``n'`` on or off."""

    def npr(p):
        return p.nprime if np_used else 0

    def row1(mt, p):
        return [
            _order(mt, order_bound(p.a, p.b, p.delta, p.m, npr(p), -2)),
            _min_degree(mt, critical_threshold(mt.n, p.a, p.b, p.delta, npr(p))),
        ]

    def row2(shift):
        def clauses(mt, p):
            return [
                _min_degree(mt, aux_degree(p.a, p.b, p.delta, p.m, npr(p)), "aux_min_degree"),
                _order(mt, order_bound(p.a, p.b, p.delta, p.m, npr(p), shift)),
                _pair(mt, critical_threshold(mt.n, p.a, p.b, p.delta, npr(p))),
            ]
        return clauses

    def row3(mt, p):
        return [
            _min_degree(mt, aux_degree(p.a, p.b, p.delta, p.m, npr(p)), "aux_min_degree"),
            _order(mt, order_bound(p.a, p.b, p.delta, p.m, npr(p), -2)),
            _sigma2(mt, critical_threshold(mt.n, p.a, p.b, p.delta, npr(p))),
        ]

    return row1, row2, row3


def _id_row1(mt, p):
    return [
        _order(mt, id_order_bound(p.a, p.b, p.delta, p.m, -2)),
        _min_degree(mt, id_threshold(mt.n, p.a, p.b, p.delta)),
    ]


def _id_row2(mt, p):
    return [
        _min_degree(mt, id_aux_degree(mt.n, p.a, p.b, p.delta, p.m), "aux_min_degree"),
        _order(mt, id_order_bound(p.a, p.b, p.delta, p.m, -1)),
        _pair(mt, id_threshold(mt.n, p.a, p.b, p.delta)),
    ]


def _id_row3(mt, p):
    return [
        _min_degree(mt, id_aux_degree(mt.n, p.a, p.b, p.delta, p.m), "aux_min_degree"),
        _order(mt, id_order_bound(p.a, p.b, p.delta, p.m, -2)),
        _sigma2(mt, id_threshold(mt.n, p.a, p.b, p.delta)),
    ]


def _complete_rows(np_used: bool):
    def clauses(mt, p):
        nprime = p.nprime if np_used else 0
        return [_complete(mt), _order(mt, order_bound(p.a, p.b, p.delta, p.m, nprime, -2))]
    return clauses


_c1, _c2, _c3 = _crit_rows(True)
_d1, _d2, _d3 = _crit_rows(False)

RESULTS: dict[str, _Result] = {
    "T1": _Result(CRITICAL, False, _c1),
    "T2": _Result(CRITICAL, False, _c2(-1)),
    "T3": _Result(CRITICAL, False, _c3),
    "table2.1": _Result(DELETED, False, _d1),
    "table2.2": _Result(DELETED, False, _d2(-1)),
    "table2.3": _Result(DELETED, False, _d3),
    "table4.1": _Result(CRITICAL, True, _c1),
    "table4.2": _Result(CRITICAL, True, _c2(-2)),
    "table4.3": _Result(CRITICAL, True, _c3),
    "table5.1": _Result(DELETED, True, _d1),
    "table5.2": _Result(DELETED, True, _d2(-2)),
    "table5.3": _Result(DELETED, True, _d3),
    "T4": _Result(ID_DELETED, False, _id_row1),
    "T5": _Result(ID_DELETED, False, _id_row2),
    "T6": _Result(ID_DELETED, False, _id_row3),
    "table6.1": _Result(ID_DELETED, True, _id_row1),
    "table6.2": _Result(ID_DELETED, True, _id_row2),
    "table6.3": _Result(ID_DELETED, True, _id_row3),
    "lemma2": _Result(CRITICAL, False, _complete_rows(True)),
    "lemma3": _Result(CRITICAL, True, _complete_rows(True)),
    "cor4": _Result(DELETED, False, _complete_rows(False)),
    "cor5": _Result(DELETED, True, _complete_rows(False)),
}


def _result(which: str) -> _Result:
    try:
        return RESULTS[which]
    except KeyError:
        raise InvalidArgumentError(f"unknown theorem id {which!r}; expected one of {sorted(RESULTS)}")


def check_hypotheses(graph: Graph, vf: VertexFuncs, p: ScenarioParams, which: str) -> TheoremVerdict:
    """Evaluate every hypothesis clause of ``which`` on a concrete instance."""
    result = _result(which)
    vf.check_domain(graph)
    clauses = [Clause("standing", p.standing_hypothesis(), f"b-delta={p.b - p.delta} >= a={p.a} >= 2")]
    clauses.append(Clause("band", vf.satisfies_band(p.a, p.b, p.delta), "a <= g(x) <= f(x)-delta <= b-delta"))
    if result.constant:
        clauses.append(Clause("constant", vf.is_constant(p.a, p.b), f"g = {p.a}, f = {p.b} everywhere"))
    if p.standing_hypothesis():
        clauses.extend(result.clauses(_metrics(graph), p))
    hold = all(c.holds for c in clauses)
    return TheoremVerdict(which, hold, tuple(clauses), result.conclusion)


def conclusion_holds(graph: Graph, vf: VertexFuncs, p: ScenarioParams, which: str, method: str = "brute"):
    """Run the property checker matching ``which``; returns ``(holds, counterexample)``."""
    from . import deficiency, properties

    kind = _result(which).conclusion
    require_within_cap(graph.order, "conclusion check")
    nprime = p.nprime if kind == CRITICAL else 0
    if method == "brute":
        if kind == ID_DELETED:
            r = properties.check_id_deleted(graph, vf, p.m)
        else:
            r = properties.check_critical_deleted(graph, vf, nprime, p.m)
        return r.holds, (None if r.holds else r.to_dict())
    if method == "criterion":
        if kind == ID_DELETED:
            r = deficiency.check_id_deleted(graph, vf, p.m)
        else:
            r = deficiency.check_lemma1(graph, vf, nprime, p.m)
        return r.holds, (None if r.holds else r.to_dict())
    raise InvalidArgumentError(f"unknown method {method!r}")


def verify_implication(
    graph: Graph, vf: VertexFuncs, p: ScenarioParams, which: str, method: str = "brute", force: bool = False
) -> TheoremVerdict:
    """Check hypotheses and, when they hold (or ``force``), the conclusion.

    ``consistent`` is False exactly when the hypotheses hold and the conclusion
    fails, which would contradict the result.
    """
    v = check_hypotheses(graph, vf, p, which)
    if not (v.hypotheses_hold or force):
        return TheoremVerdict(v.theorem, False, v.clauses, v.conclusion, None, True)
    holds, cex = conclusion_holds(graph, vf, p, which, method)
    return TheoremVerdict(
        v.theorem, v.hypotheses_hold, v.clauses, v.conclusion, holds, holds or not v.hypotheses_hold, cex
    )
