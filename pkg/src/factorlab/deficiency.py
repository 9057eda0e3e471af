"""The deficiency criterion for critical-deleted fractional factors.

A graph stays fractional ``(g, f, m)``-deleted after removing any ``n'``
vertices exactly when, for all disjoint ``S, T`` with ``|S| >= n'``::

    f(S) - g(T) + d_{G-S}(T) >= max_{U, H} [ f(U) + sum_{x in T} d_H(x) - e_H(T, S) ]

with ``U`` an ``n'``-subset of ``S`` and ``H`` an ``m``-edge subset of
``E(G - U)``. The difference of the two sides is the *slack* of ``(S, T)``.

Edge-set convention: when ``G - U`` has fewer than ``m`` edges, ``H`` is all of
``E(G - U)``. This matches deleting ``min(m, |E|)`` edges in
:mod:`factorlab.properties`. Functions taking ``strict=True`` instead refuse
such ``U`` and raise :class:`InsufficientEdgesError` if none remain.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .errors import InsufficientEdgesError, InvalidArgumentError
from .factors import VertexFuncs
from .graph import Graph, independent_sets, require_within_cap
from .witness import DeficiencyWitness


def _mask(vs: Iterable[int]) -> int:
    m = 0
    for v in vs:
        m |= 1 << v
    return m


def _members(mask: int) -> tuple[int, ...]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def _check_sets(graph: Graph, S, T) -> tuple[int, int]:
    for v in (*S, *T):
        if not (isinstance(v, int) and 0 <= v < graph.order):
            raise InvalidArgumentError(f"vertex {v!r} out of range")
    smask, tmask = _mask(S), _mask(T)
    if smask & tmask:
        raise InvalidArgumentError("S and T must be disjoint")
    return smask, tmask


def edge_weight(u: int, v: int, smask: int, tmask: int) -> int:
    """Contribution of edge ``uv`` to ``sum_{x in T} d_H(x) - e_H(T, S)`` when in ``H``.

    2 for a T-T edge, 1 for an edge from T to a vertex outside S and T, 0
    otherwise (a T-S edge's endpoint count is cancelled by ``e_H(T, S)``).
    """
    if (smask >> u) & 1 or (smask >> v) & 1:
        return 0
    return ((tmask >> u) & 1) + ((tmask >> v) & 1)


@dataclass(frozen=True)
class InnerMax:
    value: int
    U: tuple[int, ...]
    H: tuple[tuple[int, int], ...]


def _edges_without(graph: Graph, umask: int) -> list[tuple[int, int]]:
    return [e for e in graph.edges if not ((umask >> e[0]) & 1 or (umask >> e[1]) & 1)]


def inner_max(graph: Graph, vf: VertexFuncs, S, T, nprime: int, m: int, strict: bool = True) -> InnerMax:
    """Maximise ``f(U) + sum_{x in T} d_H(x) - e_H(T, S)`` over ``U`` and ``H``.

    Every ``n'``-subset ``U`` of ``S`` is tried. For a fixed ``U`` the best
    ``H`` is the ``m`` heaviest edges of ``G - U`` under :func:`edge_weight`,
    padded with weight-0 edges in lexicographic order. Ties go to the
    lexicographically first ``U``.
    """
    vf.check_domain(graph)
    smask, tmask = _check_sets(graph, S, T)
    if nprime < 0 or m < 0:
        raise InvalidArgumentError("n' and m must be non-negative")
    S = tuple(sorted(S))
    if len(S) < nprime:
        raise InvalidArgumentError(f"|S| = {len(S)} < n' = {nprime}")
    weighted = sorted(
        ((edge_weight(u, v, smask, tmask), (u, v)) for u, v in graph.edges),
        key=lambda we: (-we[0], we[1]),
    )
    # positive-weight edges avoid S, hence every U
    top = [e for w, e in weighted if w > 0][:m]
    top_value = sum(w for w, _ in weighted[: len(top)])
    best = None
    for U in combinations(S, nprime):
        umask = _mask(U)
        available = _edges_without(graph, umask)
        if strict and len(available) < m:
            continue
        value = sum(vf.f[u] for u in U) + top_value
        if best is None or value > best[0]:
            best = (value, U, available)
    if best is None:
        raise InsufficientEdgesError(f"every choice of {nprime} deleted vertices leaves fewer than {m} edges")
    value, U, available = best
    chosen = set(top)
    H = list(top)
    for e in available:
        if len(H) >= m:
            break
        if e not in chosen:
            H.append(e)
    return InnerMax(value, U, tuple(sorted(H)))


def base_value(graph: Graph, vf: VertexFuncs, S, T) -> int:
    """``f(S) - g(T) + d_{G-S}(T)``."""
    smask, _ = _check_sets(graph, S, T)
    rest = ((1 << graph.order) - 1) & ~smask
    return sum(vf.f[v] for v in S) - sum(vf.g[x] for x in T) + sum(graph.degree_into(x, rest) for x in T)


def slack(graph: Graph, vf: VertexFuncs, S, T, nprime: int, m: int, strict: bool = True) -> int:
    return base_value(graph, vf, S, T) - inner_max(graph, vf, S, T, nprime, m, strict).value


def witness_slack(graph: Graph, vf: VertexFuncs, S, T, U, H) -> int:
    """Slack of a fully specified ``(S, T, U, H)``, evaluated term by term."""
    smask, tmask = _check_sets(graph, S, T)
    umask = _mask(U)
    if umask & ~smask:
        raise InvalidArgumentError("U must be a subset of S")
    for u, v in H:
        if not graph.has_edge(u, v):
            raise InvalidArgumentError(f"({u}, {v}) is not an edge")
        if (umask >> u) & 1 or (umask >> v) & 1:
            raise InvalidArgumentError(f"edge ({u}, {v}) touches U")
    sum_dh = sum(((tmask >> u) & 1) + ((tmask >> v) & 1) for u, v in H)
    e_ts = sum(
        1 for u, v in H
        if ((tmask >> u) & 1 and (smask >> v) & 1) or ((tmask >> v) & 1 and (smask >> u) & 1)
    )
    return base_value(graph, vf, S, T) - (sum(vf.f[u] for u in U) + sum_dh - e_ts)


@dataclass(frozen=True)
class Verdict:
    holds: bool
    witness: DeficiencyWitness | None = None

    def to_dict(self) -> dict:
        return {"holds": self.holds, "witness": self.witness.to_dict() if self.witness else None}


def _search(args) -> tuple | None:
    """Minimum-slack ``(slack, S, T)`` over sets ``S`` whose low ``k`` bits equal ``prefix``.

    Returns ``None`` when no pair has negative slack.
    """
    graph, vf, nprime, m, k, prefix = args
    n = graph.order
    full = (1 << n) - 1
    masks = [graph.neighbor_mask(x) for x in range(n)]
    edges = graph.edges
    best = None
    threshold = -1
    for high in range(1 << (n - k)):
        smask = (high << k) | prefix
        size = smask.bit_count()
        if size < nprime:
            continue
        S = _members(smask)
        fvals = sorted((vf.f[v] for v in S), reverse=True)
        base = sum(fvals) - sum(fvals[:nprime])
        rest = full & ~smask
        cands = []
        neg = 0
        for x in range(n):
            if (rest >> x) & 1:
                c = (masks[x] & rest).bit_count() - vf.g[x]
                if c <= m:
                    cands.append((x, c))
                    if c < 0:
                        neg += c
        if base + neg - 2 * m > threshold:
            continue
        outside = [(u, v) for u, v in edges if (rest >> u) & 1 and (rest >> v) & 1]
        for r in range(1 << len(cands)):
            tmask = 0
            value = base
            i = 0
            bits = r
            while bits:
                if bits & 1:
                    x, c = cands[i]
                    tmask |= 1 << x
                    value += c
                bits >>= 1
                i += 1
            if m and value - 2 * m <= threshold:
                ws = sorted(
                    (((tmask >> u) & 1) + ((tmask >> v) & 1) for u, v in outside), reverse=True
                )
                value -= sum(ws[:m])
            if value > threshold:
                continue
            key = (value, S, _members(tmask))
            if best is None or key < best:
                best = key
                threshold = value
    return best


def _parallel_prefix_bits(n: int, workers: int) -> int:
    k = 0
    while (1 << k) < 4 * workers and k < n:
        k += 1
    return k


def check_lemma1(graph: Graph, vf: VertexFuncs, nprime: int, m: int, workers: int = 1) -> Verdict:
    """Exhaustively test the deficiency criterion over all admissible ``(S, T)``.

    Returns the minimum-slack witness (lexicographically smallest ``S``, then
    ``T``, among ties) if any slack is negative. Results do not depend on
    ``workers``.

    Two exact reductions keep this far below ``3^n``: an ``S`` is skipped when a
    lower bound on its best slack is already too large, and a vertex ``x`` with
    ``d_{G-S}(x) - g(x) > m`` never belongs to a minimising ``T`` (adding it
    raises the left side by more than it can raise the inner maximum).
    """
    vf.check_domain(graph)
    if nprime < 0 or m < 0:
        raise InvalidArgumentError("n' and m must be non-negative")
    require_within_cap(graph.order, "deficiency criterion")
    n = graph.order
    if workers > 1 and n > 1:
        k = _parallel_prefix_bits(n, workers)
        jobs = [(graph, vf, nprime, m, k, p) for p in range(1 << k)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            found = [r for r in pool.map(_search, jobs) if r is not None]
        best = min(found) if found else None
    else:
        best = _search((graph, vf, nprime, m, 0, 0))
    if best is None:
        return Verdict(True)
    value, S, T = best
    inner = inner_max(graph, vf, S, T, nprime, m, strict=False)
    return Verdict(False, DeficiencyWitness(S, T, inner.U, inner.H, value))


def check_lemma4(graph: Graph, a: int, b: int, nprime: int, m: int, workers: int = 1) -> Verdict:
    """The criterion with constant ``g = a`` and ``f = b``.

    The deleted-vertex term is ``f(U) = b * n'``. Statements of this special
    case sometimes write it as ``(a + delta) * n'``; the two agree whenever
    ``b = a + delta``.
    """
    if not (b >= a >= 0):
        raise InvalidArgumentError("need b >= a >= 0")
    return check_lemma1(graph, VertexFuncs.constant(graph.order, a, b), nprime, m, workers)


@dataclass(frozen=True)
class IDVerdict:
    holds: bool
    independent_set: tuple[int, ...] | None = None
    witness: DeficiencyWitness | None = None

    def to_dict(self) -> dict:
        return {
            "holds": self.holds,
            "independent_set": list(self.independent_set) if self.independent_set is not None else None,
            "witness": self.witness.to_dict() if self.witness else None,
        }


def check_id_deleted(graph: Graph, vf: VertexFuncs, m: int, workers: int = 1) -> IDVerdict:
    """ID-deleted test through the criterion: ``n' = 0`` on ``G - I`` for every independent ``I``.

    The first failing ``I`` in lexicographic order is reported, with its witness
    translated back to the ids of ``graph``.
    """
    vf.check_domain(graph)
    require_within_cap(graph.order, "deficiency criterion")
    for I in independent_sets(graph):
        sub, kept = graph.remove_vertices(I)
        verdict = check_lemma1(sub, vf.restrict(kept), 0, m, workers)
        if not verdict.holds:
            return IDVerdict(False, I, verdict.witness.relabel(kept))
    return IDVerdict(True)
