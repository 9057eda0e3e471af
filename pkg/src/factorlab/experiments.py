"""Randomised instance generation and batch implication testing."""

from __future__ import annotations

import json
import time
from dataclasses import asdict, dataclass, field
from itertools import product

import networkx as nx
import numpy as np

from .deficiency import check_lemma1
from .errors import InvalidArgumentError, SizeLimitError
from .factors import FactorNetwork, VertexFuncs
from .graph import Graph, build_complete, size_cap
from .properties import check_critical_deleted
from .theorems import (
    CRITICAL,
    RESULTS,
    ScenarioParams,
    aux_degree,
    check_hypotheses,
    critical_threshold,
    exceeds,
    id_aux_degree,
    id_order_bound,
    id_threshold,
    order_bound,
    verify_implication,
)

GENERATOR = "numpy.random.PCG64"


def _rng(seed) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def _spawn(seed: int, *keys: int) -> np.random.Generator:
    """Independent child stream for ``(seed, *keys)``; trial order does not matter."""
    return _rng(np.random.SeedSequence(entropy=seed, spawn_key=keys))


def augment_min_degree(n: int, edges: set, min_degree: int, rng: np.random.Generator) -> None:
    """Add random edges at minimum-degree vertices until every degree reaches ``min_degree``."""
    adj = [set() for _ in range(n)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    while True:
        degs = [len(a) for a in adj]
        low = min(degs)
        if low >= min_degree:
            return
        candidates = [x for x in range(n) if degs[x] == low]
        x = candidates[int(rng.integers(len(candidates)))]
        others = [y for y in range(n) if y != x and y not in adj[x]]
        y = others[int(rng.integers(len(others)))]
        adj[x].add(y)
        adj[y].add(x)
        edges.add((min(x, y), max(x, y)))


def random_graph(n: int, min_degree: int, seed, p: float | None = None) -> Graph:
    """Random simple graph with ``delta(G) >= min_degree``.

    Starts from ``G(n, p)`` (``p`` drawn uniformly when omitted) and then adds
    edges at minimum-degree vertices.
    """
    if n < 1:
        raise InvalidArgumentError("n must be positive")
    if not (0 <= min_degree <= n - 1):
        raise InvalidArgumentError(f"min_degree must lie in [0, {n - 1}], got {min_degree}")
    rng = seed if isinstance(seed, np.random.Generator) else _rng(seed)
    if p is None:
        p = float(rng.random())
    draws = rng.random(n * (n - 1) // 2)
    edges = set()
    k = 0
    for u in range(n):
        for v in range(u + 1, n):
            if draws[k] < p:
                edges.add((u, v))
            k += 1
    augment_min_degree(n, edges, min_degree, rng)
    return Graph(n, edges)


def random_vertex_funcs(graph: Graph, p: ScenarioParams, seed) -> VertexFuncs:
    """Sample ``g(x)`` in ``[a, b - delta]`` and ``f(x)`` in ``[g(x) + delta, b]`` independently."""
    if p.b - p.delta < p.a:
        raise InvalidArgumentError(f"empty band: b - delta = {p.b - p.delta} < a = {p.a}")
    rng = seed if isinstance(seed, np.random.Generator) else _rng(seed)
    g = [int(rng.integers(p.a, p.b - p.delta + 1)) for _ in range(graph.order)]
    f = [int(rng.integers(lo + p.delta, p.b + 1)) for lo in g]
    vf = VertexFuncs(g, f)
    if not vf.satisfies_band(p.a, p.b, p.delta):
        raise AssertionError("sampled vertex functions left the band")
    return vf


def _ceil(num: int, den: int) -> int:
    return -(-num // den)


def _augment_pairs(graph: Graph, ok, rng: np.random.Generator) -> Graph:
    """Add random violating nonadjacent pairs as edges until ``ok(du, dv)`` holds for all."""
    n = graph.order
    edges = set(graph.edges)
    adj = [set(graph.neighbors(x)) for x in range(n)]
    while True:
        bad = [(u, v) for u in range(n) for v in range(u + 1, n)
               if v not in adj[u] and not ok(len(adj[u]), len(adj[v]))]
        if not bad:
            return Graph(n, edges)
        u, v = bad[int(rng.integers(len(bad)))]
        edges.add((u, v))
        adj[u].add(v)
        adj[v].add(u)


def _order_ok(which: str, n: int, p: ScenarioParams) -> bool:
    kind = RESULTS[which].conclusion
    nprime = p.nprime if kind == CRITICAL else 0
    a, b, d, m = p.a, p.b, p.delta, p.m
    if which in ("T4", "T6", "table6.1", "table6.3"):
        return exceeds(n, *id_order_bound(a, b, d, m, -2))
    if which in ("T5", "table6.2"):
        return exceeds(n, *id_order_bound(a, b, d, m, -1))
    shift = -1 if which in ("T2", "table2.2") else -2
    return exceeds(n, *order_bound(a, b, d, m, nprime, shift))


def instance_for(which: str, n: int, p: ScenarioParams, rng: np.random.Generator) -> tuple[Graph, VertexFuncs]:
    """Random instance of order ``n`` built so that the hypotheses of ``which`` hold.

    Minimum-degree rows get a random graph with large enough minimum degree;
    pair and degree-sum rows start from the auxiliary minimum degree and then
    join offending nonadjacent pairs until the condition holds.
    """
    result = RESULTS[which]
    nprime = p.nprime if result.conclusion == CRITICAL else 0
    a, b, d, m = p.a, p.b, p.delta, p.m
    if result.constant:
        vf = VertexFuncs.constant(n, a, b)
    else:
        vf = random_vertex_funcs(Graph(n), p, rng)
    row = which.split(".")[-1] if "." in which else {"T1": "1", "T2": "2", "T3": "3", "T4": "1", "T5": "2", "T6": "3"}.get(which)
    id_like = which in ("T4", "T5", "T6") or which.startswith("table6")
    if row is None:
        return build_complete(n), vf
    if id_like:
        thr = id_threshold(n, a, b, d)
        aux = id_aux_degree(n, a, b, d, m)
    else:
        thr = critical_threshold(n, a, b, d, nprime)
        aux = aux_degree(a, b, d, m, nprime)
    if row == "1":
        return random_graph(n, min(n - 1, _ceil(*thr)), rng), vf
    base = random_graph(n, min(n - 1, max(0, _ceil(*aux))), rng)
    num, den = thr
    if row == "2":
        graph = _augment_pairs(base, lambda du, dv: max(du, dv) * den >= num, rng)
    else:
        graph = _augment_pairs(base, lambda du, dv: (du + dv) * den >= 2 * num, rng)
    return graph, vf


@dataclass
class TheoremTally:
    trials: int = 0
    hypotheses_held: int = 0
    conclusion_true: int = 0
    inconsistent: int = 0
    skipped: list = field(default_factory=list)
    near_misses: list = field(default_factory=list)
    inconsistencies: list = field(default_factory=list)


@dataclass
class SweepTally:
    instances: int = 0
    agreements: int = 0
    holds: int = 0
    disagreements: list = field(default_factory=list)


@dataclass
class ExperimentConfig:
    theorems: list = field(default_factory=list)
    params: list = field(default_factory=lambda: [ScenarioParams(2, 3, 1)])
    n_min: int = 6
    n_max: int = 12
    trials: int = 0
    seed: int = 0
    method: str = "brute"
    near_miss: int = 0
    factor_sweep_max_n: int = 0
    factor_sweep_max_value: int = 3
    factor_random_graphs: int = 0
    factor_random_n: tuple = (6, 7)
    factor_random_funcs: int = 20
    lemma_sweep_trials: int = 0
    lemma_sweep_max_n: int = 8

    @classmethod
    def from_dict(cls, d: dict) -> ExperimentConfig:
        d = dict(d)
        if "params" in d:
            d["params"] = [p if isinstance(p, ScenarioParams) else ScenarioParams(**p) for p in d["params"]]
        if "factor_random_n" in d:
            d["factor_random_n"] = tuple(d["factor_random_n"])
        unknown = set(d) - set(cls.__dataclass_fields__)
        if unknown:
            raise InvalidArgumentError(f"unknown config keys: {sorted(unknown)}")
        return cls(**d)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["factor_random_n"] = list(self.factor_random_n)
        return d


@dataclass
class ExperimentReport:
    seed: int
    generator: str
    config: dict
    theorems: dict
    factor_sweep: dict
    lemma_sweep: dict
    timing: dict = field(default_factory=dict)

    @property
    def inconsistent(self) -> int:
        return sum(t["inconsistent"] for t in self.theorems.values())

    @property
    def disagreements(self) -> int:
        return len(self.factor_sweep.get("disagreements", ())) + len(self.lemma_sweep.get("disagreements", ()))

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self, timing: bool = True) -> str:
        d = self.to_dict()
        if not timing:
            d.pop("timing")
        return json.dumps(d, sort_keys=True, indent=2)

    @classmethod
    def from_json(cls, text: str) -> ExperimentReport:
        return cls(**json.loads(text))


def _instance_payload(graph: Graph, vf: VertexFuncs) -> dict:
    return {"order": graph.order, "edges": [list(e) for e in graph.edges], "g": list(vf.g), "f": list(vf.f)}


def _near_miss(which, n, p, rng):
    """Instance whose first degree clause sits one unit below its threshold."""
    graph, vf = instance_for(which, n, p, rng)
    edges = list(graph.edges)
    order = rng.permutation(len(edges))
    for i in order:
        trial = graph.remove_edges([edges[i]])
        v = check_hypotheses(trial, vf, p, which)
        failing = v.failing_clauses()
        if failing and all(c in ("min_degree", "max_degree_pair", "sigma2", "aux_min_degree") for c in failing):
            return trial, vf
    return None


def run_theorem_trials(config: ExperimentConfig, which: str, index: int) -> TheoremTally:
    if which not in RESULTS:
        raise InvalidArgumentError(f"unknown theorem id {which!r}")
    tally = TheoremTally()
    cap = size_cap()
    for trial in range(config.trials):
        rng = _spawn(config.seed, index, trial)
        p = config.params[int(rng.integers(len(config.params)))]
        if not p.standing_hypothesis():
            tally.skipped.append({"trial": trial, "reason": f"params {p.to_dict()} violate b-delta >= a >= 2"})
            continue
        ns = [n for n in range(config.n_min, config.n_max + 1) if _order_ok(which, n, p)]
        if not ns:
            tally.skipped.append({"trial": trial, "reason": f"no order in [{config.n_min}, {config.n_max}] meets the order bound for {p.to_dict()}"})
            continue
        n = ns[int(rng.integers(len(ns)))]
        if n > cap:
            tally.skipped.append({"trial": trial, "reason": f"order {n} above size cap {cap}"})
            continue
        graph, vf = instance_for(which, n, p, rng)
        tally.trials += 1
        try:
            v = verify_implication(graph, vf, p, which, config.method)
        except SizeLimitError as exc:
            tally.skipped.append({"trial": trial, "reason": str(exc)})
            continue
        if v.hypotheses_hold:
            tally.hypotheses_held += 1
            tally.conclusion_true += bool(v.conclusion_checked)
            if not v.consistent:
                tally.inconsistent += 1
                tally.inconsistencies.append({"trial": trial, "params": p.to_dict(), **_instance_payload(graph, vf), "counterexample": v.counterexample})
    for k in range(config.near_miss):
        rng = _spawn(config.seed, index, config.trials + k)
        p = config.params[int(rng.integers(len(config.params)))]
        ns = [n for n in range(config.n_min, config.n_max + 1) if _order_ok(which, n, p)]
        if not ns or not p.standing_hypothesis():
            continue
        n = ns[int(rng.integers(len(ns)))]
        found = _near_miss(which, n, p, rng)
        if found is None:
            continue
        graph, vf = found
        v = verify_implication(graph, vf, p, which, config.method, force=True)
        if not v.conclusion_checked:
            tally.near_misses.append({
                "params": p.to_dict(), **_instance_payload(graph, vf),
                "failing_clauses": v.failing_clauses(), "counterexample": v.counterexample,
            })
    return tally


def _nonisomorphic_graphs(max_n: int):
    for atlas_graph in nx.graph_atlas_g():
        n = atlas_graph.number_of_nodes()
        if 1 <= n <= max_n:
            yield Graph(n, atlas_graph.edges())


def criterion_minima(graph: Graph, G: np.ndarray, F: np.ndarray) -> np.ndarray:
    """``min over disjoint S, T of f(S) + d_{G-S}(T) - g(T)`` for many ``(g, f)`` rows at once.

    For a fixed ``S`` the inner minimum over ``T`` takes every vertex whose
    term ``d_{G-S}(x) - g(x)`` is negative; this is evaluated column-wise.
    """
    n = graph.order
    best = None
    for smask in range(1 << n):
        in_s = np.array([(smask >> x) & 1 for x in range(n)], dtype=bool)
        rest = ((1 << n) - 1) & ~smask
        deg = np.array([graph.degree_into(x, rest) for x in range(n)], dtype=np.int64)
        term = np.minimum(deg[None, :] - G, 0)
        term[:, in_s] = 0
        value = F[:, in_s].sum(axis=1) + term.sum(axis=1)
        best = value if best is None else np.minimum(best, value)
    return best


def _check_factor_block(graph: Graph, funcs: list, tally: SweepTally) -> None:
    G = np.array([g for g, _ in funcs], dtype=np.int64).reshape(len(funcs), graph.order)
    F = np.array([f for _, f in funcs], dtype=np.int64).reshape(len(funcs), graph.order)
    criterion = criterion_minima(graph, G, F) >= 0
    net = FactorNetwork(graph)
    for (g, f), expected in zip(funcs, criterion):
        got = net.solve(g, f) is not None
        tally.instances += 1
        tally.holds += got
        if got == bool(expected):
            tally.agreements += 1
        else:
            tally.disagreements.append({"order": graph.order, "edges": [list(e) for e in graph.edges], "g": list(g), "f": list(f), "flow": got})


def factor_oracle_sweep(config: ExperimentConfig) -> SweepTally:
    """Flow decision vs. the ``(S, T)`` criterion.

    Every non-isomorphic graph up to ``factor_sweep_max_n`` vertices with every
    ``0 <= g <= f <= factor_sweep_max_value``, then random graphs with random
    functions.
    """
    tally = SweepTally()
    pairs = [(lo, hi) for hi in range(config.factor_sweep_max_value + 1) for lo in range(hi + 1)]
    for graph in _nonisomorphic_graphs(config.factor_sweep_max_n):
        funcs = []
        for choice in product(pairs, repeat=graph.order):
            funcs.append((tuple(c[0] for c in choice), tuple(c[1] for c in choice)))
        _check_factor_block(graph, funcs, tally)
    lo_n, hi_n = config.factor_random_n
    for k in range(config.factor_random_graphs):
        rng = _spawn(config.seed, 10_000, k)
        n = int(rng.integers(lo_n, hi_n + 1))
        graph = random_graph(n, 0, rng)
        funcs = []
        for _ in range(config.factor_random_funcs):
            g = [int(x) for x in rng.integers(0, config.factor_sweep_max_value + 1, size=n)]
            f = [int(rng.integers(x, config.factor_sweep_max_value + 1)) for x in g]
            funcs.append((tuple(g), tuple(f)))
        _check_factor_block(graph, funcs, tally)
    return tally


def lemma_oracle_sweep(config: ExperimentConfig) -> SweepTally:
    """Brute-force critical-deleted vs. the deficiency criterion on random instances."""
    tally = SweepTally()
    for k in range(config.lemma_sweep_trials):
        rng = _spawn(config.seed, 20_000, k)
        n = int(rng.integers(1, config.lemma_sweep_max_n + 1))
        p = config.params[int(rng.integers(len(config.params)))]
        if p.b - p.delta < p.a:
            continue
        graph = random_graph(n, 0, rng, p=float(rng.uniform(0.3, 1.0)))
        vf = random_vertex_funcs(graph, p, rng)
        nprime = int(rng.integers(0, min(2, n) + 1))
        m = int(rng.integers(0, 3))
        brute = check_critical_deleted(graph, vf, nprime, m).holds
        crit = check_lemma1(graph, vf, nprime, m).holds
        tally.instances += 1
        tally.holds += crit
        if brute == crit:
            tally.agreements += 1
        else:
            tally.disagreements.append({**_instance_payload(graph, vf), "nprime": nprime, "m": m, "brute": brute})
    return tally


def run_batch(config: ExperimentConfig | dict) -> ExperimentReport:
    if isinstance(config, dict):
        config = ExperimentConfig.from_dict(config)
    if config.method not in ("brute", "criterion"):
        raise InvalidArgumentError(f"unknown method {config.method!r}")
    timing = {}
    theorems = {}
    start = time.perf_counter()
    for index, which in enumerate(config.theorems):
        theorems[which] = asdict(run_theorem_trials(config, which, index))
    timing["theorems"] = time.perf_counter() - start
    start = time.perf_counter()
    factor = asdict(factor_oracle_sweep(config))
    timing["factor_sweep"] = time.perf_counter() - start
    start = time.perf_counter()
    lemma = asdict(lemma_oracle_sweep(config))
    timing["lemma_sweep"] = time.perf_counter() - start
    return ExperimentReport(config.seed, GENERATOR, config.to_dict(), theorems, factor, lemma, timing)
