"""Exhaustive and randomized graph generation plus a property harness.

The harness checks each sufficient condition against the brute-force oracle
and reports counterexamples.  Failures are data, not exceptions: a failing
run leaves serialized graphs behind so it can be reproduced.

Randomness is a 64-bit xorshift* stream (seeded through a splitmix64 mixer)
so identical seeds give identical graphs on every platform.  Parallel runs
partition the graph stream and merge partial reports by summation with
counterexample lists sorted by serialization, so output is independent of
the worker count.
"""

from __future__ import annotations

import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, Iterable, Iterator, List, Optional, Sequence

from . import certificates as cert
from . import oracle as orc
from .graphs import BipartiteGraph, build_graph, is_connected, is_g1, serialize_graph
from .spectral import lemma5_degree_bound, spectral_summary

ALL_CHECKS = ("t1", "t2", "t3", "l1", "l2", "l3", "l4", "l5", "l6")
MAX_EXHAUSTIVE_N = 5
EPSILON = 1e-9

_MASK64 = (1 << 64) - 1


class NTooLargeForExhaustive(Exception):
    """Exhaustive enumeration is capped at n = 5 (2^25 edge subsets)."""


@dataclass(frozen=True)
class GraphConstraints:
    n: int
    require_connected: bool = False
    min_degree: int = 0
    min_edges: Optional[int] = None


@dataclass
class PropertyResult:
    checked: int = 0
    premise_satisfied: int = 0
    counterexamples: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.counterexamples


@dataclass
class HuntReport:
    graphs_examined: int
    graphs_passing_filters: int
    properties: Dict[str, PropertyResult]
    wall_time_s: float

    @property
    def total_counterexamples(self) -> int:
        return sum(len(r.counterexamples) for r in self.properties.values())


def _splitmix64(x: int) -> int:
    x = (x + 0x9E3779B97F4A7C15) & _MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & _MASK64
    return x ^ (x >> 31)


def _xorshift64star(state: int) -> int:
    state ^= state >> 12
    state = (state ^ (state << 25)) & _MASK64
    state ^= state >> 27
    return state


def random_graph(n: int, edge_probability: float, seed: int) -> BipartiteGraph:
    """Each of the n*n cross pairs is included independently with the given
    probability.  Stream: state starts at splitmix64(seed) (re-mixed if
    zero), advances by xorshift64*, and the pair (i, j) is included when
    (state * 0x2545F4914F6CDD1D mod 2^64) / 2^64 < p, scanning pairs in
    row-major order."""
    if not 0.0 <= edge_probability <= 1.0:
        raise ValueError("edge probability must lie in [0, 1]")
    state = _splitmix64(seed & _MASK64)
    while state == 0:
        state = _splitmix64(state + 1)
    edges = []
    for i in range(n):
        for j in range(n):
            state = _xorshift64star(state)
            value = (state * 0x2545F4914F6CDD1D) & _MASK64
            if value / 2.0 ** 64 < edge_probability:
                edges.append((i, j))
    return build_graph(n, n, edges)


def _mask_to_graph(n: int, mask: int) -> BipartiteGraph:
    edges = [(i, j) for i in range(n) for j in range(n)
             if mask >> (i * n + j) & 1]
    return build_graph(n, n, edges)


def _mask_passes(n: int, mask: int, c: GraphConstraints) -> bool:
    e = bin(mask).count("1")
    if c.min_edges is not None and e < c.min_edges:
        return False
    full = (1 << n) - 1
    if c.min_degree > 0:
        for i in range(n):
            if bin(mask >> (i * n) & full).count("1") < c.min_degree:
                return False
        for j in range(n):
            col = sum(mask >> (i * n + j) & 1 for i in range(n))
            if col < c.min_degree:
                return False
    if c.require_connected:
        # BFS on row masks; X vertex i owns row mask rows[i]
        rows = [mask >> (i * n) & full for i in range(n)]
        seen_x, seen_y = 1, 0
        frontier_x = 1
        while frontier_x:
            new_y = 0
            for i in range(n):
                if frontier_x >> i & 1:
                    new_y |= rows[i]
            new_y &= ~seen_y
            seen_y |= new_y
            frontier_x = 0
            if new_y:
                for i in range(n):
                    if not seen_x >> i & 1 and rows[i] & new_y:
                        frontier_x |= 1 << i
            seen_x |= frontier_x
        if seen_x != full or seen_y != full:
            return False
    return True


def _canonical_mask(n: int, mask: int) -> int:
    """Fixpoint of alternately sorting X rows and Y columns as integers.
    A cheap label-normal form, not a full isomorphism canonical form."""
    full = (1 << n) - 1
    rows = [mask >> (i * n) & full for i in range(n)]
    for _ in range(100):
        before = list(rows)
        rows.sort()
        cols = [sum((rows[i] >> j & 1) << i for i in range(n)) for j in range(n)]
        cols.sort()
        rows = [sum((cols[j] >> i & 1) << j for j in range(n)) for i in range(n)]
        if rows == before:
            break
    return sum(rows[i] << (i * n) for i in range(n))


def enumerate_graphs(constraints: GraphConstraints, dedup: bool = False) -> Iterator[BipartiteGraph]:
    """Every labeled balanced bipartite graph on n + n vertices meeting the
    constraints (all 2^(n^2) cross-pair subsets, filtered).  With dedup,
    only graphs equal to their own row/column-sorted normal form are
    yielded."""
    n = constraints.n
    if n > MAX_EXHAUSTIVE_N:
        raise NTooLargeForExhaustive(f"exhaustive mode is capped at n = {MAX_EXHAUSTIVE_N}")
    for mask in range(1 << (n * n)):
        if not _mask_passes(n, mask, constraints):
            continue
        if dedup and _canonical_mask(n, mask) != mask:
            continue
        yield _mask_to_graph(n, mask)


class _Lazy:
    """Per-graph cache so multiple checks share one eigensolve / oracle run."""

    def __init__(self, g: BipartiteGraph):
        self.g = g
        self._summary = None
        self._verdict = None
        self._kappa = None

    @property
    def summary(self):
        if self._summary is None:
            self._summary = spectral_summary(self.g)
        return self._summary

    @property
    def bipancyclic(self):
        if self._verdict is None:
            self._verdict = orc.bipancyclicity_verdict(self.g).bipancyclic
        return self._verdict

    @property
    def kappa(self):
        if self._kappa is None:
            self._kappa = orc.vertex_connectivity(self.g).kappa
        return self._kappa


def _standard_hypotheses(g: BipartiteGraph) -> bool:
    return g.is_balanced and g.n_x >= 4 and g.min_degree >= 2 and is_connected(g)


def _check_one(check: str, g: BipartiteGraph, lazy: _Lazy, result: PropertyResult) -> None:
    n = g.n_x
    if check in ("t1", "t2", "t3"):
        if not _standard_hypotheses(g):
            return
        result.checked += 1
        verdict = cert.theorem_check(g, check.upper(), lazy.summary)
        if verdict.premise_holds:
            result.premise_satisfied += 1
            if not lazy.bipancyclic:
                result.counterexamples.append(serialize_graph(g))
    elif check == "l1":
        if not (g.is_balanced and n >= 4):
            return
        result.checked += 1
        if cert.lemma1_degree_condition(g).holds:
            result.premise_satisfied += 1
            if not lazy.bipancyclic:
                result.counterexamples.append(serialize_graph(g))
    elif check == "l6":
        if not (g.is_balanced and n >= 4 and g.min_degree >= 2
                and g.edge_count >= n * n - 2 * n + 4):
            return
        result.checked += 1
        result.premise_satisfied += 1
        if not (is_g1(g) or lazy.bipancyclic):
            result.counterexamples.append(serialize_graph(g))
    elif check == "l2":
        if not (is_connected(g) and g.edge_count >= 1):
            return
        result.checked += 1
        lam = lazy.summary.lambda1
        sqrt_e = math.sqrt(g.edge_count)
        if lam > sqrt_e + EPSILON:
            result.counterexamples.append(serialize_graph(g))
        elif abs(lam - sqrt_e) <= EPSILON and not g.is_complete_bipartite:
            result.counterexamples.append(serialize_graph(g))
    elif check == "l3":
        # complete graphs are excluded; among bipartite graphs that is K_{1,1}
        if not (is_connected(g) and g.order > 2):
            return
        result.checked += 1
        if lazy.summary.alg_connectivity > lazy.kappa + EPSILON:
            result.counterexamples.append(serialize_graph(g))
        elif lazy.kappa > g.min_degree:
            result.counterexamples.append(serialize_graph(g))
    elif check == "l4":
        if not g.is_balanced:
            return
        result.checked += 1
        if lazy.summary.q1 > g.edge_count / n + n + EPSILON:
            result.counterexamples.append(serialize_graph(g))
    elif check == "l5":
        if not (is_connected(g) and g.min_degree >= 1 and g.order >= 2):
            return
        result.checked += 1
        bound = float(lemma5_degree_bound(g))
        q1 = lazy.summary.q1
        if q1 > bound + EPSILON:
            result.counterexamples.append(serialize_graph(g))
        elif abs(q1 - bound) <= EPSILON and not (g.is_regular or g.is_semiregular):
            result.counterexamples.append(serialize_graph(g))
    else:
        raise ValueError(f"unknown check {check!r}")


def property_suite(source: Iterable[BipartiteGraph], checks: Sequence[str] = ALL_CHECKS) -> HuntReport:
    """Evaluate every selected check on every graph in the stream."""
    start = time.perf_counter()
    results = {c: PropertyResult() for c in checks}
    examined = 0
    for g in source:
        examined += 1
        lazy = _Lazy(g)
        for c in checks:
            _check_one(c, g, lazy, results[c])
    return HuntReport(graphs_examined=examined, graphs_passing_filters=examined,
                      properties=results,
                      wall_time_s=time.perf_counter() - start)


def _merge(parts: List[HuntReport], examined: int, passing: int, wall: float) -> HuntReport:
    checks = list(parts[0].properties) if parts else []
    merged = {c: PropertyResult() for c in checks}
    for part in parts:
        for c, r in part.properties.items():
            merged[c].checked += r.checked
            merged[c].premise_satisfied += r.premise_satisfied
            merged[c].counterexamples.extend(r.counterexamples)
    for r in merged.values():
        r.counterexamples.sort()
    return HuntReport(graphs_examined=examined, graphs_passing_filters=passing,
                      properties=merged, wall_time_s=wall)


def _exhaustive_chunk(args):
    n, lo, hi, constraints, dedup, checks = args
    graphs = []
    passing = 0
    for mask in range(lo, hi):
        if not _mask_passes(n, mask, constraints):
            continue
        if dedup and _canonical_mask(n, mask) != mask:
            continue
        passing += 1
        graphs.append(_mask_to_graph(n, mask))
    report = property_suite(graphs, checks)
    return passing, report


def _random_chunk(args):
    n, lo, hi, p, seed, constraints, checks = args
    graphs = []
    passing = 0
    for i in range(lo, hi):
        g = random_graph(n, p, seed + i)
        if constraints.min_edges is not None and g.edge_count < constraints.min_edges:
            continue
        if constraints.min_degree > 0 and g.min_degree < constraints.min_degree:
            continue
        if constraints.require_connected and not is_connected(g):
            continue
        passing += 1
        graphs.append(g)
    report = property_suite(graphs, checks)
    return passing, report


def _ranges(total: int, pieces: int):
    step = max(1, -(-total // pieces))
    return [(lo, min(lo + step, total)) for lo in range(0, total, step)]


def run_hunt(constraints: GraphConstraints, checks: Sequence[str] = ALL_CHECKS,
             mode: str = "exhaustive", count: int = 0, p: float = 0.5,
             seed: int = 0, jobs: int = 1, dedup: bool = False) -> HuntReport:
    """Drive enumeration or sampling through the property suite.

    Output (counts and sorted counterexample lists) is deterministic in
    (constraints, checks, mode, count, p, seed) and independent of jobs.
    """
    start = time.perf_counter()
    n = constraints.n
    if mode == "exhaustive":
        if n > MAX_EXHAUSTIVE_N:
            raise NTooLargeForExhaustive(f"exhaustive mode is capped at n = {MAX_EXHAUSTIVE_N}")
        total = 1 << (n * n)
        tasks = [(n, lo, hi, constraints, dedup, checks)
                 for lo, hi in _ranges(total, max(jobs * 4, 1))]
        worker = _exhaustive_chunk
        examined = total
    elif mode == "random":
        tasks = [(n, lo, hi, p, seed, constraints, checks)
                 for lo, hi in _ranges(count, max(jobs * 4, 1))]
        worker = _random_chunk
        examined = count
    else:
        raise ValueError(f"unknown hunt mode {mode!r}")

    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(worker, tasks))
    else:
        outcomes = [worker(t) for t in tasks]
    passing = sum(c for c, _ in outcomes)
    return _merge([r for _, r in outcomes], examined, passing,
                  time.perf_counter() - start)
