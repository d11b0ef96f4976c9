"""Ground-truth combinatorics at desk scale: cycle spectrum, Hamiltonicity,
bipancyclicity, and vertex connectivity.

Everything here is exact search, not spectral: this module is the oracle the
certificate checks are validated against, so it must stay independent of the
eigensolver path.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional

from .graphs import BipartiteGraph, NotBalanced, is_connected


class OddLengthRequested(Exception):
    """Bipartite graphs carry no odd cycles; asking for one is a caller bug."""


@dataclass(frozen=True)
class OracleVerdict:
    even_lengths_present: frozenset
    missing_even_lengths: frozenset
    bipancyclic: bool
    hamiltonian: bool
    witnesses: Optional[dict]  # length -> vertex cycle (global ids)


@dataclass(frozen=True)
class ConnectivityResult:
    kappa: int
    separator: Optional[frozenset]  # global vertex ids; None for complete bipartite


def has_cycle_of_length(g: BipartiteGraph, length: int):
    """First simple cycle of the requested even length, as a global vertex
    list, or None.

    Each cycle is explored once: anchored at its minimum vertex (always on
    side X since X ids precede Y ids), visiting only larger ids, with the
    orientation fixed by requiring the second vertex to be smaller than the
    last.  Neighbor lists are ascending, so ties break deterministically.
    """
    if length % 2 != 0:
        raise OddLengthRequested(f"cycle length {length} is odd")
    total = g.order
    if length < 4 or length > total:
        raise ValueError(f"cycle length {length} outside [4, {total}]")
    adj = [g.neighbors_global(v) for v in range(total)]
    hamiltonian = length == total
    visited = [False] * total
    path = []

    def feasible(anchor: int, endpoint: int) -> bool:
        # Hamiltonian-only prune: every unplaced vertex still needs two
        # cycle neighbors drawn from unplaced vertices or the path's ends.
        for u in range(total):
            if visited[u]:
                continue
            avail = 0
            for w in adj[u]:
                if not visited[w] or w == anchor or w == endpoint:
                    avail += 1
                    if avail == 2:
                        break
            if avail < 2:
                return False
        return True

    def extend(anchor: int, v: int, depth: int):
        if depth == length:
            if anchor in adj[v] and path[1] < v:
                return list(path)
            return None
        for w in adj[v]:
            if w <= anchor or visited[w]:
                continue
            visited[w] = True
            path.append(w)
            if not hamiltonian or feasible(anchor, w):
                found = extend(anchor, w, depth + 1)
                if found is not None:
                    return found
            path.pop()
            visited[w] = False
        return None

    for anchor in range(g.n_x):
        if total - anchor < length:
            break
        visited[anchor] = True
        path.append(anchor)
        found = extend(anchor, anchor, 1)
        path.pop()
        visited[anchor] = False
        if found is not None:
            return found
    return None


def bipancyclicity_verdict(g: BipartiteGraph, want_witnesses: bool = False) -> OracleVerdict:
    """Cycle spectrum over every even length from 4 to 2n."""
    if not g.is_balanced:
        raise NotBalanced("bipancyclicity is defined for balanced graphs")
    if g.order < 4:
        raise NotBalanced("need order 2n >= 4")
    present = set()
    missing = set()
    witnesses = {} if want_witnesses else None
    for length in range(4, g.order + 1, 2):
        cyc = has_cycle_of_length(g, length)
        if cyc is None:
            missing.add(length)
        else:
            present.add(length)
            if want_witnesses:
                witnesses[length] = cyc
    return OracleVerdict(
        even_lengths_present=frozenset(present),
        missing_even_lengths=frozenset(missing),
        bipancyclic=not missing,
        hamiltonian=g.order in present,
        witnesses=witnesses,
    )


def _max_vertex_disjoint_paths(adj, total, s, t, cutoff, want_cut=False):
    """Unit-node-capacity max flow via vertex splitting and BFS augmenting.

    Node 2v is v_in, 2v+1 is v_out; every v_in->v_out arc has capacity 1 and
    every undirected edge gets infinite-capacity arcs in both directions.
    Stops early once the flow reaches `cutoff`.
    """
    inf = total + 1
    cap = {}
    out = [[] for _ in range(2 * total)]

    def arc(u, v, c):
        if (u, v) not in cap:
            cap[(u, v)] = 0
            cap[(v, u)] = cap.get((v, u), 0)
            out[u].append(v)
            out[v].append(u)
        cap[(u, v)] += c

    for v in range(total):
        arc(2 * v, 2 * v + 1, 1)
    for v in range(total):
        for w in adj[v]:
            arc(2 * v + 1, 2 * w, inf)
    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while flow < cutoff:
        parent = {source: None}
        queue = deque([source])
        while queue and sink not in parent:
            u = queue.popleft()
            for v in out[u]:
                if v not in parent and cap[(u, v)] > 0:
                    parent[v] = u
                    queue.append(v)
        if sink not in parent:
            break
        v = sink
        while parent[v] is not None:
            u = parent[v]
            cap[(u, v)] -= 1
            cap[(v, u)] += 1
            v = u
        flow += 1
    if not want_cut:
        return flow, None
    reach = {source}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in out[u]:
            if v not in reach and cap[(u, v)] > 0:
                reach.add(v)
                queue.append(v)
    cut = frozenset(v for v in range(total)
                    if 2 * v in reach and 2 * v + 1 not in reach)
    return flow, cut


def vertex_connectivity(g: BipartiteGraph) -> ConnectivityResult:
    """Vertex connectivity via Menger: minimum over non-adjacent pairs of the
    vertex-disjoint path count.

    Same-side pairs are always non-adjacent in a bipartite graph, which is
    what makes complete bipartite graphs come out as min(s, t).  K_{1,1} has
    no non-adjacent pair and gets the complete-graph convention |V| - 1.
    Disconnected graphs return 0.
    """
    total = g.order
    if total < 2:
        raise ValueError("connectivity needs at least two vertices")
    if not is_connected(g):
        return ConnectivityResult(0, frozenset())
    adj = [g.neighbors_global(v) for v in range(total)]
    adjset = [set(a) for a in adj]
    pairs = []
    for s in range(total):
        for t in range(s + 1, total):
            if t not in adjset[s]:
                pairs.append((s, t))
    if not pairs:
        return ConnectivityResult(total - 1, None)
    best = min(len(a) for a in adj) + 1  # Whitney: kappa <= delta
    best_pair = None
    for s, t in pairs:
        f, _ = _max_vertex_disjoint_paths(adj, total, s, t, best)
        if f < best:
            best = f
            best_pair = (s, t)
    if g.is_complete_bipartite:
        return ConnectivityResult(best, None)
    _, cut = _max_vertex_disjoint_paths(adj, total, *best_pair, best + 1,
                                        want_cut=True)
    return ConnectivityResult(best, cut)
