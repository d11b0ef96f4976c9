"""Shared fixtures and independent brute-force oracles.

The oracles here deliberately avoid the library's search code paths:
cycle detection goes through raw permutations and connectivity through
subset removal, so they can back-stop the production implementations.
"""

from itertools import combinations, permutations

import pytest
from hypothesis import strategies as st

from bipancert.graphs import BipartiteGraph, build_graph


def bipartite_graphs(max_side=4):
    """Hypothesis strategy over small valid graphs."""
    def make(n_x, n_y, picks):
        edges = [(i % n_x, j % n_y) for i, j in picks]
        return build_graph(n_x, n_y, set(edges))
    return st.builds(
        make,
        st.integers(1, max_side), st.integers(1, max_side),
        st.sets(st.tuples(st.integers(0, 15), st.integers(0, 15)), max_size=16),
    )


@pytest.fixture
def c8():
    """The 8-cycle laid out as a balanced bipartite graph on 4+4 vertices."""
    return build_graph(4, 4, [(0, 0), (1, 0), (1, 1), (2, 1),
                              (2, 2), (3, 2), (3, 3), (0, 3)])


def global_adjacency(g: BipartiteGraph):
    return [set(g.neighbors_global(v)) for v in range(g.order)]


def naive_has_cycle(g: BipartiteGraph, length: int) -> bool:
    """Permutation-enumeration cycle detector, usable up to |V| ~ 8."""
    adj = global_adjacency(g)
    verts = range(g.order)
    for subset in combinations(verts, length):
        anchor = subset[0]
        for perm in permutations(subset[1:]):
            if perm[0] > perm[-1]:
                continue
            cycle = (anchor,) + perm
            if all(cycle[i + 1] in adj[cycle[i]] for i in range(length - 1)) \
                    and anchor in adj[cycle[-1]]:
                return True
    return False


def _connected_after_removal(adj, removed):
    keep = [v for v in range(len(adj)) if v not in removed]
    if len(keep) <= 1:
        return True
    seen = {keep[0]}
    stack = [keep[0]]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in removed and w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(keep)


def naive_vertex_connectivity(g: BipartiteGraph) -> int:
    """Smallest vertex set whose removal disconnects; |V| - 1 when none
    exists (complete-graph convention)."""
    adj = global_adjacency(g)
    total = g.order
    if not _connected_after_removal(adj, set()):
        return 0
    for k in range(1, total - 1):
        for removed in combinations(range(total), k):
            if not _connected_after_removal(adj, set(removed)):
                return k
    return total - 1
