"""Balanced bipartite graphs: construction, validation, and file I/O.

Vertex identity is positional: side X is indexed 0..n_x-1 and side Y is
indexed 0..n_y-1.  Where a single global index is needed (cycle witnesses,
connectivity separators) X comes first, so X_i -> i and Y_j -> n_x + j.

Graphs are immutable after construction; all helpers treat them as values.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Tuple


class GraphError(Exception):
    """Base class for graph construction and parsing failures."""


class IndexOutOfRange(GraphError):
    """An edge endpoint does not fit the declared side sizes."""


class DuplicateEdge(GraphError):
    """The same cross pair appears twice in an edge list."""


class NTooSmall(GraphError):
    """A construction was requested below its minimum side size."""


class MalformedHeader(GraphError):
    """The graph file header line is missing or unparseable."""


class EdgeCountMismatch(GraphError):
    """The header edge count disagrees with the number of edge lines."""


class NotBalanced(GraphError):
    """An operation defined only for balanced graphs got |X| != |Y|."""


@dataclass(frozen=True)
class BipartiteGraph:
    """Simple bipartite graph with an explicit (X, Y) bipartition.

    Every edge crosses the bipartition, so the graph is simple bipartite
    by construction.  Neighbor lists are precomputed and sorted ascending.
    """

    n_x: int
    n_y: int
    edges: frozenset
    x_neighbors: tuple = field(init=False, compare=False, repr=False)
    y_neighbors: tuple = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        if self.n_x < 1 or self.n_y < 1:
            raise GraphError("both sides need at least one vertex")
        if not isinstance(self.edges, frozenset):
            object.__setattr__(self, "edges", frozenset(self.edges))
        xn = [[] for _ in range(self.n_x)]
        yn = [[] for _ in range(self.n_y)]
        for i, j in self.edges:
            if not (0 <= i < self.n_x) or not (0 <= j < self.n_y):
                raise IndexOutOfRange(f"edge ({i}, {j}) out of range for "
                                      f"sides {self.n_x} x {self.n_y}")
            xn[i].append(j)
            yn[j].append(i)
        object.__setattr__(self, "x_neighbors",
                           tuple(tuple(sorted(a)) for a in xn))
        object.__setattr__(self, "y_neighbors",
                           tuple(tuple(sorted(a)) for a in yn))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def order(self) -> int:
        return self.n_x + self.n_y

    @property
    def is_balanced(self) -> bool:
        return self.n_x == self.n_y

    def has_edge(self, i: int, j: int) -> bool:
        return (i, j) in self.edges

    def x_degrees(self):
        return [len(a) for a in self.x_neighbors]

    def y_degrees(self):
        return [len(a) for a in self.y_neighbors]

    @property
    def min_degree(self) -> int:
        return min(self.x_degrees() + self.y_degrees())

    def neighbors_global(self, v: int) -> Tuple[int, ...]:
        """Neighbors of a global vertex id (X first, then Y shifted by n_x)."""
        if v < self.n_x:
            return tuple(self.n_x + j for j in self.x_neighbors[v])
        return self.y_neighbors[v - self.n_x]

    @property
    def is_complete_bipartite(self) -> bool:
        return self.edge_count == self.n_x * self.n_y

    @property
    def is_regular(self) -> bool:
        degs = self.x_degrees() + self.y_degrees()
        return len(set(degs)) == 1

    @property
    def is_semiregular(self) -> bool:
        """True when each side's vertices share a common degree."""
        return len(set(self.x_degrees())) == 1 and len(set(self.y_degrees())) == 1


@dataclass(frozen=True)
class DegreeProfile:
    x_degrees_sorted: tuple
    y_degrees_sorted: tuple
    min_degree: int
    edge_count: int


def build_graph(n_x: int, n_y: int, edges: Iterable) -> BipartiteGraph:
    """Validate an edge list and freeze it into a BipartiteGraph.

    Rejects duplicate edges and out-of-range endpoints.
    """
    if n_x < 1 or n_y < 1:
        raise GraphError("both sides need at least one vertex")
    edge_list = [(int(i), int(j)) for i, j in edges]
    seen = set()
    for pair in edge_list:
        if pair in seen:
            raise DuplicateEdge(f"edge {pair} listed twice")
        seen.add(pair)
    return BipartiteGraph(n_x, n_y, frozenset(edge_list))


def degree_profile(g: BipartiteGraph) -> DegreeProfile:
    xd = tuple(sorted(g.x_degrees()))
    yd = tuple(sorted(g.y_degrees()))
    return DegreeProfile(xd, yd, min(xd + yd), g.edge_count)


def generate_g1(n: int) -> BipartiteGraph:
    """The extremal balanced bipartite graph on 2n vertices with
    e = n^2 - 2n + 4 edges and minimum degree 2.

    X vertices 0 and 1 attach to the last two Y vertices only; X vertices
    2..n-1 attach to all of Y.  Connected but never Hamiltonian.
    """
    if n < 4:
        raise NTooSmall(f"construction needs n >= 4, got {n}")
    edges = [(i, j) for i in (0, 1) for j in (n - 2, n - 1)]
    edges += [(i, j) for i in range(2, n) for j in range(n)]
    return build_graph(n, n, edges)


def generate_complete_bipartite(s: int, t: int) -> BipartiteGraph:
    if s < 1 or t < 1:
        raise NTooSmall("complete bipartite sides must be >= 1")
    return build_graph(s, t, [(i, j) for i in range(s) for j in range(t)])


def _g1_orientation_ok(g: BipartiteGraph, low_side_x: bool) -> bool:
    """Structural test with the two degree-2 vertices on the X side
    (or the Y side when low_side_x is False)."""
    n = g.n_x
    if low_side_x:
        low_deg = g.x_degrees()
        high_deg = g.y_degrees()
        low_nbrs = g.x_neighbors
    else:
        low_deg = g.y_degrees()
        high_deg = g.x_degrees()
        low_nbrs = g.y_neighbors
    if sorted(low_deg) != [2, 2] + [n] * (n - 2):
        return False
    if sorted(high_deg) != [n - 2] * (n - 2) + [n, n]:
        return False
    # degree-n vertices dominate the opposite side by counting, so only the
    # attachment of the two degree-2 vertices needs a structural pass
    hubs = {j for j, d in enumerate(high_deg) if d == n}
    for i, d in enumerate(low_deg):
        if d == 2 and set(low_nbrs[i]) != hubs:
            return False
    return True


def is_g1(g: BipartiteGraph) -> bool:
    """True iff g is isomorphic to generate_g1(n) for its own order."""
    if not g.is_balanced or g.n_x < 4:
        return False
    n = g.n_x
    if g.edge_count != n * n - 2 * n + 4:
        return False
    return _g1_orientation_ok(g, True) or _g1_orientation_ok(g, False)


def is_connected(g: BipartiteGraph) -> bool:
    """Breadth-first reachability over the whole vertex set."""
    total = g.order
    if total == 1:
        return True
    seen = [False] * total
    stack = [0]
    seen[0] = True
    count = 1
    while stack:
        v = stack.pop()
        for w in g.neighbors_global(v):
            if not seen[w]:
                seen[w] = True
                count += 1
                stack.append(w)
    return count == total


GRAPH_FILE_MAGIC = "bipartite"


def parse_graph(text: str) -> BipartiteGraph:
    """Parse the text graph format (see serialize_graph)."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise MalformedHeader("empty input")
    header = lines[0].split()
    if len(header) != 4 or header[0] != GRAPH_FILE_MAGIC:
        raise MalformedHeader(f"bad header line: {lines[0]!r}")
    try:
        n_x, n_y, e = int(header[1]), int(header[2]), int(header[3])
    except ValueError as exc:
        raise MalformedHeader(f"non-integer header field in {lines[0]!r}") from exc
    body = lines[1:]
    if len(body) != e:
        raise EdgeCountMismatch(f"header declares {e} edges, found {len(body)} lines")
    edges = []
    for ln in body:
        parts = ln.split()
        if len(parts) != 2:
            raise EdgeCountMismatch(f"bad edge line: {ln!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError as exc:
            raise EdgeCountMismatch(f"bad edge line: {ln!r}") from exc
    return build_graph(n_x, n_y, edges)


def serialize_graph(g: BipartiteGraph) -> str:
    """Emit `bipartite <n_x> <n_y> <e>` then one `<x> <y>` line per edge,
    sorted lexicographically, LF line endings."""
    out = [f"{GRAPH_FILE_MAGIC} {g.n_x} {g.n_y} {g.edge_count}"]
    out.extend(f"{i} {j}" for i, j in sorted(g.edges))
    return "\n".join(out) + "\n"
