"""Dense symmetric eigenvalues (cyclic Jacobi) and graph spectral statistics.

Desk scale only: matrix orders up to a few dozen, so O(N^3) per sweep is
fine and the solver stays dependency-free and deterministic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .graphs import BipartiteGraph

DEFAULT_TOL = 1e-12
MAX_SWEEPS = 100


class NoConvergence(Exception):
    """Jacobi sweeps exhausted without reaching the off-diagonal target."""


class IsolatedVertex(Exception):
    """Degree-average bound is undefined when some vertex has degree 0."""


@dataclass(frozen=True)
class SymmetricMatrix:
    order: int
    entries: tuple  # tuple of row tuples, exactly symmetric

    def __post_init__(self):
        if len(self.entries) != self.order:
            raise ValueError("row count does not match order")
        for i, row in enumerate(self.entries):
            if len(row) != self.order:
                raise ValueError("matrix is not square")
            for j in range(i):
                if row[j] != self.entries[j][i]:
                    raise ValueError(f"entries ({i},{j}) and ({j},{i}) differ")

    @staticmethod
    def from_rows(rows) -> "SymmetricMatrix":
        return SymmetricMatrix(len(rows), tuple(tuple(float(v) for v in r) for r in rows))


@dataclass(frozen=True)
class Spectrum:
    eigenvalues: tuple  # sorted nonincreasing
    residual_bound: float


@dataclass(frozen=True)
class SpectralSummary:
    lambda1: float
    alg_connectivity: float
    q1: float
    residual_bound: float


def _off_norm(a, n: int) -> float:
    s = 0.0
    for i in range(n):
        ai = a[i]
        for j in range(i + 1, n):
            s += ai[j] * ai[j]
    return math.sqrt(2.0 * s)


def symmetric_eigenvalues(m: SymmetricMatrix, tol: float = DEFAULT_TOL) -> Spectrum:
    """Cyclic Jacobi rotations; sweeps until the off-diagonal Frobenius norm
    drops below tol * (initial Frobenius norm + 1)."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    n = m.order
    a = [list(row) for row in m.entries]
    if n == 1:
        return Spectrum((a[0][0],), 0.0)
    fro0 = math.sqrt(sum(v * v for row in a for v in row))
    target = tol * (fro0 + 1.0)
    off = _off_norm(a, n)
    sweeps = 0
    while off > target:
        if sweeps >= MAX_SWEEPS:
            raise NoConvergence(f"off-diagonal norm {off:.3e} after {sweeps} sweeps")
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p][q]
                if apq == 0.0:
                    continue
                theta = (a[q][q] - a[p][p]) / (2.0 * apq)
                t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
                if theta < 0.0:
                    t = -t
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                app, aqq = a[p][p], a[q][q]
                a[p][p] = c * c * app - 2.0 * s * c * apq + s * s * aqq
                a[q][q] = s * s * app + 2.0 * s * c * apq + c * c * aqq
                a[p][q] = a[q][p] = 0.0
                for k in range(n):
                    if k == p or k == q:
                        continue
                    akp, akq = a[k][p], a[k][q]
                    a[k][p] = a[p][k] = c * akp - s * akq
                    a[k][q] = a[q][k] = s * akp + c * akq
        sweeps += 1
        off = _off_norm(a, n)
    eig = tuple(sorted((a[i][i] for i in range(n)), reverse=True))
    return Spectrum(eig, off)


def adjacency_matrix(g: BipartiteGraph) -> SymmetricMatrix:
    n = g.order
    rows = [[0.0] * n for _ in range(n)]
    for i, j in g.edges:
        u, v = i, g.n_x + j
        rows[u][v] = rows[v][u] = 1.0
    return SymmetricMatrix(n, tuple(tuple(r) for r in rows))


def _with_degrees(g: BipartiteGraph, sign: float) -> SymmetricMatrix:
    adj = adjacency_matrix(g)
    rows = [list(r) for r in adj.entries]
    n = g.order
    for v in range(n):
        deg = len(g.neighbors_global(v))
        for w in range(n):
            rows[v][w] *= sign
        rows[v][v] = float(deg)
    return SymmetricMatrix(n, tuple(tuple(r) for r in rows))


def laplacian_matrix(g: BipartiteGraph) -> SymmetricMatrix:
    """Degree matrix minus adjacency."""
    return _with_degrees(g, -1.0)


def signless_laplacian_matrix(g: BipartiteGraph) -> SymmetricMatrix:
    """Degree matrix plus adjacency."""
    return _with_degrees(g, 1.0)


def spectral_summary(g: BipartiteGraph, tol: float = DEFAULT_TOL) -> SpectralSummary:
    """The three statistics the certificate checks consume: adjacency
    spectral radius, algebraic connectivity (second-smallest Laplacian
    eigenvalue), and the signless-Laplacian radius."""
    if g.order < 2:
        raise ValueError("spectral summary needs at least two vertices")
    sa = symmetric_eigenvalues(adjacency_matrix(g), tol)
    sl = symmetric_eigenvalues(laplacian_matrix(g), tol)
    sq = symmetric_eigenvalues(signless_laplacian_matrix(g), tol)
    return SpectralSummary(
        lambda1=sa.eigenvalues[0],
        alg_connectivity=sl.eigenvalues[-2],
        q1=sq.eigenvalues[0],
        residual_bound=max(sa.residual_bound, sl.residual_bound, sq.residual_bound),
    )


def lemma5_degree_bound(g: BipartiteGraph) -> Fraction:
    """max over vertices u of d(u) + (sum of neighbor degrees) / d(u),
    in exact rational arithmetic.

    Downstream equality classification needs to recognise exact rational
    values, hence the Fraction return.
    """
    best = None
    for v in range(g.order):
        nbrs = g.neighbors_global(v)
        d = len(nbrs)
        if d == 0:
            raise IsolatedVertex(f"vertex {v} has degree 0")
        val = Fraction(d) + Fraction(sum(len(g.neighbors_global(w)) for w in nbrs), d)
        if best is None or val > best:
            best = val
    return best
