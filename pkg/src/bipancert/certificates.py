"""Executable sufficient conditions for bipancyclicity, with an audit trail.

Three spectral theorems (adjacency radius, algebraic connectivity, signless
Laplacian radius), a degree-sequence condition, an edge-count dichotomy, and
bound audits for the supporting inequalities.  Premise comparisons lean
toward "holds" by an epsilon of 1e-9: thresholds are exact rationals while
measured eigenvalues carry solver residuals, and over-claiming is caught by
the oracle cross-check, never hidden.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional

from .graphs import (BipartiteGraph, GraphError, NotBalanced, NTooSmall,
                     is_connected, is_g1)
from .oracle import vertex_connectivity
from .spectral import SpectralSummary, lemma5_degree_bound, spectral_summary

EPSILON = 1e-9


class NotConnected(GraphError):
    """Bound audits assume a connected graph."""


class KOutOfRange(GraphError):
    """Counting-identity index outside 1 <= k < n."""


@dataclass(frozen=True)
class TheoremVerdict:
    theorem_id: str  # T1 | T2 | T3
    threshold: Fraction  # for T1 this is the *square* of the spectral threshold
    measured: float
    premise_holds: bool
    side_conditions_ok: bool
    concludes_bipancyclic: bool


@dataclass(frozen=True)
class Lemma1Violation:
    k: int
    dx_k: int
    dy_nmk: int


@dataclass(frozen=True)
class Lemma1Result:
    holds: bool
    violation_xy: Optional[Lemma1Violation]  # X low side, Y high side
    violation_yx: Optional[Lemma1Violation]  # sides swapped


class Lemma6Outcome(enum.Enum):
    BIPANCYCLIC = "bipancyclic"
    IS_G1 = "is_g1"
    INAPPLICABLE = "inapplicable"


@dataclass(frozen=True)
class BoundAudit:
    lemma_id: str  # L2 | L3 | L4 | L5
    measured: float
    bound: float
    bound_exact: Optional[Fraction]
    slack: float
    equality: bool
    equality_classification: Optional[str]
    classification_consistent: Optional[bool]


@dataclass(frozen=True)
class CertificateReport:
    n_x: int
    n_y: int
    balanced: bool
    edge_count: int
    min_degree: int
    connected: bool
    spectral: Optional[SpectralSummary]
    kappa: Optional[int]
    theorems: Optional[dict]  # id -> TheoremVerdict, balanced graphs only
    lemma1: Optional[Lemma1Result]
    lemma6: Optional[Lemma6Outcome]
    bounds: Optional[List[BoundAudit]]
    certified_bipancyclic: bool
    certified_by: tuple


def theorem_thresholds(n: int) -> dict:
    """Exact rational premise thresholds as a function of the side size.
    T1's entry is the square of the adjacency-radius threshold."""
    return {
        "T1": Fraction(n * n - 2 * n + 4),
        "T2": Fraction(2 * (n * n - 2 * n + 4), n),
        "T3": Fraction(2 * (n * n - n + 2), n),
    }


def theorem_check(g: BipartiteGraph, which: str, summary: SpectralSummary) -> TheoremVerdict:
    """Evaluate one spectral premise against its exact threshold.

    T1 is compared as measured^2 >= n^2 - 2n + 4 - eps so the threshold
    stays rational; T2 uses the algebraic connectivity and T3 the signless
    Laplacian radius directly.
    """
    if not g.is_balanced:
        raise NotBalanced("theorem premises are stated for balanced graphs")
    n = g.n_x
    threshold = theorem_thresholds(n)[which]
    if which == "T1":
        measured = summary.lambda1
        premise = measured * measured >= float(threshold) - EPSILON
    elif which == "T2":
        measured = summary.alg_connectivity
        premise = measured >= float(threshold) - EPSILON
    elif which == "T3":
        measured = summary.q1
        premise = measured >= float(threshold) - EPSILON
    else:
        raise ValueError(f"unknown theorem id {which!r}")
    side_ok = g.is_balanced and n >= 4 and g.min_degree >= 2 and is_connected(g)
    return TheoremVerdict(
        theorem_id=which,
        threshold=threshold,
        measured=measured,
        premise_holds=premise,
        side_conditions_ok=side_ok,
        concludes_bipancyclic=premise and side_ok,
    )


def _orientation_violation(low, high, n: int) -> Optional[Lemma1Violation]:
    # low/high are nondecreasing degree sequences; 1-indexed in the math
    for k in range(1, n):
        if low[k - 1] <= k and high[n - k - 1] <= n - k:
            return Lemma1Violation(k=k, dx_k=low[k - 1], dy_nmk=high[n - k - 1])
    return None


def lemma1_degree_condition(g: BipartiteGraph) -> Lemma1Result:
    """Degree-sequence sufficient condition, checked in both orientations
    of the bipartition (the labeling of the sides is arbitrary).

    Holds when, in some orientation, d(x_k) <= k implies
    d(y_{n-k}) >= n - k + 1 for every 1 <= k < n.  Violations carry the
    smallest failing k per orientation.
    """
    if not g.is_balanced:
        raise NotBalanced("degree condition is stated for balanced graphs")
    n = g.n_x
    if n < 4:
        raise NTooSmall("degree condition needs n >= 4")
    xd = sorted(g.x_degrees())
    yd = sorted(g.y_degrees())
    vxy = _orientation_violation(xd, yd, n)
    vyx = _orientation_violation(yd, xd, n)
    return Lemma1Result(holds=vxy is None or vyx is None,
                        violation_xy=vxy, violation_yx=vyx)


def lemma6_edge_condition(g: BipartiteGraph) -> Lemma6Outcome:
    """Edge-count dichotomy: with n >= 4, minimum degree >= 2 and
    e >= n^2 - 2n + 4, the graph is bipancyclic unless it is the extremal
    graph itself."""
    if not g.is_balanced:
        raise NotBalanced("edge condition is stated for balanced graphs")
    n = g.n_x
    if n < 4 or g.min_degree < 2 or g.edge_count < n * n - 2 * n + 4:
        return Lemma6Outcome.INAPPLICABLE
    if is_g1(g):
        return Lemma6Outcome.IS_G1
    return Lemma6Outcome.BIPANCYCLIC


def lemma6_identity(n: int, k: int):
    """Both sides of the degree-sum counting identity; the caller asserts
    they agree.  Exact integer arithmetic."""
    if not 1 <= k < n:
        raise KOutOfRange(f"need 1 <= k < n, got k={k}, n={n}")
    lhs = k * k + (n - k) * n + (n - k) * (n - k) + k * n
    rhs = 2 * n * n - 4 * n + 8 - (k - 2) * (2 * n - 2 * k - 4)
    return lhs, rhs


def bounds_audit(g: BipartiteGraph, summary: SpectralSummary, kappa: int) -> List[BoundAudit]:
    """Audit entries for the four supporting bounds.

    L2: adjacency radius <= sqrt(e), equality only for complete bipartite.
    L3: algebraic connectivity <= vertex connectivity (noncomplete graphs).
    L4: signless radius <= e/n + n (balanced graphs only; skipped otherwise).
    L5: signless radius <= max degree-average bound, equality only for
        regular or semiregular bipartite graphs.
    """
    if not is_connected(g):
        raise NotConnected("bound audits assume a connected graph")
    entries = []

    e = g.edge_count
    sqrt_e = math.sqrt(e)
    eq2 = abs(summary.lambda1 - sqrt_e) <= EPSILON
    entries.append(BoundAudit(
        lemma_id="L2", measured=summary.lambda1, bound=sqrt_e, bound_exact=None,
        slack=sqrt_e - summary.lambda1, equality=eq2,
        equality_classification="complete_bipartite" if g.is_complete_bipartite else "not_complete_bipartite",
        classification_consistent=(not eq2) or g.is_complete_bipartite,
    ))

    # a bipartite graph on >= 3 vertices is never complete; only K_{1,1} is
    if g.order > 2:
        entries.append(BoundAudit(
            lemma_id="L3", measured=summary.alg_connectivity,
            bound=float(kappa), bound_exact=Fraction(kappa),
            slack=kappa - summary.alg_connectivity,
            equality=abs(summary.alg_connectivity - kappa) <= EPSILON,
            equality_classification=None, classification_consistent=None,
        ))

    if g.is_balanced:
        n = g.n_x
        b4 = Fraction(e, n) + n
        entries.append(BoundAudit(
            lemma_id="L4", measured=summary.q1, bound=float(b4), bound_exact=b4,
            slack=float(b4) - summary.q1,
            equality=abs(summary.q1 - float(b4)) <= EPSILON,
            equality_classification=None, classification_consistent=None,
        ))

    b5 = lemma5_degree_bound(g)
    eq5 = abs(summary.q1 - float(b5)) <= EPSILON
    if g.is_regular:
        cls5 = "regular"
    elif g.is_semiregular:
        cls5 = "semiregular_bipartite"
    else:
        cls5 = "irregular"
    entries.append(BoundAudit(
        lemma_id="L5", measured=summary.q1, bound=float(b5), bound_exact=b5,
        slack=float(b5) - summary.q1, equality=eq5,
        equality_classification=cls5,
        classification_consistent=(not eq5) or cls5 != "irregular",
    ))
    return entries


def full_certificate(g: BipartiteGraph) -> CertificateReport:
    """Run every check that applies and compose the overall verdict.

    The graph is certified bipancyclic when any of the three spectral
    premises concludes, the degree condition holds, or the edge-count
    dichotomy lands on the bipancyclic branch.  Sections whose hypotheses
    fail are left as None rather than erroring, so batch runs never abort.
    """
    balanced = g.is_balanced
    connected = is_connected(g)
    summary = spectral_summary(g) if g.order >= 2 else None
    kappa = vertex_connectivity(g).kappa if g.order >= 2 else None

    theorems = None
    if balanced and summary is not None:
        theorems = {t: theorem_check(g, t, summary) for t in ("T1", "T2", "T3")}

    lemma1 = None
    if balanced and g.n_x >= 4:
        lemma1 = lemma1_degree_condition(g)

    lemma6 = lemma6_edge_condition(g) if balanced else None

    bounds = None
    if connected and summary is not None:
        bounds = bounds_audit(g, summary, kappa)

    certified_by = []
    if theorems is not None:
        for t in ("T1", "T2", "T3"):
            if theorems[t].concludes_bipancyclic:
                certified_by.append(t)
    if lemma1 is not None and lemma1.holds:
        certified_by.append("L1")
    if lemma6 == Lemma6Outcome.BIPANCYCLIC:
        certified_by.append("L6")

    return CertificateReport(
        n_x=g.n_x, n_y=g.n_y, balanced=balanced, edge_count=g.edge_count,
        min_degree=g.min_degree, connected=connected, spectral=summary,
        kappa=kappa, theorems=theorems, lemma1=lemma1, lemma6=lemma6,
        bounds=bounds, certified_bipancyclic=bool(certified_by),
        certified_by=tuple(certified_by),
    )


def _frac_str(f: Optional[Fraction]) -> Optional[str]:
    if f is None:
        return None
    return str(f)


def report_to_dict(report: CertificateReport, exact_thresholds: bool = False) -> dict:
    """JSON-ready projection of a certificate report.

    With exact_thresholds, rational thresholds and bounds are emitted as
    exact `p/q` strings instead of floats.
    """
    def frac_out(f: Fraction):
        return _frac_str(f) if exact_thresholds else float(f)

    doc = {
        "graph": {
            "n_x": report.n_x, "n_y": report.n_y, "balanced": report.balanced,
            "edge_count": report.edge_count, "min_degree": report.min_degree,
            "connected": report.connected,
        },
        "spectral": None if report.spectral is None else {
            "lambda1": report.spectral.lambda1,
            "algebraic_connectivity": report.spectral.alg_connectivity,
            "q1": report.spectral.q1,
            "residual_bound": report.spectral.residual_bound,
        },
        "kappa": report.kappa,
        "theorems": None if report.theorems is None else {
            t: {
                "threshold": frac_out(v.threshold),
                "squared_comparison": t == "T1",
                "measured": v.measured,
                "premise_holds": v.premise_holds,
                "side_conditions_ok": v.side_conditions_ok,
                "concludes_bipancyclic": v.concludes_bipancyclic,
            } for t, v in report.theorems.items()
        },
        "lemma1": None if report.lemma1 is None else {
            "holds": report.lemma1.holds,
            "violation_xy": None if report.lemma1.violation_xy is None else vars(report.lemma1.violation_xy).copy(),
            "violation_yx": None if report.lemma1.violation_yx is None else vars(report.lemma1.violation_yx).copy(),
        },
        "lemma6": None if report.lemma6 is None else report.lemma6.value,
        "bounds": None if report.bounds is None else [
            {
                "lemma": b.lemma_id, "measured": b.measured,
                "bound": frac_out(b.bound_exact) if (exact_thresholds and b.bound_exact is not None) else b.bound,
                "slack": b.slack, "equality": b.equality,
                "equality_classification": b.equality_classification,
                "classification_consistent": b.classification_consistent,
            } for b in report.bounds
        ],
        "certified_bipancyclic": report.certified_bipancyclic,
        "certified_by": list(report.certified_by),
    }
    return doc
