"""Certifier for spectral and degree sufficient conditions of bipancyclicity
in balanced bipartite graphs, validated against a brute-force oracle."""

from .certificates import (BoundAudit, CertificateReport, Lemma1Result,
                           Lemma1Violation, Lemma6Outcome, TheoremVerdict,
                           bounds_audit, full_certificate,
                           lemma1_degree_condition, lemma6_edge_condition,
                           lemma6_identity, theorem_check, theorem_thresholds)
from .graphs import (BipartiteGraph, DegreeProfile, build_graph,
                     degree_profile, generate_complete_bipartite, generate_g1,
                     is_connected, is_g1, parse_graph, serialize_graph)
from .hunt import (GraphConstraints, HuntReport, enumerate_graphs,
                   property_suite, random_graph, run_hunt)
from .oracle import (ConnectivityResult, OracleVerdict, bipancyclicity_verdict,
                     has_cycle_of_length, vertex_connectivity)
from .spectral import (SpectralSummary, Spectrum, SymmetricMatrix,
                       lemma5_degree_bound, spectral_summary,
                       symmetric_eigenvalues)

__version__ = "0.1.0"
