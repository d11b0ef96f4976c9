"""Command-line surface: certify, oracle, gen, hunt, bounds.

Exit codes (scripted CI depends on these):
  0  success / all properties held
  1  malformed arguments
  2  I/O or graph parse failure
  3  property or soundness failure
  4  eigensolver non-convergence
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import certificates as cert
from . import hunt as hunt_mod
from . import oracle as orc
from .graphs import (GraphError, NTooSmall, generate_complete_bipartite,
                     generate_g1, parse_graph, serialize_graph)
from .spectral import NoConvergence, spectral_summary

SCHEMA_VERSION = "1"

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_IO = 2
EXIT_PROPERTY = 3
EXIT_NOCONVERGENCE = 4


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on bad arguments by default; the exit-code table
    # reserves 2 for I/O, so route usage errors to exit 1 instead
    def error(self, message):
        raise _UsageError(message)


def _read_graph(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return parse_graph(fh.read())
    except OSError as exc:
        raise GraphError(f"cannot read {path}: {exc}") from exc


def _dump_json(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def _document(command: str, input_desc: str, body: dict, timings=None) -> dict:
    doc = {"schema_version": SCHEMA_VERSION, "command": command, "input": input_desc}
    doc.update(body)
    if timings is not None:
        doc["timings_ms"] = timings
    return doc


def _print_table(rows, header=None, out=None):
    out = out or sys.stdout
    table = ([header] if header else []) + [[str(c) for c in r] for r in rows]
    if header:
        table[0] = [str(c) for c in header]
    widths = [max(len(r[i]) for r in table) for i in range(len(table[0]))]
    for idx, row in enumerate(table):
        out.write("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() + "\n")
        if header and idx == 0:
            out.write("  ".join("-" * w for w in widths) + "\n")


def _cmd_certify(args) -> int:
    t0 = time.perf_counter()
    g = _read_graph(args.input)
    report = cert.full_certificate(g)
    cert_ms = (time.perf_counter() - t0) * 1000.0
    body = {"certificate": cert.report_to_dict(report, args.exact_thresholds)}
    timings = {"certificate_ms": cert_ms}
    mismatch = False
    if args.with_oracle:
        t1 = time.perf_counter()
        verdict = orc.bipancyclicity_verdict(g) if g.is_balanced and g.order >= 4 else None
        timings["oracle_ms"] = (time.perf_counter() - t1) * 1000.0
        body["oracle"] = None if verdict is None else {
            "even_lengths_present": sorted(verdict.even_lengths_present),
            "missing_even_lengths": sorted(verdict.missing_even_lengths),
            "bipancyclic": verdict.bipancyclic,
            "hamiltonian": verdict.hamiltonian,
        }
        mismatch = (report.certified_bipancyclic
                    and (verdict is None or not verdict.bipancyclic))
        body["soundness_ok"] = not mismatch
    if args.json:
        sys.stdout.write(_dump_json(_document("certify", args.input, body, timings)))
    else:
        d = body["certificate"]
        print(f"graph: {d['graph']['n_x']}+{d['graph']['n_y']} vertices, "
              f"{d['graph']['edge_count']} edges, delta={d['graph']['min_degree']}, "
              f"connected={d['graph']['connected']}")
        if d["theorems"]:
            rows = [[t, v["threshold"], f"{v['measured']:.12g}",
                     v["premise_holds"], v["concludes_bipancyclic"]]
                    for t, v in sorted(d["theorems"].items())]
            _print_table(rows, ["theorem", "threshold", "measured", "premise", "concludes"])
        print(f"lemma1: {d['lemma1']}")
        print(f"lemma6: {d['lemma6']}")
        print(f"certified bipancyclic: {d['certified_bipancyclic']} "
              f"(via {', '.join(d['certified_by']) or 'nothing'})")
        if args.with_oracle:
            print(f"oracle: {body['oracle']}")
            print(f"soundness ok: {body['soundness_ok']}")
    return EXIT_PROPERTY if mismatch else EXIT_OK


def _cmd_oracle(args) -> int:
    t0 = time.perf_counter()
    g = _read_graph(args.input)
    verdict = orc.bipancyclicity_verdict(g, want_witnesses=args.witnesses)
    conn = orc.vertex_connectivity(g)
    timings = {"oracle_ms": (time.perf_counter() - t0) * 1000.0}
    body = {
        "oracle": {
            "even_lengths_present": sorted(verdict.even_lengths_present),
            "missing_even_lengths": sorted(verdict.missing_even_lengths),
            "bipancyclic": verdict.bipancyclic,
            "hamiltonian": verdict.hamiltonian,
            "witnesses": None if verdict.witnesses is None else
                {str(k): list(v) for k, v in sorted(verdict.witnesses.items())},
            "kappa": conn.kappa,
            "separator": None if conn.separator is None else sorted(conn.separator),
        }
    }
    if args.json:
        sys.stdout.write(_dump_json(_document("oracle", args.input, body, timings)))
    else:
        o = body["oracle"]
        print(f"even cycle lengths present: {o['even_lengths_present']}")
        print(f"missing: {o['missing_even_lengths']}")
        print(f"bipancyclic: {o['bipancyclic']}  hamiltonian: {o['hamiltonian']}")
        print(f"kappa: {o['kappa']}  separator: {o['separator']}")
        if args.witnesses and o["witnesses"]:
            for k, v in o["witnesses"].items():
                print(f"  {k}-cycle: {v}")
    return EXIT_OK


def _cmd_gen(args) -> int:
    if args.kind == "g1":
        g = generate_g1(args.n)
    else:
        g = generate_complete_bipartite(args.s, args.t)
    with open(args.output, "w", encoding="utf-8") as fh:
        fh.write(serialize_graph(g))
    print(f"wrote {g.n_x}+{g.n_y} graph with {g.edge_count} edges to {args.output}")
    return EXIT_OK


def _cmd_hunt(args) -> int:
    checks = hunt_mod.ALL_CHECKS if args.check == "all" else (args.check,)
    constraints = hunt_mod.GraphConstraints(
        n=args.n, require_connected=args.connected, min_degree=args.min_degree)
    if args.exhaustive:
        report = hunt_mod.run_hunt(constraints, checks, mode="exhaustive",
                                   jobs=args.jobs, dedup=args.dedup)
    else:
        report = hunt_mod.run_hunt(constraints, checks, mode="random",
                                   count=args.random, p=args.p, seed=args.seed,
                                   jobs=args.jobs)
    if args.outdir:
        for prop, res in report.properties.items():
            if not res.counterexamples:
                continue
            d = os.path.join(args.outdir, prop)
            os.makedirs(d, exist_ok=True)
            for idx, text in enumerate(res.counterexamples):
                with open(os.path.join(d, f"{idx}.bg"), "w", encoding="utf-8") as fh:
                    fh.write(text)
    body = {
        "parameters": {
            "n": args.n,
            "mode": "exhaustive" if args.exhaustive else "random",
            "count": None if args.exhaustive else args.random,
            "p": None if args.exhaustive else args.p,
            "seed": None if args.exhaustive else args.seed,
            "min_degree": args.min_degree,
            "require_connected": args.connected,
            "dedup": args.dedup,
            "checks": list(checks),
        },
        "report": {
            "graphs_examined": report.graphs_examined,
            "graphs_passing_filters": report.graphs_passing_filters,
            "properties": {
                c: {
                    "checked": r.checked,
                    "premise_satisfied": r.premise_satisfied,
                    "counterexamples": r.counterexamples,
                } for c, r in report.properties.items()
            },
        },
    }
    # wall time is reported only on request so fixed-seed runs stay
    # byte-identical across repeats and worker counts
    timings = {"hunt_ms": report.wall_time_s * 1000.0} if args.timings else None
    if args.json:
        spec = f"n={args.n} " + ("exhaustive" if args.exhaustive
                                 else f"random count={args.random} p={args.p} seed={args.seed}")
        sys.stdout.write(_dump_json(_document("hunt", spec, body, timings)))
    else:
        print(f"examined {report.graphs_examined} graphs, "
              f"{report.graphs_passing_filters} passed filters")
        rows = [[c, r.checked, r.premise_satisfied, len(r.counterexamples)]
                for c, r in sorted(report.properties.items())]
        _print_table(rows, ["check", "checked", "premise", "counterexamples"])
    return EXIT_OK if report.total_counterexamples == 0 else EXIT_PROPERTY


def _cmd_bounds(args) -> int:
    t0 = time.perf_counter()
    g = _read_graph(args.input)
    summary = spectral_summary(g)
    kappa = orc.vertex_connectivity(g).kappa
    entries = cert.bounds_audit(g, summary, kappa)
    timings = {"bounds_ms": (time.perf_counter() - t0) * 1000.0}
    body = {"bounds": [
        {"lemma": b.lemma_id, "measured": b.measured, "bound": b.bound,
         "slack": b.slack, "equality": b.equality,
         "equality_classification": b.equality_classification,
         "classification_consistent": b.classification_consistent}
        for b in entries]}
    if args.json:
        sys.stdout.write(_dump_json(_document("bounds", args.input, body, timings)))
    else:
        rows = [[b.lemma_id, f"{b.measured:.12g}", f"{b.bound:.12g}",
                 f"{b.slack:.3e}", b.equality, b.equality_classification or "-"]
                for b in entries]
        _print_table(rows, ["lemma", "measured", "bound", "slack", "equality", "class"])
    return EXIT_OK


def _build_parser() -> _Parser:
    parser = _Parser(prog="bipancert",
                     description="Certify bipancyclicity of balanced bipartite "
                                 "graphs via spectral and degree conditions.")
    sub = parser.add_subparsers(dest="command", required=True)

    pc = sub.add_parser("certify", help="run the full certificate on a graph file")
    pc.add_argument("--input", required=True)
    pc.add_argument("--json", action="store_true")
    pc.add_argument("--with-oracle", action="store_true", dest="with_oracle")
    pc.add_argument("--exact-thresholds", action="store_true", dest="exact_thresholds")
    pc.set_defaults(func=_cmd_certify)

    po = sub.add_parser("oracle", help="brute-force cycle spectrum and connectivity")
    po.add_argument("--input", required=True)
    po.add_argument("--witnesses", action="store_true")
    po.add_argument("--json", action="store_true")
    po.set_defaults(func=_cmd_oracle)

    pg = sub.add_parser("gen", help="write a named construction to a file")
    gsub = pg.add_subparsers(dest="kind", required=True)
    g1 = gsub.add_parser("g1")
    g1.add_argument("--n", type=int, required=True)
    g1.add_argument("-o", "--output", required=True)
    g1.set_defaults(func=_cmd_gen)
    kk = gsub.add_parser("complete")
    kk.add_argument("--s", type=int, required=True)
    kk.add_argument("--t", type=int, required=True)
    kk.add_argument("-o", "--output", required=True)
    kk.set_defaults(func=_cmd_gen)

    ph = sub.add_parser("hunt", help="property hunt over enumerated or random graphs")
    ph.add_argument("--n", type=int, required=True)
    mode = ph.add_mutually_exclusive_group(required=True)
    mode.add_argument("--exhaustive", action="store_true")
    mode.add_argument("--random", type=int, metavar="COUNT")
    ph.add_argument("--p", type=float, default=0.5)
    ph.add_argument("--seed", type=int, default=0)
    ph.add_argument("--min-degree", type=int, default=0, dest="min_degree")
    ph.add_argument("--connected", action="store_true")
    ph.add_argument("--dedup", action="store_true")
    ph.add_argument("--check", default="all",
                    choices=("all",) + hunt_mod.ALL_CHECKS)
    ph.add_argument("--outdir")
    ph.add_argument("--json", action="store_true")
    ph.add_argument("--timings", action="store_true")
    ph.add_argument("--jobs", type=int,
                    default=int(os.environ.get("BIPANCERT_JOBS", "1")))
    ph.set_defaults(func=_cmd_hunt)

    pb = sub.add_parser("bounds", help="audit the supporting spectral bounds")
    pb.add_argument("--input", required=True)
    pb.add_argument("--json", action="store_true")
    pb.set_defaults(func=_cmd_bounds)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    try:
        return args.func(args)
    except NTooSmall as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except hunt_mod.NTooLargeForExhaustive as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except NoConvergence as exc:
        sys.stderr.write(f"eigensolver failed to converge: {exc}\n")
        return EXIT_NOCONVERGENCE
    except GraphError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
