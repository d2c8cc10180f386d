"""Command-line front end.

Three subcommands:

* ``classify``: read one graph, print its verdict as JSON;
* ``witness``: additionally emit checkable evidence (a triangular rank
  certificate for M = 2, or an exact rational corank-3 matrix for M >= 3
  when a K4/K2,3 homeomorph backs the verdict);
* ``survey``: classify a stream of graphs into a JSON-lines file, keyed by
  graph6 so an interrupted run can resume.

Defaults for --seed, --restarts and --max-exhaustive-n can also come from
the environment (MAXMULT2_SEED, MAXMULT2_RESTARTS, MAXMULT2_MAX_EXHAUSTIVE_N).
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import os
import sys
from typing import Optional, TextIO

import time

from .classify import Classification, classify
from .graphs import Graph, ParseError, parse_edge_list, parse_graph6, to_graph6
from .oracle import estimate_M, maximize_nullity
from .recognition import MAX_EXHAUSTIVE_N
from .witness import (
    construct_corank3_hK4,
    construct_corank3_hK23,
    verify_certificate,
)


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise SystemExit(f"invalid {name}={raw!r}")


def _read_graph(source: str, fmt: str) -> Graph:
    if source == "-":
        text = sys.stdin.read()
    else:
        with open(source, "r", encoding="ascii") as fh:
            text = fh.read()
    if fmt == "graph6":
        return parse_graph6(text.strip().splitlines()[0])
    return parse_edge_list(text)


def classification_doc(c: Classification) -> dict:
    doc = {
        "graph6": to_graph6(c.graph),
        "n": c.graph.n,
        "edges": len(c.graph.edges),
        "verdict": c.verdict,
        "m": c.m,
    }
    if c.cover is not None:
        doc["cover"] = {"p1": list(c.cover.p1), "p2": list(c.cover.p2)}
    if c.seac is not None:
        doc["cycle_chain"] = {
            "cycles": [list(cy) for cy in c.seac.cycles],
            "linear": c.seac.is_lseac,
            "distinguished": sorted(c.seac.distinguished),
        }
    if c.exceptional is not None:
        doc["exceptional"] = {
            "passed": c.exceptional.passed,
            "conditions": dict(c.exceptional.conditions),
            "facts": dict(c.exceptional.family_facts),
        }
    if c.reason is not None:
        doc["reason"] = {"kind": c.reason.kind, "detail": c.reason.detail}
        if c.reason.witness is not None:
            doc["reason"]["witness"] = {
                "kind": c.reason.witness.kind,
                "branch_vertices": list(c.reason.witness.branch_vertices),
                "paths": [list(p) for p in c.reason.witness.paths],
            }
        if c.reason.steps:
            doc["reason"]["steps"] = list(c.reason.steps)
    return doc


def _witness_doc(c: Classification, seed: int) -> dict:
    doc = classification_doc(c)
    if c.certificate is not None:
        doc["rank_certificate"] = {
            "deleted_rows": list(c.certificate.deleted_rows),
            "deleted_cols": list(c.certificate.deleted_cols),
            "row_order": list(c.certificate.row_order),
            "col_order": list(c.certificate.col_order),
        }
    if c.reason is not None and c.reason.witness is not None:
        w = c.reason.witness
        builder = construct_corank3_hK4 if w.kind == "hK4" else construct_corank3_hK23
        try:
            if w.kind == "hK4":
                mat = builder(c.graph, w, seed=seed)
            else:
                mat = builder(c.graph, w)
            doc["corank3_matrix"] = json.loads(mat.to_json(c.graph))
        except ValueError as exc:
            doc["corank3_matrix_error"] = str(exc)
    return doc


def _out_stream(path: Optional[str]) -> TextIO:
    if path is None or path == "-":
        return sys.stdout
    return open(path, "w", encoding="utf-8")


def _cmd_classify(args, emit_witness: bool) -> int:
    try:
        g = _read_graph(args.input, args.format)
    except (ParseError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    c = classify(g, max_exhaustive_n=args.max_exhaustive_n)
    doc = _witness_doc(c, args.seed) if emit_witness else classification_doc(c)
    if emit_witness and args.corank == 2:
        res = maximize_nullity(g, 2, seed=args.seed, restarts=args.restarts)
        if not res.success:
            print("error: no corank-2 realization found", file=sys.stderr)
            return 1
        doc = {
            "graph6": to_graph6(g),
            "corank": 2,
            "matrix": [[float(x) for x in row] for row in res.matrix],
            "residual": res.residual,
            "gap": res.gap,
        }
    elif emit_witness and args.corank == 3:
        if "corank3_matrix" not in doc:
            msg = doc.get(
                "corank3_matrix_error",
                "no K4/K2,3 homeomorph witness for this graph",
            )
            print(f"error: {msg}", file=sys.stderr)
            return 1
        doc = doc["corank3_matrix"]
    elif emit_witness and args.lower_bound:
        if "rank_certificate" not in doc:
            print("error: no triangular rank certificate found", file=sys.stderr)
            return 1
        doc = {"graph6": to_graph6(g), "rank_certificate": doc["rank_certificate"]}
    if args.oracle and "oracle_m" not in doc and not (emit_witness and args.corank):
        verdict = estimate_M(g, seed=args.seed, restarts=args.restarts)
        doc["oracle_m"] = verdict.m_estimate
    out = _out_stream(args.out)
    json.dump(doc, out, indent=2)
    out.write("\n")
    if out is not sys.stdout:
        out.close()
    return 0


def _cmd_survey(args) -> int:
    done = set()
    if args.out and args.out != "-" and os.path.exists(args.out):
        with open(args.out, "r", encoding="utf-8") as fh:
            for line in fh:
                line = line.strip()
                if line:
                    done.add(json.loads(line)["graph6"])
    if args.input == "-":
        lines = sys.stdin.read().splitlines()
    else:
        with open(args.input, "r", encoding="ascii") as fh:
            lines = fh.read().splitlines()
    out = (
        sys.stdout
        if not args.out or args.out == "-"
        else open(args.out, "a", encoding="utf-8")
    )
    failures = 0
    mismatches = 0
    try:
        for ln, line in enumerate(lines, start=1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            try:
                g = parse_graph6(line)
            except ParseError as exc:
                print(f"line {ln}: {exc}", file=sys.stderr)
                failures += 1
                continue
            key = to_graph6(g)
            if key in done:
                continue
            t0 = time.perf_counter()
            c = classify(g, max_exhaustive_n=args.max_exhaustive_n)
            rec = {
                "graph6": key,
                "n": g.n,
                "edges": len(g.edges),
                "verdict": c.verdict,
                "m": c.m,
            }
            if c.certificate is not None:
                ok = verify_certificate(g, c.certificate)
                rec["certificate"] = "verified" if ok else "failed"
                if not ok:
                    mismatches += 1
            if c.reason is not None:
                rec["reason"] = c.reason.kind
            if args.oracle:
                rec["oracle_m"] = estimate_M(
                    g, seed=args.seed, restarts=args.restarts
                ).m_estimate
                rec["agree"] = (rec["oracle_m"] == c.m) or (
                    c.m == 3 and rec["oracle_m"] >= 3
                )
                if not rec["agree"]:
                    mismatches += 1
            rec["ms"] = round(1000 * (time.perf_counter() - t0), 3)
            out.write(json.dumps(rec) + "\n")
            out.flush()
    finally:
        if out is not sys.stdout:
            out.close()
    if mismatches:
        print(f"{mismatches} internal mismatch(es) detected", file=sys.stderr)
        return 2
    return 1 if failures else 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="maxmult2",
        description="classify graphs by maximum eigenvalue multiplicity",
    )
    ap.add_argument(
        "--seed", type=int, default=_env_int("MAXMULT2_SEED", 0)
    )
    ap.add_argument(
        "--restarts", type=int, default=_env_int("MAXMULT2_RESTARTS", 32)
    )
    ap.add_argument(
        "--max-exhaustive-n",
        type=int,
        default=_env_int("MAXMULT2_MAX_EXHAUSTIVE_N", MAX_EXHAUSTIVE_N),
        help="size cap for exhaustive cover searches",
    )
    sub = ap.add_subparsers(dest="command", required=True)
    for name, help_ in (
        ("classify", "classify one graph"),
        ("witness", "classify and emit checkable evidence"),
    ):
        p = sub.add_parser(name, help=help_)
        p.add_argument("input", help="input file, or - for stdin")
        p.add_argument(
            "--format", choices=("graph6", "edgelist"), default="graph6"
        )
        p.add_argument("--out", default=None, help="output file (default stdout)")
        p.add_argument(
            "--oracle",
            action="store_true",
            help="also run the numeric multiplicity estimate",
        )
        if name == "witness":
            p.add_argument(
                "--corank",
                type=int,
                choices=(2, 3),
                default=None,
                help="emit only a corank-2 (numeric) or corank-3 (exact) matrix",
            )
            p.add_argument(
                "--lower-bound",
                action="store_true",
                help="emit only the triangular rank certificate",
            )
    p = sub.add_parser("survey", help="classify a graph6 stream (JSON lines)")
    p.add_argument("input", help="file of graph6 lines, or - for stdin")
    p.add_argument(
        "--out",
        default=None,
        help="JSON-lines output; existing records are kept and skipped",
    )
    p.add_argument("--oracle", action="store_true")
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "classify":
        return _cmd_classify(args, emit_witness=False)
    if args.command == "witness":
        return _cmd_classify(args, emit_witness=True)
    return _cmd_survey(args)


if __name__ == "__main__":
    sys.exit(main())
