"""Command-line front end.

Subcommands:

* verify      -- run one bound variant on a polynomial and a graph
* sweep       -- seeded randomized soundness campaign
* certificate -- dump the reduction certificate for a polynomial and graph
* invariants  -- print Mahler measure, |Disc|, |sDisc_{d-r}|, r and d

All outputs are JSON (stdout or --out, written atomically). Exit codes:
0 = verdict holds / success, 2 = inconclusive at the precision ceiling,
1 = input error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile

from .bounds import VARIANTS, reduce_vandermonde, verify
from .errors import ParseError, RootsepError, ValidationError
from .graph import PRESET_NAMES, orient, parse_graph_json, preset_edges
from .invariants import compute_invariants
from .parsing import parse_polynomial, render_exact_poly
from .poly import ExactPoly
from .roots import find_roots
from .sweep import GRAPH_KINDS, SweepParams, run_sweep

_ALLOWED_PRECISIONS = (64, 128, 256, 512, 1024)

EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_INCONCLUSIVE = 2


def _write_report(data: dict, out: str | None) -> None:
    text = json.dumps(data, indent=2, sort_keys=False)
    if out is None:
        print(text)
        return
    directory = os.path.dirname(os.path.abspath(out)) or "."
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".report-", suffix=".json")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
            fh.write("\n")
        os.replace(tmp, out)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _error_report(exc: Exception) -> dict:
    payload = {"type": type(exc).__name__, "message": str(exc)}
    if isinstance(exc, ParseError) and exc.position is not None:
        payload["position"] = exc.position
    return {"error": payload}


def _check_precision(bits: int) -> int:
    if bits not in _ALLOWED_PRECISIONS:
        raise ValidationError(
            f"precision must be a power of two between 64 and 1024, got {bits}"
        )
    return bits


def _resolve_graph(args, roots):
    if args.preset is not None:
        return orient(preset_edges(args.preset, roots), roots)
    if args.graph is not None:
        return parse_graph_json(args.graph, roots)
    raise ValidationError("provide --graph JSON or --preset NAME")


def _cmd_verify(args) -> int:
    try:
        precision = _check_precision(args.precision)
        ceiling = _check_precision(args.ceiling)
        p = parse_polynomial(args.poly, precision)
        roots = find_roots(p, precision)
        subset = None
        hints = None
        if args.variant == "sep_product":
            subset = (
                json.loads(args.subset) if args.subset else list(range(roots.r))
            )
        if args.variant == "remark_pairs":
            if not args.hints:
                raise ValidationError(
                    'remark_pairs requires --hints JSON [[gamma, delta, Delta], ...]'
                )
            hints = [tuple(h) for h in json.loads(args.hints)]
        if args.variant == "sep_product":
            graph = None
        else:
            graph = _resolve_graph(args, roots)
        report = verify(
            p,
            graph.edges if graph is not None else None,
            args.variant,
            precision=precision,
            ceiling=ceiling,
            hints=hints,
            subset=subset,
        )
    except (RootsepError, json.JSONDecodeError, ValueError) as exc:
        _write_report(_error_report(exc), args.out)
        return EXIT_INPUT_ERROR
    _write_report(report.to_json(poly_repr=args.poly), args.out)
    return EXIT_OK if report.holds else EXIT_INCONCLUSIVE


def _cmd_sweep(args) -> int:
    try:
        precision = _check_precision(args.precision)
        ceiling = _check_precision(args.ceiling)
        params = SweepParams(
            count=args.count,
            max_degree=args.max_degree,
            max_multiplicity=args.max_multiplicity,
            graph_kinds=tuple(args.graphs.split(",")) if args.graphs else GRAPH_KINDS,
            precision_bits=precision,
            ceiling_bits=ceiling,
        )
        params.validate()
        summary = run_sweep(args.seed, params, jobs=args.jobs)
    except (RootsepError, ValueError) as exc:
        _write_report(_error_report(exc), args.out)
        return EXIT_INPUT_ERROR
    if not args.full:
        summary = {k: v for k, v in summary.items() if k != "instances"}
    _write_report(summary, args.out)
    if summary["violations"]:
        return EXIT_INCONCLUSIVE
    return EXIT_OK if summary["unresolved"] == 0 else EXIT_INCONCLUSIVE


def _cmd_certificate(args) -> int:
    try:
        precision = _check_precision(args.precision)
        p = parse_polynomial(args.poly, precision)
        roots = find_roots(p, precision)
        graph = _resolve_graph(args, roots)
        cert = reduce_vandermonde(roots, graph, precision)
    except (RootsepError, json.JSONDecodeError, ValueError) as exc:
        _write_report(_error_report(exc), args.out)
        return EXIT_INPUT_ERROR
    payload = cert.to_json()
    payload["roots"] = roots.to_json()
    payload["graph"] = graph.to_json()
    payload["precision_bits"] = precision
    _write_report(payload, args.out)
    return EXIT_OK


def _cmd_invariants(args) -> int:
    try:
        precision = _check_precision(args.precision)
        p = parse_polynomial(args.poly, precision)
        roots = find_roots(p, precision)
        bundle = compute_invariants(p, precision, roots=roots)
    except (RootsepError, ValueError) as exc:
        _write_report(_error_report(exc), args.out)
        return EXIT_INPUT_ERROR
    payload = bundle.to_json()
    payload["r"] = roots.r
    payload["d"] = roots.total_degree
    payload["roots"] = roots.to_json()
    payload["precision_bits"] = precision
    if isinstance(p, ExactPoly):
        payload["polynomial"] = render_exact_poly(p)
    _write_report(payload, args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="rootsep",
        description="Certified lower bounds for products of root distances over graphs",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def add_common(sp, graph: bool = True):
        sp.add_argument("--poly", required=True, help="polynomial text or JSON")
        if graph:
            sp.add_argument("--graph", help='graph JSON {"edges": [[i, j], ...]}')
            sp.add_argument(
                "--preset", choices=PRESET_NAMES, help="named graph preset"
            )
        sp.add_argument("--precision", type=int, default=128)
        sp.add_argument("--out", help="output path (atomic write); default stdout")

    v = sub.add_parser("verify", help="verify one bound variant")
    add_common(v)
    v.add_argument("--variant", choices=VARIANTS, default="main")
    v.add_argument("--ceiling", type=int, default=1024)
    v.add_argument("--hints", help="JSON [[gamma, delta, Delta], ...] for remark_pairs")
    v.add_argument("--subset", help="JSON [indices] for sep_product (default: all roots)")
    v.set_defaults(func=_cmd_verify)

    s = sub.add_parser("sweep", help="randomized soundness campaign")
    s.add_argument("--count", type=int, default=1000)
    s.add_argument("--seed", type=int, default=42)
    s.add_argument("--max-degree", type=int, default=12)
    s.add_argument("--max-multiplicity", type=int, default=4)
    s.add_argument("--graphs", help="comma list from: " + ",".join(GRAPH_KINDS))
    s.add_argument("--precision", type=int, default=128)
    s.add_argument("--ceiling", type=int, default=512)
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--full", action="store_true", help="include per-instance records")
    s.add_argument("--out", help="output path (atomic write); default stdout")
    s.set_defaults(func=_cmd_sweep)

    c = sub.add_parser("certificate", help="dump the reduction certificate")
    add_common(c)
    c.set_defaults(func=_cmd_certificate)

    inv = sub.add_parser("invariants", help="print M, |Disc|, |sDisc_{d-r}|, r, d")
    add_common(inv, graph=False)
    inv.set_defaults(func=_cmd_invariants)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
