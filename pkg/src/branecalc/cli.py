"""Command-line front end.

Exit status: 0 success, 1 verification failure, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import List, Optional

from . import __version__
from .algebra import AlgebraError, Element, format_element
from .brane import PreconditionError, brane_operation, verify_invariants
from .cohomology import cohomology_dims
from .parsing import ParseError, element_to_json, parse_model
from .sullivan import ModelError, SullivanModel, check_pure, is_minimal

ENV_MAX_DEGREE = "BRANECALC_MAX_DEGREE"
EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _read_model(path: str) -> SullivanModel:
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    return parse_model(text)


def _max_degree(args, m: SullivanModel) -> int:
    if getattr(args, "max_degree", None) is not None:
        n = args.max_degree
    elif os.environ.get(ENV_MAX_DEGREE):
        raw = os.environ[ENV_MAX_DEGREE]
        try:
            n = int(raw)
        except ValueError:
            raise InputError(f"{ENV_MAX_DEGREE} must be an integer, got {raw!r}") from None
    else:
        n = m.default_truncation()
    if n < 0:
        raise InputError(f"max degree must be non-negative, got {n}")
    return n


def _document(command: dict, truncation: Optional[int], result: dict) -> dict:
    return {"engine": {"name": "branecalc", "version": __version__},
            "command": command, "truncation": truncation, "result": result}


def _emit(doc: dict, lines: List[str], fmt: str, out):
    if fmt == "json":
        out.write(json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n")
    else:
        out.write(f"branecalc {__version__}\n")
        for line in lines:
            out.write(line + "\n")


def cmd_check(args, out) -> int:
    m = _read_model(args.model)
    pure, witness = check_pure(m)
    conn = min(m.algebra.degrees) - 1
    result = {
        "name": m.name,
        "generators": [{"name": g.name, "degree": g.degree, "d": element_to_json(m.dgen(g.name))}
                       for g in m.generators],
        "square_zero": True,
        "pure": pure,
        "impure_generator": witness,
        "minimal": is_minimal(m),
        "connectivity": conn,
        "default_max_degree": m.default_truncation(),
    }
    lines = [f"model: {m.name or '(unnamed)'}"]
    for g in m.generators:
        lines.append(f"  {g.name} (degree {g.degree}): d = {format_element(m.dgen(g.name))}")
    lines.append("d^2 = 0: yes")
    lines.append(f"pure: {'yes' if pure else 'no (' + witness + ')'}")
    lines.append(f"minimal: {'yes' if result['minimal'] else 'no'}")
    lines.append(f"connectivity: {conn}")
    _emit(_document({"name": "check", "model": args.model}, None, result), lines, args.format, out)
    return EXIT_OK


def cmd_cohomology(args, out) -> int:
    m = _read_model(args.model)
    n = _max_degree(args, m)
    dims = cohomology_dims(m, n)
    lines = [f"model: {m.name or '(unnamed)'}", "degree  dim"]
    lines += [f"{i:>6}  {d}" for i, d in enumerate(dims)]
    doc = _document({"name": "cohomology", "model": args.model, "max_degree": n}, n, {"dimensions": dims})
    _emit(doc, lines, args.format, out)
    return EXIT_OK


def cmd_brane(args, out) -> int:
    m = _read_model(args.model)
    n = _max_degree(args, m)
    op, report = brane_operation(m, args.k, args.op, n, section=args.section)
    if report is None:
        report = op.nontriviality(n)
    slices = []
    lines = [f"model: {m.name or '(unnamed)'}  k={args.k}  op={args.op}  max-degree={n}",
             f"degree shift: {op.degree_shift:+d}"]
    for deg in range(n + 1):
        entries = op.slice(deg)
        nonzero = [(mono, img) for mono, img in entries if img]
        slices.append({"degree": deg, "dimension": len(entries),
                       "images": [[format_element(Element(op.source.algebra, {mono: 1})), element_to_json(img)]
                                  for mono, img in nonzero]})
        lines.append(f"slice {deg} (dim {len(entries)}, {len(nonzero)} nonzero)")
        for mono, img in nonzero:
            lines.append(f"  {format_element(Element(op.source.algebra, {mono: 1}))} ↦ {format_element(img)}")
    witnesses = [[element_to_json(a), element_to_json(b)] for a, b in report.witnesses]
    lines.append(f"verdict: {report.verdict}")
    for a, b in report.witnesses:
        lines.append(f"witness: {format_element(a)} ↦ {format_element(b)}")
    result = {"degree_shift": op.degree_shift, "slices": slices, "verdict": report.verdict,
              "witnesses": witnesses, "source": op.source.name, "target": op.target.name}
    command = {"name": "brane", "model": args.model, "k": args.k, "op": args.op,
               "max_degree": n, "section": args.section}
    _emit(_document(command, n, result), lines, args.format, out)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    m = _read_model(args.model)
    n = _max_degree(args, m)
    results = verify_invariants(m, args.k, n)
    ok = all(passed for _, passed, _ in results)
    lines = [f"model: {m.name or '(unnamed)'}  k={args.k}  max-degree={n}"]
    for name, passed, detail in results:
        lines.append(f"{'PASS' if passed else 'FAIL'}  {name}" + (f": {detail}" if detail else ""))
    failed = next((name for name, passed, _ in results if not passed), None)
    lines.append("all invariants hold" if ok else f"first failing invariant: {failed}")
    result = {"passed": ok, "first_failure": failed,
              "checks": [{"name": nm, "passed": p, "detail": d} for nm, p, d in results]}
    _emit(_document({"name": "verify", "model": args.model, "k": args.k, "max_degree": n}, n, result),
          lines, args.format, out)
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="branecalc",
                                     description="Sullivan-model computations of sphere-brane operations.")
    parser.add_argument("--version", action="version", version=f"branecalc {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, max_degree=True):
        p.add_argument("model", help="model file, or - for stdin")
        p.add_argument("--format", choices=("text", "json"), default="text")
        if max_degree:
            p.add_argument("--max-degree", type=int, default=None,
                           help=f"truncation degree (default: ${ENV_MAX_DEGREE} or 2*max degree+4)")

    p = sub.add_parser("check", help="parse a model and report its properties")
    common(p, max_degree=False)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("cohomology", help="cohomology dimensions through --max-degree")
    common(p)
    p.set_defaults(func=cmd_cohomology)

    p = sub.add_parser("brane", help="cochain model of a brane operation")
    common(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--op", choices=("product", "coproduct", "composite"), required=True)
    p.add_argument("--section", choices=("default", "solver"), default="default")
    p.set_defaults(func=cmd_brane)

    p = sub.add_parser("verify", help="run the invariant battery")
    common(p)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[List[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except (InputError, ParseError, ModelError, PreconditionError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT
    except AlgebraError as exc:
        err.write(f"verification failed: {exc}\n")
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
