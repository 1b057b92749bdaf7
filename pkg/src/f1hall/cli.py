"""Command-line interface: ``f1hall <command> --quiver FILE ...``."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence

from f1hall.formats import (
    FormatError,
    element_to_json,
    element_to_text,
    form_to_literal,
    load_quiver,
    read_form,
    read_rep,
    rep_to_literal,
)
from f1hall.hall import HallAlgebra
from f1hall.hallmod import HallModule
from f1hall.lincomb import LinComb
from f1hall.quiverrep import DimVector, Quiver, validate
from f1hall.verify import CHECKS, Cap, default_cap, reports_to_json, run_plan


def _dims(text: str) -> DimVector:
    try:
        d = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None
    if any(x < 0 for x in d):
        raise argparse.ArgumentTypeError("dimensions must be non-negative")
    return d


def _check_length(q: Quiver, d: DimVector, flag: str) -> DimVector:
    if len(d) != len(q.vertices):
        raise FormatError(f"{flag} has {len(d)} entries but the quiver has {len(q.vertices)} vertices")
    return d


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--quiver", required=True, help="quiver JSON file or builtin name (point, a2, loop)")
    common.add_argument("--format", choices=("json", "text"), default="text")

    parser = argparse.ArgumentParser(prog="f1hall", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("reps", parents=[common], help="isomorphism classes of a dimension vector")
    p.add_argument("--dim", type=_dims, required=True)
    p = sub.add_parser("forms", parents=[common], help="isometry classes of forms of a dimension vector")
    p.add_argument("--dim", type=_dims, required=True)
    p = sub.add_parser("mul", parents=[common], help="Hall product [X]·[Y]")
    p.add_argument("x", help="representation literal or class encoding")
    p.add_argument("y")
    p = sub.add_parser("comul", parents=[common], help="split coproduct Δ[X]")
    p.add_argument("x")
    p = sub.add_parser("act", parents=[common], help="Hall action [U]⋆[N]")
    p.add_argument("u", help="representation literal or class encoding")
    p.add_argument("n", help="form literal or class encoding")
    p = sub.add_parser("coact", parents=[common], help="coaction ρ[N]")
    p.add_argument("n")
    p = sub.add_parser("primitives", parents=[common], help="indecomposable classes and the ± split")
    p.add_argument("--cap", type=_dims, required=True)
    p = sub.add_parser("verify", parents=[common], help="run a named check or all of them")
    p.add_argument("check", choices=[*CHECKS, "all"])
    p.add_argument("--cap", type=_dims, help="component-wise bound (default: total 5 for algebra checks, 4 otherwise)")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--x-total", type=int, default=3, help="total dimension bound on X in reduction_lemmas")
    p.add_argument("--timings", action="store_true", help="include wall times (makes output nondeterministic)")
    return parser


def _emit(args: argparse.Namespace, data: Any, text: str) -> None:
    if args.format == "json":
        print(json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False))
    else:
        print(text)


def _emit_element(args: argparse.Namespace, x: LinComb) -> None:
    _emit(args, element_to_json(x), element_to_text(x))


def _require_involution(q: Quiver) -> None:
    problems = validate(q)
    if problems:
        raise FormatError("quiver involution is invalid: " + "; ".join(problems))


def run(args: argparse.Namespace) -> int:
    q = load_quiver(args.quiver)
    if args.command == "reps":
        d = _check_length(q, args.dim, "--dim")
        classes = HallAlgebra(q).classes(d)
        _emit(
            args,
            [{"class": r.encode(), "literal": rep_to_literal(r)} for r in classes],
            "\n".join(r.encode() for r in classes),
        )
        return 0

    _require_involution(q)
    alg = HallAlgebra(q)
    mod = HallModule(alg)
    if args.command == "forms":
        d = _check_length(q, args.dim, "--dim")
        if not q.is_symmetric_dims(d):
            print(f"warning: dimension vector {list(d)} is not σ-symmetric; no forms exist", file=sys.stderr)
        forms = mod.forms(d)
        _emit(
            args,
            [{"class": m.encode(), "literal": form_to_literal(m)} for m in forms],
            "\n".join(m.encode() for m in forms),
        )
        return 0
    if args.command == "mul":
        _emit_element(args, alg.product(LinComb.basis(read_rep(q, args.x)), LinComb.basis(read_rep(q, args.y))))
        return 0
    if args.command == "comul":
        _emit_element(args, alg.coproduct(LinComb.basis(read_rep(q, args.x))))
        return 0
    if args.command == "act":
        _emit_element(args, mod.act(LinComb.basis(read_rep(q, args.u)), LinComb.basis(read_form(q, args.n))))
        return 0
    if args.command == "coact":
        _emit_element(args, mod.coact(LinComb.basis(read_form(q, args.n))))
        return 0
    if args.command == "primitives":
        bound = _check_length(q, args.cap, "--cap")
        prims = alg.primitive_basis(bound)
        plus, minus = alg.split_pm(bound)
        data = {
            "primitives": [r.encode() for r in prims],
            "plus": [element_to_json(x) for x in plus],
            "minus": [element_to_json(x) for x in minus],
        }
        lines = ["primitives:", *(f"  [{r.encode()}]" for r in prims)]
        lines += ["plus:", *("  " + element_to_text(x).replace("\n", " + ") for x in plus)]
        lines += ["minus:", *("  " + element_to_text(x).replace("\n", " + ") for x in minus)]
        _emit(args, data, "\n".join(lines))
        return 0

    # verify
    names = list(CHECKS) if args.check == "all" else [args.check]
    if args.cap is not None:
        cap = Cap(_check_length(q, args.cap, "--cap"))
        plan = [(n, cap) for n in names]
    else:
        plan = [(n, default_cap(q, n)) for n in names]
    reports = run_plan(q, plan, jobs=args.jobs, options={"reduction_lemmas": {"x_total": args.x_total}})
    if args.format == "json":
        print(reports_to_json(reports, timings=args.timings))
    else:
        for r in reports:
            status = "PASS" if r.passed else "FAIL"
            line = f"{status} {r.check} quiver={r.quiver} instances={r.instances} failures={r.failure_count}"
            if args.timings:
                line += f" time={r.wall_time:.3f}s"
            print(line)
            for f in r.failures[:1]:
                print(f"  first failure ({f['identity']}): inputs={f['inputs']}")
            if "witness" in r.notes:
                w = r.notes["witness"]
                print(f"  witness: u=[{w['u']}] xi=[{w['xi']}]")
    return 0 if all(r.passed for r in reports) else 1


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return run(args)
    except (FormatError, KeyError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
