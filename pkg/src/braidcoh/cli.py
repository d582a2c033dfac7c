"""Command line: ``braidcoh check | eval | braid | verify | list``.

Exit codes: 0 when every check meets its expected verdict, 1 on a verdict
mismatch (including a vacuous control), 2 on parse, type or lookup errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from .braid import StrandMismatch, UnsupportedNode, braid_equal, strict_image
from .conditions import (
    DEFAULT_ASSIGNMENT, REGISTRY, ArityError, ConditionName, SuiteReport, lookup, run_suite,
)
from .diagram import DiagramError, Orientation, check_commutes, is_vacuous, max_dimension
from .expr import MorphTypeError, show_morphism, typecheck, show_object
from .model import GradedModel, UnassignedAtom
from .syntax import ParseError, parse_assignment, parse_atom_binding, parse_braid, parse_diagram, parse_morphism

EXIT_OK, EXIT_MISMATCH, EXIT_ERROR = 0, 1, 2
_EXPECT = {"pass": "commutes", "fail": "fails"}


class UsageError(Exception):
    pass


def _assignment(args, base: dict | None = None) -> dict[str, tuple[int, ...]]:
    out = dict(base or {})
    if getattr(args, "assignment", None):
        try:
            text = Path(args.assignment).read_text(encoding="utf-8")
        except OSError as err:
            raise UsageError(f"cannot read {args.assignment}: {err.strerror}") from None
        out.update(parse_assignment(text))
    for binding in getattr(args, "atoms", None) or []:
        k, v = parse_atom_binding(binding)
        out[k] = v
    return out


def _model(args) -> GradedModel:
    return GradedModel(specialize_q=1 if args.q1 else None)


def _print_suite(report: SuiteReport, out) -> None:
    width = max((len(r.name) for r in report.results), default=4)
    for r in report.results:
        flags = []
        if r.vacuous:
            flags.append("vacuous")
        if r.expected == "fails":
            flags.append("expected-fail")
        line = (
            f"{r.name:<{width}}  {r.figure:<7} {r.verdict:<8} {r.status:<8} "
            f"dim {r.max_dim:>3}  {r.seconds * 1000:7.1f} ms"
        )
        if flags:
            line += "  [" + ", ".join(flags) + "]"
        print(line, file=out)
        if r.witness is not None:
            w = r.witness
            print(f"    witness ({w.row},{w.col}): {w.left} vs {w.right}", file=out)
        if r.status == "vacuous":
            print(f"    vacuous control: {r.name} cannot fail under this model and assignment", file=out)
    passed = sum(r.ok and r.expected == "commutes" for r in report.results)
    xfail = sum(r.ok and r.expected == "fails" for r in report.results)
    bad = sum(not r.ok for r in report.results)
    flagged = sum(r.vacuous for r in report.results)
    print(
        f"{passed} pass + {xfail} expected-fail, {bad} mismatched; "
        f"{flagged} vacuous; {report.seconds:.3f} s",
        file=out,
    )


def cmd_check(args, out) -> int:
    names: list[ConditionName]
    if args.all or not args.names:
        names = list(REGISTRY)
    else:
        try:
            names = [lookup(n) for n in args.names]
        except KeyError as err:
            raise UsageError(err.args[0]) from None
    expect = {}
    if args.expect:
        expect = {n: _EXPECT[args.expect] for n in names}
    report = run_suite(_model(args), _assignment(args, DEFAULT_ASSIGNMENT), names, expect)
    if args.json:
        json.dump(report.to_json(), out, indent=2)
        print(file=out)
    else:
        _print_suite(report, out)
    return EXIT_OK if report.ok else EXIT_MISMATCH


def cmd_eval(args, out) -> int:
    m = parse_morphism(args.morphism)
    d, c = typecheck(m)
    mat = _model(args).interpret_morphism(m, _assignment(args))
    if args.json:
        json.dump(
            {
                "morphism": show_morphism(m),
                "dom": show_object(d),
                "cod": show_object(c),
                "rows": mat.rows,
                "cols": mat.cols,
                "entries": [[str(x) for x in r] for r in mat.entries],
            },
            out,
            indent=2,
        )
        print(file=out)
    else:
        print(f"{show_morphism(m)} : {show_object(d)} -> {show_object(c)}", file=out)
        print(mat, file=out)
    return EXIT_OK


def cmd_braid(args, out) -> int:
    if args.morphisms:
        w1, w2 = (strict_image(parse_morphism(t)) for t in (args.word1, args.word2))
    else:
        n = args.strands
        w1, w2 = parse_braid(args.word1, n), parse_braid(args.word2, n)
        if n is None and w1.strands != w2.strands:
            n = max(w1.strands, w2.strands)
            w1, w2 = parse_braid(args.word1, n), parse_braid(args.word2, n)
    verdict = "equal" if braid_equal(w1, w2) else "unequal"
    if args.json:
        json.dump({"left": str(w1), "right": str(w2), "strands": w1.strands, "verdict": verdict}, out)
        print(file=out)
    else:
        print(f"{w1}  vs  {w2}  ({w1.strands} strands): {verdict}", file=out)
    if args.expect and args.expect != verdict:
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_verify(args, out) -> int:
    try:
        text = Path(args.file).read_text(encoding="utf-8")
    except OSError as err:
        raise UsageError(f"cannot read {args.file}: {err.strerror}") from None
    d = parse_diagram(text)
    model = _model(args)
    asg = _assignment(args, DEFAULT_ASSIGNMENT)
    report = check_commutes(d, model, asg, base=args.base, orientation=Orientation(args.orientation))
    expected = _EXPECT[args.expect]
    entry = {
        "name": d.name,
        "figure": Path(args.file).name,
        "verdict": report.verdict,
        "expected": expected,
        "base_vertex": report.base_vertex,
        "vacuous": is_vacuous(d, model, asg),
        "max_dim": max_dimension(d, model, asg),
    }
    if report.witness is not None:
        entry["witness"] = report.witness.to_dict()
    if args.json:
        json.dump([entry], out, indent=2)
        print(file=out)
    else:
        print(f"{d.name}: {report.verdict} (expected {expected})", file=out)
        if report.witness is not None:
            w = report.witness
            print(f"    witness ({w.row},{w.col}): {w.left} vs {w.right}", file=out)
    return EXIT_OK if report.verdict == expected else EXIT_MISMATCH


def cmd_list(args, out) -> int:
    for name, info in REGISTRY.items():
        lap = f"Laplaza {info.laplaza}" if info.laplaza else ""
        print(f"{name.value:<16} {info.figure:<8} arity {info.arity}  {info.group:<15} {lap}", file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="braidcoh", description="Coherence checks for braided distributive structures.")
    sub = p.add_subparsers(dest="command", required=True)

    def model_flags(sp, defaults_note: str = ""):
        sp.add_argument("--atoms", nargs="+", metavar="NAME=DEGS", help="inline degree lists, e.g. A=0,1" + defaults_note)
        sp.add_argument("--assignment", metavar="FILE", help="JSON object or NAME=degs lines")
        sp.add_argument("--q1", action="store_true", help="specialize q := 1 (symmetric model)")
        sp.add_argument("--json", action="store_true")

    c = sub.add_parser("check", help="run registered conditions")
    c.add_argument("names", nargs="*", help="condition names or short tags such as F17")
    c.add_argument("--all", action="store_true")
    c.add_argument("--expect", choices=sorted(_EXPECT), help="override the expected verdict")
    model_flags(c, " (default: A..D each 0,1)")
    c.set_defaults(func=cmd_check)

    e = sub.add_parser("eval", help="evaluate a morphism to a matrix")
    e.add_argument("morphism")
    model_flags(e)
    e.set_defaults(func=cmd_eval)

    b = sub.add_parser("braid", help="compare two braid words")
    b.add_argument("word1")
    b.add_argument("word2")
    b.add_argument("--morphisms", action="store_true", help="inputs are product-only morphisms")
    b.add_argument("--strands", type=int)
    b.add_argument("--expect", choices=["equal", "unequal"])
    b.add_argument("--json", action="store_true")
    b.set_defaults(func=cmd_braid)

    v = sub.add_parser("verify", help="check a diagram file")
    v.add_argument("file")
    v.add_argument("--expect", choices=sorted(_EXPECT), default="pass")
    v.add_argument("--base", type=int, default=0)
    v.add_argument("--orientation", choices=["cw", "ccw"], default="cw")
    model_flags(v)
    v.set_defaults(func=cmd_verify)

    ls = sub.add_parser("list", help="list registered conditions")
    ls.set_defaults(func=cmd_list)
    return p


_USER_ERRORS = (
    ParseError, MorphTypeError, UnassignedAtom, ArityError, UnsupportedNode, StrandMismatch,
    DiagramError, UsageError,
)


def main(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_ERROR
    try:
        return args.func(args, out)
    except _USER_ERRORS as exc:
        print(f"error: {exc}", file=err)
        return EXIT_ERROR
    except (IndexError, ValueError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
