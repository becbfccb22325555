"""Command dispatch over presentation documents.

Subcommands map one-to-one onto the library entry points: ``validate``
runs the law checker, ``check-bf`` and ``saturate`` work on a named
1-cell class, ``localize`` materializes the bicategory of fractions,
``check`` decides a condition family for a pseudofunctor, and
``cross-validate`` replays the relationships between the families.
``demo appendix-toy`` walks the shipped two-object example end to end.

Exit codes: 0 when every requested check passes, 1 when a check fails,
2 for usage or document errors, 3 when a precondition is violated.
Reports are plain text by default; ``--format machine`` emits one JSON
object mirroring the report dataclasses.
"""

from __future__ import annotations

import argparse
import json
import sys
from importlib import resources
from pathlib import Path
from typing import Optional

from .conditions import (
    ConditionReport,
    check_A,
    check_B,
    check_EF,
    check_X,
    cross_validate_theorems,
)
from .core import FinBicat, PreconditionError, validate_bicat
from .fractions import LocalizationError, materialize_fractions, universal_pseudofunctor
from .presentation import (
    Presentation,
    PresentationError,
    export_presentation,
    load_document,
    parse_presentation,
)
from .psfun import PsFun, identity_psfun, validate_psfun
from .wclass import WClass, check_bf, saturate


class UsageError(ValueError):
    """Bad invocation that is not a failed check."""


def fixture_text(name: str) -> str:
    """Text of a fixture shipped inside the package."""
    ref = resources.files("bicfrac").joinpath("fixtures").joinpath(f"{name}.json")
    if not ref.is_file():
        raise UsageError(f"no shipped fixture named {name!r}")
    return ref.read_text(encoding="utf-8")


def load_fixture(name: str) -> Presentation:
    return parse_presentation(fixture_text(name))


# -- argument plumbing --------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--strict-fast-path",
        action="store_true",
        default=argparse.SUPPRESS,
        help="honor a declared strict flag instead of taking the general path",
    )
    common.add_argument(
        "--jobs",
        type=int,
        default=argparse.SUPPRESS,
        help="worker count; results are identical at any value",
    )
    common.add_argument(
        "--format",
        choices=("text", "machine"),
        default=argparse.SUPPRESS,
        help="report style; machine emits one JSON object",
    )

    p = argparse.ArgumentParser(
        prog="bicfrac",
        description="Finite bicategories, fraction localizations and transfer conditions.",
    )
    p.set_defaults(strict_fast_path=False, jobs=1, format="text")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", parents=[common], help="run the law checker on a document")
    s.add_argument("file")

    s = sub.add_parser("check-bf", parents=[common], help="decide the closure axioms for a class")
    s.add_argument("file")
    s.add_argument("--class", dest="wname", metavar="NAME")

    s = sub.add_parser("saturate", parents=[common], help="compute the right saturation of a class")
    s.add_argument("file")
    s.add_argument("--class", dest="wname", metavar="NAME")

    s = sub.add_parser("localize", parents=[common], help="materialize the bicategory of fractions")
    s.add_argument("file")
    s.add_argument("--class", dest="wname", metavar="NAME")
    s.add_argument("--out", metavar="FILE", help="write the result as a document")

    s = sub.add_parser("check", parents=[common], help="decide a condition family for a pseudofunctor")
    s.add_argument("file")
    s.add_argument("--conditions", required=True, choices=("A", "B", "EF", "X", "all"))
    s.add_argument("--psfun", required=True, metavar="NAME",
                   help="declared name, or 'identity' / 'UW'")
    s.add_argument("--class-src", dest="wsrc", metavar="NAME")
    s.add_argument("--class-tgt", dest="wtgt", metavar="NAME")

    s = sub.add_parser("cross-validate", parents=[common],
                       help="replay the relationships between condition families")
    s.add_argument("files", nargs="+", metavar="file")
    s.add_argument("--psfun", default="identity", metavar="NAME")
    s.add_argument("--class-src", dest="wsrc", metavar="NAME")
    s.add_argument("--class-tgt", dest="wtgt", metavar="NAME")

    s = sub.add_parser("demo", parents=[common], help="walk a shipped scenario end to end")
    s.add_argument("scenario", choices=("appendix-toy",))

    return p


def _load(path: str) -> Presentation:
    p = Path(path)
    if not p.is_file() and Path(path + ".json").is_file():
        p = Path(path + ".json")
    return load_document(p)


def _strip(B: FinBicat, honor: bool, memo: dict) -> FinBicat:
    if honor:
        return B
    key = id(B)
    if key not in memo:
        memo[key] = B.without_strict_flag()
    return memo[key]


def _strip_psfun(F: PsFun, honor: bool, memo: dict) -> PsFun:
    if honor:
        return F
    return PsFun(
        source=_strip(F.source, honor, memo),
        target=_strip(F.target, honor, memo),
        f0=F.f0, f1=F.f1, f2=F.f2, psi=F.psi, sigma=F.sigma, name=F.name,
    )


def _pick_class(classes: dict[str, WClass], name: Optional[str], where: str) -> WClass:
    if name is not None:
        if name not in classes:
            raise UsageError(
                f"{where} declares no class {name!r} "
                f"(has: {', '.join(sorted(classes)) or 'none'})"
            )
        return classes[name]
    if "W" in classes:
        return classes["W"]
    if len(classes) == 1:
        return next(iter(classes.values()))
    raise UsageError(f"{where} declares no class 'W'; pass one explicitly")


def _json_report(r: ConditionReport) -> dict:
    return {
        "tag": r.tag,
        "holds": r.holds,
        "witness": list(map(list, r.witness)) if r.witness is not None else None,
        "counterexample": list(r.counterexample) if r.counterexample is not None else None,
        "examined": r.examined,
        "detail": r.detail,
    }


def _show_report(r: ConditionReport, out: list[str]) -> None:
    mark = "pass" if r.holds else "FAIL"
    out.append(f"  [{mark}] {r.tag} (candidates examined: {r.examined})")
    if r.holds and r.witness is not None:
        u, w = r.witness
        out.append(f"         hardest input {tuple(u)} solved by {tuple(w)}")
    if r.holds and r.witness is None:
        out.append("         vacuous: no qualifying input")
    if not r.holds:
        out.append(f"         counterexample {tuple(r.counterexample)}"
                   + (f": {r.detail}" if r.detail else ""))


# -- subcommand handlers -------------------------------------------------------


def _cmd_validate(args) -> tuple[int, dict, list[str]]:
    pres = _load(args.file)
    memo: dict = {}
    B = _strip(pres.bicat, args.strict_fast_path, memo)
    rep = validate_bicat(B)
    text = [f"validate {args.file}"]
    payload: dict = {
        "command": "validate",
        "file": args.file,
        "passed": rep.passed,
        "violations": [
            {"law": v.law, "cells": list(v.cells), "detail": v.detail}
            for v in rep.violations
        ],
        "strict_flag": rep.strict_flag,
        "components_identity": rep.components_identity,
        "psfuns": {},
    }
    if rep.passed:
        text.append(f"  bicategory: all laws hold "
                    f"({len(B.objects)} objects, {len(B.one_cells)} one-cells, "
                    f"{len(B.two_cells)} two-cells)")
    else:
        text.append(f"  bicategory: {len(rep.violations)} violation(s)")
        for v in rep.violations[:20]:
            text.append(f"    {v.law} at {v.cells}: {v.detail}")
    ok = rep.passed
    for name, F in pres.psfuns.items():
        frep = validate_psfun(_strip_psfun(F, args.strict_fast_path, memo))
        payload["psfuns"][name] = {
            "passed": frep.passed,
            "violations": [
                {"law": v.law, "cells": list(v.cells), "detail": v.detail}
                for v in frep.violations
            ],
        }
        if frep.passed:
            text.append(f"  pseudofunctor {name!r}: all laws hold")
        else:
            ok = False
            text.append(f"  pseudofunctor {name!r}: {len(frep.violations)} violation(s)")
            for v in frep.violations[:20]:
                text.append(f"    {v.law} at {v.cells}: {v.detail}")
    text.append("PASS" if ok else "FAIL")
    payload["passed"] = ok
    return (0 if ok else 1), payload, text


def _cmd_check_bf(args) -> tuple[int, dict, list[str]]:
    pres = _load(args.file)
    B = _strip(pres.bicat, args.strict_fast_path, {})
    W = _pick_class(pres.classes, args.wname, args.file)
    rep = check_bf(B, W)
    text = [f"check-bf {args.file} --class {W.name}"]
    verdicts = []
    for v in rep.verdicts.values():
        verdicts.append({
            "axiom": v.axiom,
            "holds": v.holds,
            "witness": list(v.witness) if v.witness is not None else None,
            "counterexample": list(v.counterexample) if v.counterexample is not None else None,
            "detail": v.detail,
            "checked": v.checked,
        })
        mark = "pass" if v.holds else "FAIL"
        line = f"  [{mark}] {v.axiom}"
        if not v.holds and v.counterexample is not None:
            line += f"  counterexample {tuple(v.counterexample)}"
        if not v.holds and v.detail:
            line += f": {v.detail}"
        text.append(line)
    text.append("PASS" if rep.passed else "FAIL")
    payload = {
        "command": "check-bf",
        "file": args.file,
        "class": W.name,
        "passed": rep.passed,
        "verdicts": verdicts,
    }
    return (0 if rep.passed else 1), payload, text


def _cmd_saturate(args) -> tuple[int, dict, list[str]]:
    pres = _load(args.file)
    B = _strip(pres.bicat, args.strict_fast_path, {})
    W = _pick_class(pres.classes, args.wname, args.file)
    res = saturate(B, W)
    members = sorted(res.members.members, key=B.pos1)
    grew = sorted(res.members.members - W.members, key=B.pos1)
    text = [f"saturate {args.file} --class {W.name}"]
    text.append(f"  members: {', '.join(members) if members else '(empty)'}")
    for f in members:
        g, h = res.witnesses[f]
        text.append(f"    {f}: composite with {g} lies in the class, {g} with {h}")
    if grew:
        text.append(f"  added beyond the class: {', '.join(grew)}")
    else:
        text.append("  added beyond the class: none")
    payload = {
        "command": "saturate",
        "file": args.file,
        "class": W.name,
        "members": members,
        "added": grew,
        "witnesses": {f: list(res.witnesses[f]) for f in members},
    }
    return 0, payload, text


def _cmd_localize(args) -> tuple[int, dict, list[str]]:
    pres = _load(args.file)
    B = _strip(pres.bicat, args.strict_fast_path, {})
    W = _pick_class(pres.classes, args.wname, args.file)
    loc = materialize_fractions(B, W)
    L = loc.bicat
    text = [f"localize {args.file} --class {W.name}"]
    text.append(
        f"  result: {len(L.objects)} objects, {len(L.one_cells)} one-cells "
        f"(spans), {len(L.two_cells)} two-cells (classes); all laws hold"
    )
    payload = {
        "command": "localize",
        "file": args.file,
        "class": W.name,
        "objects": len(L.objects),
        "one_cells": len(L.one_cells),
        "two_cells": len(L.two_cells),
        "validated": True,
        "out": args.out,
    }
    if args.out:
        out_pres = Presentation(L, {}, {}, L.name)
        Path(args.out).write_text(export_presentation(out_pres), encoding="utf-8")
        text.append(f"  written to {args.out}")
    text.append("PASS")
    return 0, payload, text


def _families(which: str) -> list[str]:
    return ["A", "B", "EF", "X"] if which == "all" else [which]


def _resolve_check(args, pres: Presentation):
    """The pseudofunctor and classes a ``check`` invocation refers to."""
    memo: dict = {}
    honor = args.strict_fast_path
    B = _strip(pres.bicat, honor, memo)
    name = args.psfun
    if args.wsrc is not None:
        w_src = _pick_class(pres.classes, args.wsrc, args.file)
    else:
        try:
            w_src = _pick_class(pres.classes, None, args.file)
        except UsageError:
            w_src = None
    if name == "identity":
        F = identity_psfun(B)
        tgt_classes = pres.classes
    elif name == "UW":
        if w_src is None:
            raise UsageError("--psfun UW needs a declared class (--class-src)")
        loc = materialize_fractions(B, w_src)
        F = universal_pseudofunctor(loc)
        tgt_classes = None  # transported below
    elif name in pres.psfuns:
        F = _strip_psfun(pres.psfuns[name], honor, memo)
        sref, tref = pres.psfun_refs[name]
        tgt_classes = pres.classes if tref == "self" else pres.ref_docs[tref].classes
    else:
        raise UsageError(
            f"{args.file} declares no pseudofunctor {args.psfun!r} "
            f"(has: {', '.join(sorted(pres.psfuns)) or 'none'}; "
            "'identity' and 'UW' are always available)"
        )

    def target_class() -> WClass:
        if name == "UW":
            base = (
                _pick_class(pres.classes, args.wtgt, args.file)
                if args.wtgt is not None
                else w_src
            )
            return WClass(
                frozenset(F.f1[w] for w in base.members), f"U({base.name})"
            )
        if tgt_classes is None or not tgt_classes:
            raise UsageError("the target document declares no classes (--class-tgt)")
        return _pick_class(tgt_classes, args.wtgt, "target document")

    return F, w_src, target_class


def _cmd_check(args) -> tuple[int, dict, list[str]]:
    pres = _load(args.file)
    F, w_src, target_class = _resolve_check(args, pres)
    text = [f"check {args.file} --conditions {args.conditions} --psfun {args.psfun}"]
    reports: list[ConditionReport] = []
    for fam in _families(args.conditions):
        if fam == "A":
            if w_src is None:
                raise UsageError("family A needs a source class (--class-src)")
            w_tgt = target_class()
            text.append(f"  family A at ({w_src.name}, {w_tgt.name}):")
            for i in range(1, 6):
                reports.append(check_A(F, w_src, w_tgt, i))
                _show_report(reports[-1], text)
        elif fam == "B":
            if w_src is None:
                raise UsageError("family B needs a source class (--class-src)")
            text.append(f"  family B at {w_src.name}:")
            for i in range(1, 6):
                reports.append(check_B(F, w_src, i))
                _show_report(reports[-1], text)
        elif fam == "EF":
            if w_src is None:
                raise UsageError("family EF needs a source class (--class-src)")
            text.append(f"  family EF at {w_src.name}:")
            for i in range(1, 4):
                reports.append(check_EF(F, w_src, i))
                _show_report(reports[-1], text)
        else:
            text.append("  family X:")
            for tag in ("X1", "X2a", "X2b", "X2c"):
                reports.append(check_X(F, tag))
                _show_report(reports[-1], text)
    passed = all(r.holds for r in reports)
    text.append("PASS" if passed else "FAIL")
    payload = {
        "command": "check",
        "file": args.file,
        "psfun": args.psfun,
        "conditions": args.conditions,
        "reports": [_json_report(r) for r in reports],
        "passed": passed,
    }
    return (0 if passed else 1), payload, text


def _cmd_cross_validate(args) -> tuple[int, dict, list[str]]:
    text: list[str] = []
    entries = []
    all_passed = True
    for fname in args.files:
        pres = _load(fname)
        ns = argparse.Namespace(
            file=fname, psfun=args.psfun, wsrc=args.wsrc, wtgt=args.wtgt,
            strict_fast_path=args.strict_fast_path,
        )
        F, w_src, target_class = _resolve_check(ns, pres)
        if w_src is None:
            raise UsageError("cross-validate needs a source class (--class-src)")
        rep = cross_validate_theorems(F, w_src, target_class())
        text.append(f"cross-validate {fname} --psfun {args.psfun}")
        for s in rep.subchecks:
            mark = "ran " if s.ran else "skip"
            text.append(f"  [{mark}] {s.name}: {s.reason}")
        text.append("  findings: " + ("none" if rep.passed else "; ".join(rep.findings)))
        entries.append({
            "file": fname,
            "subchecks": [
                {"name": s.name, "ran": s.ran, "agrees": s.agrees, "reason": s.reason}
                for s in rep.subchecks
            ],
            "findings": list(rep.findings),
            "passed": rep.passed,
        })
        all_passed = all_passed and rep.passed
    text.append("PASS" if all_passed else "FAIL")
    payload = {"command": "cross-validate", "files": entries, "passed": all_passed}
    return (0 if all_passed else 1), payload, text


def _demo_verdicts(pres: Presentation, honor: bool) -> dict[str, bool]:
    """BF, strict-family and single-class verdicts for one toy variant."""
    B = _strip(pres.bicat, honor, {})
    W = pres.classes["W"]
    out = {"bf": check_bf(B, W).passed}
    loc = materialize_fractions(B, W)
    UW = universal_pseudofunctor(loc)
    out["collapse"] = UW.f2["loop"] == UW.f2["iB"]
    for i in range(1, 4):
        out[f"EF{i}"] = check_EF(UW, W, i).holds
    for i in range(1, 6):
        out[f"B{i}"] = check_B(UW, W, i).holds
    return out


def _cmd_demo(args) -> tuple[int, dict, list[str]]:
    pres = load_fixture("appx-toy")
    other = load_fixture("appx-toy-loopy")
    honor = args.strict_fast_path
    B = _strip(pres.bicat, honor, {})
    W = pres.classes["W"]

    facts: list[tuple[str, bool, str]] = []
    bf = check_bf(B, W)
    facts.append(("closure axioms hold for W", bf.passed, ""))
    loc = materialize_fractions(B, W)
    UW = universal_pseudofunctor(loc)
    u_loop, u_i = UW.f2["loop"], UW.f2["iB"]
    facts.append((
        "U2(loop) = U2(iB) in the fraction bicategory",
        u_loop == u_i,
        f"both map to {u_loop}",
    ))
    ef3 = check_EF(UW, W, 3)
    cex_ok = (not ef3.holds) and set(ef3.counterexample[3:]) == {"iB", "loop"}
    facts.append((
        "EF3 fails: the 2-cell preimage is not unique",
        cex_ok,
        f"counterexample {tuple(ef3.counterexample)}" if ef3.counterexample else "",
    ))
    b_reports = [check_B(UW, W, i) for i in range(1, 6)]
    facts.append((
        "B1..B5 all hold for the universal map",
        all(r.holds for r in b_reports),
        "",
    ))
    same = _demo_verdicts(pres, honor) == _demo_verdicts(other, honor)
    facts.append((
        "verdicts identical on both loop-monoid variants",
        same,
        "loop squares to the identity in one, to itself in the other",
    ))

    text = ["demo appendix-toy"]
    for name, ok, detail in facts:
        mark = "pass" if ok else "FAIL"
        text.append(f"  [{mark}] {name}" + (f" ({detail})" if detail else ""))
    passed = all(ok for _, ok, _ in facts)
    text.append("PASS" if passed else "FAIL")
    payload = {
        "command": "demo",
        "scenario": "appendix-toy",
        "facts": [
            {"name": n, "passed": ok, "detail": d} for n, ok, d in facts
        ],
        "passed": passed,
    }
    return (0 if passed else 1), payload, text


_HANDLERS = {
    "validate": _cmd_validate,
    "check-bf": _cmd_check_bf,
    "saturate": _cmd_saturate,
    "localize": _cmd_localize,
    "check": _cmd_check,
    "cross-validate": _cmd_cross_validate,
    "demo": _cmd_demo,
}


def run_command(argv: list[str]) -> int:
    """Dispatch one invocation; returns the exit code, printing reports."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    if args.jobs < 1:
        print("error: --jobs must be at least 1", file=sys.stderr)
        return 2
    try:
        code, payload, text = _HANDLERS[args.command](args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except PresentationError as e:
        print(f"document error: {e}", file=sys.stderr)
        return 2
    except (PreconditionError, LocalizationError) as e:
        print(f"precondition violation: {e}", file=sys.stderr)
        return 3
    if args.format == "machine":
        print(json.dumps(payload, indent=2))
    else:
        print("\n".join(text))
    return code


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))
