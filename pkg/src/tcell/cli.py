"""Command-line front end.

Exit codes: 0 when everything checks out, 1 when a violation or
counterexample is found, 2 for usage and input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import blacon, enumeration, finmon, semibim
from .cellcore import (
    CellMorphism,
    DiscreteStructure,
    MonoidCategory,
    encode,
    find_interchange_counterexample,
    interchange_candidates,
    chained_pairs,
    verify_cell_morphism,
    verify_structure_axioms,
)
from .errors import AlgebraError, TcellError, TooLarge, UnknownCase
from .moncell import MonCellStructure

OK, FOUND, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# --------------------------------------------------------------------------
# resolution helpers


def _monoid(name: str) -> finmon.FinMonoid:
    try:
        return finmon.builtin(name)
    except KeyError as exc:
        raise UsageError(str(exc.args[0])) from None


def parse_objects(text: str) -> MonoidCategory:
    """``a,b,c`` for a full context, ``a,b->c`` to restrict cell sources."""
    if "->" in text:
        left, right = text.split("->", 1)
        sources = [_monoid(n.strip()) for n in left.split(",") if n.strip()]
        objects = [_monoid(n.strip()) for n in right.split(",") if n.strip()]
    else:
        objects = [_monoid(n.strip()) for n in text.split(",") if n.strip()]
        sources = None
    if not objects:
        raise UsageError("no objects given")
    try:
        return MonoidCategory(objects, sources)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _load_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path} is not valid JSON: {exc}") from None


def _load_semibimodule(path: str) -> semibim.Semibimodule:
    doc = _load_json(path)
    try:
        return semibim.semibimodule_from_json(doc, _monoid)
    except AlgebraError as exc:
        raise UsageError(f"{path}: {exc}") from None


STRUCTURE_IDS = ("mon-basic", *blacon.CATALOG, "semibim:<file>")


def resolve_structure(sid: str, objects: str | None):
    """Return (structure, context) for a registry id."""
    if sid.startswith("semibim:"):
        S = semibim.embed(_load_semibimodule(sid.split(":", 1)[1]))
        return S, S.category
    if objects is None:
        raise UsageError(f"--objects is required for structure {sid!r}")
    ctx = parse_objects(objects)
    if sid == "mon-basic":
        return MonCellStructure(ctx), ctx
    if sid == "discrete":
        return DiscreteStructure(ctx), ctx
    try:
        return blacon.catalog_structure(sid, ctx), ctx
    except UnknownCase:
        raise UsageError(f"unknown structure {sid!r}; known: {', '.join(STRUCTURE_IDS)}") from None


def _family(case: str) -> blacon.CellFamily:
    try:
        return blacon.catalog(case)
    except UnknownCase:
        raise UsageError(f"unknown case {case!r}; known: {', '.join(blacon.CATALOG)}") from None


# --------------------------------------------------------------------------
# output


def _emit(args, doc: dict, lines: Sequence[str]):
    if args.json:
        print(json.dumps(doc))
    else:
        for line in lines:
            print(line)


def _report_lines(rep, header: str) -> list[str]:
    if rep.ok:
        return [f"{header}: ok"]
    lines = [f"{header}: {rep.total} violation(s) of {', '.join(sorted(rep.axioms()))}"]
    for v in rep.violations:
        lines.append(f"  {v.axiom}: witness={json.dumps(encode(v.witness))} "
                     f"lhs={json.dumps(encode(v.lhs))} rhs={json.dumps(encode(v.rhs))}")
    if rep.total > len(rep.violations):
        lines.append(f"  ... {rep.total - len(rep.violations)} more not shown")
    return lines


def _brief(cell: dict) -> str:
    return "[" + "; ".join(json.dumps(cell[k]) for k in ("dom", "t", "cod")) + "]"


def _report_doc(rep) -> dict:
    doc = rep.to_json()
    doc["total"] = rep.total
    doc["axioms"] = sorted(rep.axioms())
    return doc


# --------------------------------------------------------------------------
# commands


def cmd_monoid_validate(args) -> int:
    doc = _load_json(args.file)
    try:
        M = finmon.monoid_from_json(doc)
    except AlgebraError as exc:
        _emit(args, {"ok": False, "error": type(exc).__name__, "message": str(exc), "witness": list(exc.witness)},
              [f"invalid: {type(exc).__name__}: {exc}"])
        return FOUND
    _emit(args, {"ok": True, "name": M.name, "size": M.size, "is_group": M.is_group,
                 "is_commutative": M.is_commutative},
          [f"{M.name}: valid monoid of size {M.size}" + (" (group)" if M.is_group else "")])
    return OK


def cmd_monoid_gen(args) -> int:
    M = _monoid(args.name)
    print(json.dumps(finmon.monoid_to_json(M)))
    return OK


def cmd_cell_check(args) -> int:
    S, ctx = resolve_structure(args.structure, args.objects)
    rep = verify_structure_axioms(S, ctx, cap=args.cap)
    doc = _report_doc(rep)
    doc["structure"] = args.structure
    _emit(args, doc, _report_lines(rep, f"{args.structure} on {ctx.describe()}"))
    return OK if rep.ok else FOUND


def cmd_cell_interchange(args) -> int:
    S, ctx = resolve_structure(args.structure, args.objects)
    first = find_interchange_counterexample(S, ctx)
    if first is None:
        _emit(args, {"found": False, "structure": args.structure},
              [f"{args.structure} on {ctx.describe()}: every chained pair is natural"])
        return OK
    failing = []
    for x, y in chained_pairs(S, ctx):
        a, b = interchange_candidates(S, x, y, ctx)
        if a != b:
            failing.append({"x": encode(x), "y": encode(y), "lhs": encode(a), "rhs": encode(b)})
    shown = failing if args.cap is None else failing[:args.cap]
    doc = {"found": True, "structure": args.structure, **first.to_json(),
           "failing_pairs": len(failing), "all": shown}
    lines = [f"{args.structure} on {ctx.describe()}: {len(failing)} chained pair(s) fail naturality",
             f"  first: x={first.x!r} y={first.y!r}",
             f"         x cod(y) + dom(x) y = {first.lhs!r}",
             f"         cod(x) y + x dom(y) = {first.rhs!r}"]
    for item in shown[1:]:
        lines.append("  " + " ".join(f"{k}={_brief(item[k])}" for k in ("x", "y", "lhs", "rhs")))
    _emit(args, doc, lines)
    return FOUND


def cmd_cell_morphism(args) -> int:
    S, ctx = resolve_structure(args.source, args.objects)
    T, _ = resolve_structure(args.target, args.objects)
    m = CellMorphism(S, T, lambda x: x, f"{args.source}->{args.target}")
    rep = verify_cell_morphism(m, ctx, cap=args.cap)
    doc = _report_doc(rep)
    doc["morphism"] = m.name
    _emit(args, doc, _report_lines(rep, f"inclusion {m.name} on {ctx.describe()}"))
    return OK if rep.ok else FOUND


def cmd_bla_validate(args) -> int:
    doc = _load_json(args.file)
    try:
        B = _monoid(doc["monoid"])
        R = [tuple(r) for r in doc["R"]]
        m = {tuple(row[:3]): row[3] for row in doc["m"]}
        e = doc["e"]
    except (KeyError, TypeError, IndexError) as exc:
        raise UsageError(f"{args.file}: malformed bla document ({exc})") from None
    try:
        bla = blacon.validate_bla(B, R, m, e)
    except AlgebraError as exc:
        _emit(args, {"ok": False, "error": type(exc).__name__, "message": str(exc), "witness": list(exc.witness)},
              [f"invalid: {type(exc).__name__}: {exc}"])
        return FOUND
    _emit(args, {"ok": True, "monoid": B.name, "R_size": len(bla.R)},
          [f"valid bla structure on {B.name} with |R| = {len(bla.R)}"])
    return OK


def cmd_bla_conditions(args) -> int:
    fam = _family(args.case)
    ctx = parse_objects(args.objects)
    try:
        rep = blacon.check_six_conditions(fam.assignment, fam, ctx, cap=args.cap)
    except AlgebraError as exc:
        raise UsageError(f"case {args.case} does not apply to {ctx.describe()}: {exc}") from None
    doc = _report_doc(rep)
    doc["case"] = args.case
    doc["failed"] = sorted(blacon.failed_conditions(rep))
    _emit(args, doc, _report_lines(rep, f"{args.case} on {ctx.describe()}"))
    return OK if rep.ok else FOUND


def cmd_semibim_validate(args) -> int:
    doc = _load_json(args.file)
    try:
        sb = semibim.semibimodule_from_json(doc, _monoid)
    except AlgebraError as exc:
        law = getattr(exc, "law", type(exc).__name__)
        _emit(args, {"ok": False, "law": law, "witness": list(exc.witness)}, [f"invalid: {exc}"])
        return FOUND
    _emit(args, {"ok": True, "M": sb.M.name, "A": sb.A.name},
          [f"valid {sb.M.name}-semibimodule on {sb.A.name}"])
    return OK


def cmd_semibim_embed(args) -> int:
    sb = _load_semibimodule(args.file)
    S = semibim.embed(sb)
    cells = S.cells(sb.M, sb.M)
    doc = {"M": sb.M.name, "A": sb.A.name, "cells": len(cells)}
    lines = [f"one-object structure on {sb.M.name}: {len(cells)} cells"]
    code = OK
    if args.check:
        rep = verify_structure_axioms(S, cap=args.cap)
        doc["check"] = _report_doc(rep)
        lines += _report_lines(rep, "axioms")
        code = OK if rep.ok else FOUND
    else:
        doc["H"] = [encode(c) for c in cells]
    _emit(args, doc, lines)
    return code


def cmd_semibim_recover(args) -> int:
    sb = _load_semibimodule(args.file)
    S = semibim.embed(sb)
    try:
        gen = semibim.recover(semibim.canonical_splitting(S))
    except AlgebraError as exc:
        _emit(args, {"ok": False, "error": type(exc).__name__, "law": getattr(exc, "law", None),
                     "witness": encode(list(exc.witness))}, [f"recovery failed: {exc}"])
        return FOUND
    act = semibim.recovered_act(sb, gen)
    mismatches = sum(act[k] != sb.act(*k) for k in act)
    mu = [[u, a, v, r] for (u, a, v), r in sorted(act.items())]
    rho = [[gen.carrier[a1].t, g, gen.carrier[a2].t, gen.carrier[r].t] for (a1, g, a2), r in sorted(gen.rho.items())]
    doc = {"ok": mismatches == 0, "M": sb.M.name, "A": sb.A.name, "mu": mu, "rho": rho,
           "zero_resplits": gen.zero_resplits, "mu_mismatches": mismatches}
    lines = [f"recovered mu agrees with act on {len(act) - mismatches}/{len(act)} triples",
             f"0(1) = 0^(f) + 0_(f) for every f: {'yes' if gen.zero_resplits else 'no'}"]
    _emit(args, doc, lines)
    return OK if mismatches == 0 else FOUND


def cmd_enum_bla(args) -> int:
    B = _monoid(args.monoid)
    try:
        found = enumeration.enum_bla(B)
    except TooLarge as exc:
        raise UsageError(str(exc)) from None
    try:
        pinned = enumeration.pinned_counts().get("enum_bla", {}).get(B.name)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read pinned counts: {exc}") from None
    matches = pinned is None or pinned == len(found)
    doc = {"monoid": B.name, "count": len(found), "pinned": pinned, "matches": matches}
    note = "no pinned value" if pinned is None else ("matches pinned" if matches else f"pinned value is {pinned}")
    _emit(args, doc, [f"{B.name}: {len(found)} bla structures ({note})"])
    return OK if matches else FOUND


def cmd_enum_census(args) -> int:
    fam = _family(args.case)
    ctx = parse_objects(args.objects)
    try:
        doc = enumeration.census(fam.assignment, fam, ctx)
    except AlgebraError as exc:
        raise UsageError(f"case {args.case} does not apply to {ctx.describe()}: {exc}") from None
    lines = [f"{'A':>8} {'B':>8} {'cells':>7} {'natural':>8} {'fail pairs':>11}"]
    for r in doc["pairs"]:
        lines.append(f"{r['A']:>8} {r['B']:>8} {r['cells']:>7} {r['natural']:>8} {r['nat_fail_pairs']:>11}")
    _emit(args, doc, lines)
    return OK


# --------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON document")
    common.add_argument("--cap", type=int, default=None, help="maximum number of violations to report")

    p = argparse.ArgumentParser(prog="tcell", description="Build and verify 2-cell structures over finite monoids.")
    top = p.add_subparsers(dest="group", required=True)

    def sub(group, name, func, help_):
        q = group.add_parser(name, parents=[common], help=help_)
        q.set_defaults(func=func)
        return q

    mon = top.add_parser("monoid", help="monoid tables").add_subparsers(dest="cmd", required=True)
    sub(mon, "validate", cmd_monoid_validate, "validate a monoid JSON file").add_argument("file")
    sub(mon, "gen", cmd_monoid_gen, "print a builtin monoid").add_argument("name")

    cell = top.add_parser("cell", help="2-cell structures").add_subparsers(dest="cmd", required=True)
    q = sub(cell, "check", cmd_cell_check, "verify every structure law")
    q.add_argument("--structure", required=True)
    q.add_argument("--objects")
    q = sub(cell, "interchange", cmd_cell_interchange, "search for a pair failing naturality")
    q.add_argument("--structure", required=True)
    q.add_argument("--objects")
    q = sub(cell, "morphism", cmd_cell_morphism, "check that the inclusion between two structures is a morphism")
    q.add_argument("--from", dest="source", required=True)
    q.add_argument("--to", dest="target", required=True)
    q.add_argument("--objects")

    bla = top.add_parser("bla", help="bla structures").add_subparsers(dest="cmd", required=True)
    sub(bla, "validate", cmd_bla_validate, "validate a bla JSON file").add_argument("file")
    q = sub(bla, "conditions", cmd_bla_conditions, "check the six conditions for a catalog case")
    q.add_argument("--case", required=True)
    q.add_argument("--objects", required=True)

    sbm = top.add_parser("semibim", help="semibimodules").add_subparsers(dest="cmd", required=True)
    sub(sbm, "validate", cmd_semibim_validate, "validate a semibimodule JSON file").add_argument("file")
    q = sub(sbm, "embed", cmd_semibim_embed, "build the one-object 2-cell structure")
    q.add_argument("file")
    q.add_argument("--check", action="store_true", help="also verify the structure laws")
    sub(sbm, "recover", cmd_semibim_recover, "recover the action through the canonical splitting").add_argument("file")

    en = top.add_parser("enum", help="exhaustive searches").add_subparsers(dest="cmd", required=True)
    sub(en, "bla", cmd_enum_bla, "enumerate bla structures on a tiny monoid").add_argument("--monoid", required=True)
    q = sub(en, "census", cmd_enum_census, "per-pair cell and naturality counts")
    q.add_argument("--case", required=True)
    q.add_argument("--objects", required=True)
    return p


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"tcell: error: {exc}", file=sys.stderr)
        return USAGE
    except TcellError as exc:
        print(f"tcell: error: {exc}", file=sys.stderr)
        return USAGE


def main() -> None:
    sys.exit(run())
