"""Batch command line interface.

Deterministic given input and flags: every listing is canonically ordered and
repeated runs are byte identical.  Exit codes: 0 success, 1 unreadable input,
2 precondition violation, 3 budget or cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import path_algebra as pa
from . import reps as reps_mod
from .fusion import FusionElem, MismatchedLabelSets
from .quiver import (
    CoxeterQuiver,
    QuiverError,
    QuiverParseError,
    classify_graph,
    parse_quiver,
)
from .rootsys import (
    CapExceeded,
    InvalidOrdering,
    MismatchedQuiver,
    OrbitBudgetExceeded,
    extended_positive_roots,
    positive_roots,
)
from .unfold import unfold

PARSE_ERROR = 1
PRECONDITION_ERROR = 2
BUDGET_ERROR = 3

_PRECONDITION_EXC = (
    QuiverError,
    MismatchedLabelSets,
    MismatchedQuiver,
    InvalidOrdering,
    reps_mod.NotASink,
    reps_mod.NotASource,
    reps_mod.NotAnExtendedRoot,
    reps_mod.NotFiniteType,
    ValueError,
)
_BUDGET_EXC = (OrbitBudgetExceeded, CapExceeded, reps_mod.SplittingFailed)


def _load_quiver(path: str) -> CoxeterQuiver:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise QuiverParseError(f"cannot read {path}: {exc}") from exc
    try:
        return parse_quiver(text)
    except QuiverError as exc:
        raise QuiverParseError(f"invalid quiver: {exc}") from exc


def _emit(doc, as_json: bool, text_lines):
    if as_json:
        print(json.dumps(doc, sort_keys=True, separators=(",", ": "), indent=2))
    else:
        for line in text_lines:
            print(line)


def _cmd_classify(args) -> int:
    Q = _load_quiver(args.quiver)
    comps = classify_graph(Q)
    finite = all(t.is_dynkin for _, t in comps)
    doc = {
        "components": [
            {"vertices": list(vs), "type": t.name} for vs, t in comps
        ],
        "finite_type": finite,
    }
    lines = [f"component [{', '.join(vs)}]: {t.name}" for vs, t in comps]
    lines.append("finite type" if finite else "infinite type")
    _emit(doc, args.json, lines)
    return 0


def _cmd_unfold(args) -> int:
    Q = _load_quiver(args.quiver)
    uq = unfold(Q)
    doc = uq.to_json()
    lines = [f"unfolded vertices ({len(uq.vertices)}):"]
    lines += [f"  {v}" for v in uq.vertices]
    lines.append(f"unfolded arrows ({len(uq.arrows)}):")
    lines += [f"  {a.source} -> {a.target}  [{a.provenance}]" for a in uq.arrows]
    if args.components:
        comps = classify_graph(uq.to_coxeter())
        names = sorted(t.name for _, t in comps)
        doc["components"] = [
            {"vertices": list(vs), "type": t.name} for vs, t in comps
        ]
        lines.append("components: " + " ".join(names))
    _emit(doc, args.json, lines)
    return 0


def _cmd_roots(args) -> int:
    Q = _load_quiver(args.quiver)
    base = positive_roots(Q, args.budget)
    doc = {
        "count": len(base),
        "positive_roots": [r.to_json() for r in base.sorted()],
    }
    lines = [f"positive roots ({len(base)}):"]
    lines += [f"  {r.serialize()}" for r in base.sorted()]
    if args.extended:
        ext = extended_positive_roots(Q, args.budget)
        doc["extended_count"] = len(ext)
        doc["extended_positive_roots"] = [r.to_json() for r in ext.sorted()]
        lines.append(f"extended positive roots ({len(ext)}):")
        lines += [f"  {r.serialize()}" for r in ext.sorted()]
    _emit(doc, args.json, lines)
    return 0


def _cmd_indecs(args) -> int:
    Q = _load_quiver(args.quiver)
    found = reps_mod.enumerate_indecomposables(Q, args.budget)
    doc = {"count": len(found), "indecomposables": []}
    lines = [f"indecomposables ({len(found)}):"]
    for W in found:
        dv = reps_mod.dim_vector(W)
        entry = {"dim_vector": dv.to_json()}
        if args.full:
            entry["rep"] = W.to_json()
        doc["indecomposables"].append(entry)
        lines.append(f"  {dv.serialize()}")
        if args.full:
            for name, d in sorted(W.dims.items()):
                if d:
                    lines.append(f"    dim {name} = {d}")
            for k, m in sorted(W.maps.items()):
                if not m.is_zero():
                    lines.append(f"    map {k} = {m.to_json()}")
    _emit(doc, args.json, lines)
    return 0


def _cmd_path_algebra(args) -> int:
    Q = _load_quiver(args.quiver)
    grades = []
    n = 0
    while True:
        grade = pa.enumerate_paths(Q, n)
        if n > 0 and not grade.paths:
            break
        grades.append((n, pa.grade_class(Q, n)))
        n += 1
    total = pa.path_algebra_class(Q)
    doc = {
        "grades": [{"length": k, "class": c.to_json()} for k, c in grades],
        "total": total.to_json(),
    }
    lines = [f"grade {k}: {json.dumps(c.to_json(), sort_keys=True)}" for k, c in grades]
    lines.append(f"total: {json.dumps(total.to_json(), sort_keys=True)}")
    _emit(doc, args.json, lines)
    return 0


def _cmd_reflect(args) -> int:
    try:
        with open(args.rep, "r", encoding="utf-8") as fh:
            obj = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise QuiverParseError(f"cannot read representation: {exc}") from exc
    try:
        V = reps_mod.UnfoldedRep.from_json(obj)
    except (KeyError, TypeError, ValueError, QuiverError) as exc:
        raise QuiverParseError(f"bad representation JSON: {exc}") from exc
    Q = V.quiver.source
    if args.sign == "+":
        W = reps_mod.reflect_plus(Q, args.vertex, V)
    else:
        W = reps_mod.reflect_minus(Q, args.vertex, V)
    doc = W.to_json()
    dv = reps_mod.dim_vector(W)
    lines = [
        f"dim_vector: {dv.serialize()}",
        json.dumps(doc, sort_keys=True, separators=(",", ": "), indent=2),
    ]
    _emit(doc, args.json, lines)
    return 0


def _cmd_fusion(args) -> int:
    try:
        labels = tuple(int(x) for x in args.labels.split(",") if x)
    except ValueError as exc:
        raise QuiverParseError(f"bad label list {args.labels!r}") from exc
    try:
        x = FusionElem.from_json(json.loads(args.mul[0]), labels)
        y = FusionElem.from_json(json.loads(args.mul[1]), labels)
    except json.JSONDecodeError as exc:
        raise QuiverParseError(f"bad fusion element JSON: {exc}") from exc
    product = x * y
    doc = {"product": product.to_json()}
    _emit(doc, args.json, [json.dumps(product.to_json(), sort_keys=True)])
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coxrep", description="exact computations with Coxeter quivers"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="Coxeter-Dynkin type per component")
    p.add_argument("quiver")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("unfold", help="unfolded classical quiver")
    p.add_argument("quiver")
    p.add_argument("--components", action="store_true", help="classify the unfolding")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_unfold)

    p = sub.add_parser("roots", help="positive roots over the fusion ring")
    p.add_argument("quiver")
    p.add_argument("--extended", action="store_true")
    p.add_argument("--budget", type=int, default=10_000)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_roots)

    p = sub.add_parser("indecs", help="all indecomposable representations")
    p.add_argument("quiver")
    p.add_argument("--full", action="store_true", help="include matrices")
    p.add_argument("--budget", type=int, default=10_000)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_indecs)

    p = sub.add_parser("path-algebra", help="graded path algebra classes")
    p.add_argument("quiver")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_path_algebra)

    p = sub.add_parser("reflect", help="apply a reflection functor to a representation")
    p.add_argument("rep", help="representation JSON file")
    p.add_argument("--vertex", required=True)
    p.add_argument("--sign", required=True, choices=["+", "-"])
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_reflect)

    p = sub.add_parser("fusion", help="fusion ring arithmetic")
    p.add_argument("--labels", required=True, help="comma separated labels, e.g. 4,5")
    p.add_argument("--mul", nargs=2, required=True, metavar=("X", "Y"))
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_fusion)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except QuiverParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return PARSE_ERROR
    except _BUDGET_EXC as exc:
        print(f"error: {exc}", file=sys.stderr)
        return BUDGET_ERROR
    except _PRECONDITION_EXC as exc:
        print(f"error: {exc}", file=sys.stderr)
        return PRECONDITION_ERROR


if __name__ == "__main__":
    sys.exit(main())
