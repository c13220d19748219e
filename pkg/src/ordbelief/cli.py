"""Command-line front end: ``ordbelief <subcommand> ...``.

Every module error maps to its own exit status (see
:mod:`ordbelief.exceptions`); I/O failures exit with 13 and usage errors
with argparse's 2. Numbers are printed with 12 significant digits.
"""

from __future__ import annotations

import argparse
import csv
import io
import itertools
import sys
from pathlib import Path

from .combine import RULES, combine
from .decision import (
    Criterion,
    conflict,
    conflict_multi,
    decide_distance,
    decide_pointwise,
    distance_scores,
    pointwise_scores,
)
from .documents import (
    dumps_json,
    emit_mass_document,
    fmt,
    likert_mass,
    parse_likert_document,
    parse_mass_document,
    round12,
)
from .exceptions import BeliefError, InvalidParameter
from .frame import EMPTY, OrderedFrame, enumerate_ops, format_element, singleton
from .fuzzy import FuzzyParams
from .mass import MassFunction, bel, betp, pl
from .metric import ElementDistanceMode, belief_distance, dissimilarity_matrix

IO_ERROR_EXIT = 13


def _render(fmt_name: str, headers, rows, json_obj) -> str:
    if fmt_name == "json":
        return dumps_json(json_obj)
    rows = [[fmt(c) if isinstance(c, float) else str(c) for c in row] for row in rows]
    if fmt_name == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(headers)
        writer.writerows(rows)
        return buf.getvalue()
    widths = [max(len(str(h)), *(len(r[k]) for r in rows)) if rows else len(str(h)) for k, h in enumerate(headers)]
    lines = ["  ".join(str(h).ljust(w) for h, w in zip(headers, widths)).rstrip()]
    lines += ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows]
    return "\n".join(lines) + "\n"


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _load_masses(args) -> list[MassFunction]:
    return [parse_mass_document(_read(p), renormalize=args.renormalize, source=p) for p in args.files]


def _fuzzy_params(args) -> FuzzyParams:
    return FuzzyParams(
        alpha=0.5 if args.alpha is None else args.alpha,
        gamma=args.gamma,
        mode=ElementDistanceMode.coerce(args.dmode),
        allow_large_gamma=args.allow_large_gamma,
    )


def _matrix(args, frame: OrderedFrame):
    params = _fuzzy_params(args) if args.kind == "fuzzy" else None
    return dissimilarity_matrix(frame, args.kind, mode=args.dmode, params=params)


def _matrix_meta(args) -> dict:
    meta = {"kind": args.kind}
    if args.kind != "plain":
        meta["dmode"] = ElementDistanceMode.coerce(args.dmode).value
    if args.kind == "fuzzy":
        params = _fuzzy_params(args)
        meta.update(alpha=params.alpha, gamma=params.gamma, conformant=params.conformant)
    return meta


def _candidates(choice: str, frame: OrderedFrame):
    if choice == "singletons":
        return frame.singletons()
    if choice == "all":
        return [x for x in enumerate_ops(frame.n) if not x.is_empty]
    return [frame.parse(tok) for tok in choice.split(",") if tok.strip()]


def _mass_rows(m: MassFunction):
    return [[format_element(x), v] for x, v in m.items()]


def cmd_combine(args) -> str:
    masses = _load_masses(args)
    fuzzy = _fuzzy_params(args) if args.alpha is not None else None
    out = combine(masses, args.rule, fuzzy=fuzzy)
    return _render(args.format, ["focal", "mass"], _mass_rows(out), emit_mass_document(out))


def cmd_distance(args) -> str:
    m1, m2 = _load_masses(args)
    d = belief_distance(m1, m2, _matrix(args, m1.frame))
    if args.format == "table":
        return fmt(d) + "\n"
    return _render(args.format, ["distance"], [[d]], {"distance": round12(d), **_matrix_meta(args)})


def cmd_matrix(args) -> str:
    if args.frame:
        frame = parse_mass_document(_read(args.frame), renormalize=True, source=args.frame).frame
    elif args.n:
        frame = OrderedFrame(args.n)
    else:
        raise InvalidParameter("matrix needs --n or --frame")
    matrix = _matrix(args, frame)
    names = matrix.labels()
    rows = [[name, *map(float, row)] for name, row in zip(names, matrix.entries)]
    obj = {
        **_matrix_meta(args),
        "elements": names,
        "entries": [[round12(float(v)) for v in row] for row in matrix.entries],
    }
    return _render(args.format, ["", *names], rows, obj)


def cmd_decide(args) -> str:
    (m,) = _load_masses(args)
    if args.criterion == "dist":
        candidates = _candidates(args.candidates, m.frame)
        matrix = _matrix(args, m.frame)
        scores = distance_scores(m, candidates, matrix)
        chosen = decide_distance(m, candidates, matrix)
        names = [format_element(x) for x in candidates]
    else:
        scores = pointwise_scores(m, args.criterion)
        chosen = singleton(decide_pointwise(m, args.criterion))
        names = [format_element(x) for x in m.frame.singletons()]
    chosen = format_element(chosen)
    rows = [[name, s] for name, s in zip(names, scores)]
    if args.format == "json":
        obj = {
            "criterion": args.criterion,
            "decision": chosen,
            "scores": [{"candidate": n, "score": round12(s)} for n, s in zip(names, scores)],
        }
        return dumps_json(obj)
    if args.format == "csv":
        return _render("csv", ["candidate", "score", "chosen"], [r + [int(r[0] == chosen)] for r in rows], None)
    return f"decision: {chosen}\n" + _render("table", ["candidate", "score"], rows, None)


def cmd_conflict(args) -> str:
    masses = _load_masses(args)
    if len(masses) < 2:
        raise BeliefError("conflict needs at least two mass documents")
    matrix = _matrix(args, masses[0].frame)
    pairs = list(itertools.combinations(range(len(masses)), 2))
    rows = [[args.files[i], args.files[j], conflict(masses[i], masses[j], matrix)] for i, j in pairs]
    total = conflict_multi(masses, matrix)
    if args.format == "json":
        obj = {
            "conflict": round12(total),
            "pairs": [{"a": a, "b": b, "conflict": round12(c)} for a, b, c in rows],
            **_matrix_meta(args),
        }
        return dumps_json(obj)
    if args.format == "table" and len(masses) == 2:
        return fmt(total) + "\n"
    return _render(args.format, ["a", "b", "conflict"], rows + [["mean", "", total]], None)


def cmd_transform(args) -> str:
    (m,) = _load_masses(args)
    has_betp = m[EMPTY] < 1.0
    rows = []
    for x in enumerate_ops(m.frame.n):
        p = betp(m, x.lo) if has_betp and not x.is_empty and x.lo == x.hi else ""
        rows.append([format_element(x), m[x], bel(m, x), pl(m, x), p])
    if args.format == "json":
        obj = {
            "elements": [
                {"element": r[0], "mass": round12(r[1]), "bel": round12(r[2]), "pl": round12(r[3])}
                for r in rows
            ],
            "betp": {r[0]: round12(r[4]) for r in rows if r[4] != ""},
        }
        return dumps_json(obj)
    return _render(args.format, ["element", "mass", "bel", "pl", "betp"], rows, None)


def cmd_likert(args) -> str:
    frame, groups = parse_likert_document(_read(args.file), source=args.file)
    masses = [likert_mass(frame, counts, args.discount) for _, counts in groups]
    fuzzy = _fuzzy_params(args) if args.alpha is not None else None
    fused = combine(masses, args.rule, fuzzy=fuzzy)
    if args.criterion == "dist":
        decision = decide_distance(fused, _candidates(args.candidates, frame), _matrix(args, frame))
    else:
        decision = singleton(decide_pointwise(fused, args.criterion))
    decision = format_element(decision)
    probs = fused.betp_vector() if fused[EMPTY] < 1.0 else None
    if args.format == "json":
        obj = {
            "groups": [name for name, _ in groups],
            "rule": args.rule,
            "fused": emit_mass_document(fused),
            "decision": decision,
            "decision_label": _label(frame, decision),
        }
        if probs is not None:
            obj["betp"] = {f"w{i}": round12(p) for i, p in enumerate(probs, start=1)}
        return dumps_json(obj)
    out = _render(args.format, ["focal", "mass"], _mass_rows(fused), None)
    if args.format == "csv":
        return out
    return f"decision: {decision} ({_label(frame, decision)})\n" + out


def _label(frame: OrderedFrame, name: str) -> str:
    x = frame.parse(name)
    if x.lo == x.hi:
        return frame.labels[x.lo - 1]
    return f"{frame.labels[x.lo - 1]}..{frame.labels[x.hi - 1]}"


def _add_matrix_flags(p, default_kind="ordered"):
    p.add_argument("--kind", choices=["plain", "ordered", "fuzzy"], default=default_kind)
    _add_fuzzy_flags(p)


def _add_fuzzy_flags(p):
    p.add_argument("--dmode", choices=[m.value for m in ElementDistanceMode], default="avg")
    p.add_argument("--alpha", type=float, default=None, help="membership height (default 0.5; crisp mixing if unset)")
    p.add_argument("--gamma", type=float, default=1.0)
    p.add_argument("--allow-large-gamma", action="store_true", help="accept gamma > 1")


def _add_format(p, default):
    p.add_argument("--format", choices=["table", "csv", "json"], default=default)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ordbelief", description="Belief functions on ordered frames.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("combine", help="combine mass documents with a rule")
    p.add_argument("--rule", choices=RULES, required=True)
    _add_fuzzy_flags(p)
    p.add_argument("files", nargs="+")
    _add_format(p, "json")
    p.set_defaults(func=cmd_combine)

    p = sub.add_parser("distance", help="distance between two mass documents")
    _add_matrix_flags(p)
    p.add_argument("files", nargs=2)
    _add_format(p, "table")
    p.set_defaults(func=cmd_distance)

    p = sub.add_parser("matrix", help="print a dissimilarity matrix")
    _add_matrix_flags(p)
    p.add_argument("--n", type=int)
    p.add_argument("--frame", help="take the frame from a mass document")
    _add_format(p, "csv")
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("decide", help="decide on a mass document")
    p.add_argument("--criterion", choices=[c.value for c in Criterion] + ["dist"], default="betp")
    p.add_argument("--candidates", default="singletons", help="singletons, all, or e.g. w1,w2..w3")
    _add_matrix_flags(p)
    p.add_argument("files", nargs=1)
    _add_format(p, "table")
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("conflict", help="distance-based conflict between mass documents")
    _add_matrix_flags(p)
    p.add_argument("files", nargs="+")
    _add_format(p, "table")
    p.set_defaults(func=cmd_conflict)

    p = sub.add_parser("transform", help="mass, bel, pl and BetP tables")
    p.add_argument("files", nargs=1)
    _add_format(p, "table")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("likert", help="fuse Likert answer counts of several groups")
    p.add_argument("--rule", choices=RULES, default="avg")
    p.add_argument("--discount", type=float, default=0.0, help="mass moved to the whole frame")
    p.add_argument("--criterion", choices=[c.value for c in Criterion] + ["dist"], default="betp")
    p.add_argument("--candidates", default="singletons")
    _add_matrix_flags(p)
    p.add_argument("file")
    _add_format(p, "table")
    p.set_defaults(func=cmd_likert)

    for name in ("combine", "distance", "decide", "conflict", "transform"):
        sub.choices[name].add_argument("--renormalize", action="store_true", help="rescale masses to sum to 1")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out = args.func(args)
    except BeliefError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return IO_ERROR_EXIT
    sys.stdout.write(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
