"""Command-line front end: ``warpdeg <command> ...``.

Exit status is 0 on success (and when every verified claim holds), 1 when a
verification fails, 2 on bad input.
"""

from __future__ import annotations

import argparse
import itertools
import json
import sys
from pathlib import Path

from . import generators
from .diagram import BaseSequence, DiagramError, LinkDiagram, from_json, parse, reverse_all, serialize
from .matrix import build_matrix, ld_min_matrix, parse_matrix
from .normalize import degree_from_word, normalize
from .splitting import chain_check, split_bounds
from .verify import (
    _num,
    census_min,
    linking_number,
    total_linking,
    verify_all,
    verify_thm_1_2,
)
from .warping import MAX_R, component_d, d_a, d_min, d_unoriented, ld_min, sr, warping_points

SCHEMA_VERSION = 1


class InputError(Exception):
    pass


def _load(path: str) -> LinkDiagram:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise InputError(str(exc)) from exc
    if path.endswith(".json") or text.lstrip().startswith("{"):
        return from_json(text)
    return parse(text)


def _ints(text: str) -> tuple:
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(",") if x)
    except ValueError as exc:
        raise InputError(f"expected comma-separated integers, got {text!r}") from exc


def _emit(args, payload: dict, lines) -> None:
    if args.json:
        payload = {"schema_version": SCHEMA_VERSION, **payload}
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        for line in lines:
            print(line)


def _one_based(order) -> str:
    return "(" + ",".join(str(i + 1) for i in order) + ")"


def cmd_compute(args) -> int:
    D = _load(args.path)
    d, wit = d_min(D, args.max_r)
    dm, _ = d_min(reverse_all(D), args.max_r)
    du, _ = d_unoriented(D, args.max_r)
    ld, order = ld_min(D, args.max_r)
    M = build_matrix(D, BaseSequence(order, wit.positions))
    links = {f"{i + 1},{j + 1}": linking_number(D, i, j)
             for i, j in itertools.combinations(range(D.r), 2)}
    thm = verify_thm_1_2(D, args.max_r)
    payload = {
        "c": D.c, "lc": D.lc, "r": D.r, "sr": sr(D),
        "component_d": component_d(D), "ld": ld, "d": d, "d_inverse": dm, "d_unoriented": du,
        "witness": {"order": [i + 1 for i in wit.order], "positions": list(wit.positions)},
        "linking_matrix": M.tolist(), "linking_numbers": _num(links),
        "total_linking": _num(total_linking(D)),
        "thm_1_2": thm.to_dict(), "warnings": D.warnings(),
    }
    lines = [
        f"c={D.c} lc={D.lc} r={D.r} sr={sr(D)}",
        "component d: " + " ".join(str(v) for v in component_d(D)),
        f"ld={ld} order={_one_based(order)}",
        f"d={d} d(-D)={dm} d(|D|)={du}",
        "linking matrix at minimizing order:",
        *("  " + " ".join(str(v) for v in row) for row in M.tolist()),
        *(f"Link({k})={_num(v):+}" for k, v in links.items()),
        f"total linking={_num(total_linking(D))}",
        f"Thm1.2 {thm.lhs} <= {thm.rhs} " + ("equality" if thm.equality else "strict")
        + f", property C={thm.condition}",
        *(f"warning: {w}" for w in D.warnings()),
    ]
    if args.order or args.base:
        order_ = tuple(i - 1 for i in _ints(args.order)) if args.order else tuple(range(D.r))
        pos = _ints(args.base) if args.base else (0,) * D.r
        a = BaseSequence(order_, pos)
        rep = d_a(D, a)
        pts = sorted(warping_points(D, a))
        payload["based"] = {"d": rep.d, "ld": rep.ld, "self": list(rep.self_counts),
                            "warping_points": [[p.crossing, p.kind] for p in pts]}
        lines.append(f"based: d(D_a)={rep.d} ld(D_a)={rep.ld} warping points="
                     + ",".join(str(p.crossing) for p in pts))
    _emit(args, payload, lines)
    return 0


def cmd_verify(args) -> int:
    D = _load(args.path)
    reports = verify_all(D, args.max_r)
    if args.claims:
        wanted = set(args.claims.split(","))
        reports = [r for r in reports if r.claim in wanted]
    _emit(args, {"reports": [r.to_dict() for r in reports], "warnings": D.warnings()},
          [r.line() for r in reports] + [f"warning: {w}" for w in D.warnings()])
    return 0 if all(r.holds for r in reports) else 1


def cmd_normalize(args) -> int:
    w = normalize(args.word.lower())
    payload = {"word": args.word, "normalized": w, "length": len(w)}
    lines = [f"{w or '(empty)'} (len {len(w)})"]
    if args.based is not None:
        d = degree_from_word(args.based, args.word.lower())
        payload["d"] = d
        lines.append(f"d={args.based}-{len(w)}/2={d}")
    _emit(args, payload, lines)
    return 0


def cmd_matrix(args) -> int:
    M = parse_matrix(args.rows)
    v, order = ld_min_matrix(M)
    _emit(args, {"ld": v, "order": [i + 1 for i in order]},
          [f"ld={v}, order={_one_based(order)}"])
    return 0


def cmd_split(args) -> int:
    D = _load(args.path)
    bounds = split_bounds(D, args.max_r)
    rep = chain_check(D, args.max_r)
    lines = []
    for name, b in bounds.items():
        val = f"= {b.exact}" if b.exact is not None else f"in [{b.lower}, {b.upper}]"
        lines.append(f"{name} {val}  change {list(b.upper_certificate)}")
    lines.append(rep.line())
    _emit(args, {"bounds": {k: b.to_dict() for k, b in bounds.items()}, "chain": rep.to_dict()},
          lines)
    return 0 if rep.holds else 1


def cmd_gen(args) -> int:
    fam, params = args.family, args.params
    if fam == "pretzel":
        D = generators.pretzel_odd(_ints(params[0]))
    elif fam == "torus":
        D = generators.torus_2p(int(params[0]))
    elif fam == "chain":
        D = generators.chain(int(params[0]))
    elif fam == "random":
        D = generators.random_diagram(args.seed, args.c, args.r, linking_consistent=args.consistent)
    else:
        raise InputError(f"unknown family {fam!r}")
    sys.stdout.write(serialize(D))
    return 0


def cmd_census(args) -> int:
    Ds = [_load(p) for p in args.paths]
    v, k = census_min(Ds, args.metric, args.max_r)
    _emit(args, {"metric": args.metric, "value": v, "argmin": args.paths[k]},
          [f"{args.metric}={v} attained by {args.paths[k]}"])
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="warpdeg", description="Warping degree invariants of link diagrams.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, path=True):
        if path:
            sp.add_argument("path", help="diagram file (text or JSON); '-' for stdin")
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        sp.add_argument("--max-r", type=int, default=MAX_R, help="cap on components for order enumeration")

    sp = sub.add_parser("compute", help="all warping invariants of a diagram")
    common(sp)
    sp.add_argument("--order", help="1-based component order, e.g. 2,1,3")
    sp.add_argument("--base", help="base position per component, e.g. 0,3,1")
    sp.set_defaults(func=cmd_compute)

    sp = sub.add_parser("verify", help="check every applicable inequality")
    common(sp)
    sp.add_argument("--claims", help="comma-separated claim ids to keep")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("normalize", help="normalize an o/u word")
    common(sp, path=False)
    sp.add_argument("word")
    sp.add_argument("--based", type=int, help="based warping count d(D_a) to turn into d(D)")
    sp.set_defaults(func=cmd_normalize)

    sp = sub.add_parser("matrix", help="minimize ld over orders of a linking matrix")
    common(sp, path=False)
    sp.add_argument("rows", help='rows separated by ";", e.g. "0 1 0;1 0 0;2 2 0"')
    sp.set_defaults(func=cmd_matrix)

    sp = sub.add_parser("split", help="splitting number intervals")
    common(sp)
    sp.set_defaults(func=cmd_split)

    sp = sub.add_parser("gen", help="emit a generated diagram")
    sp.add_argument("family", choices=["pretzel", "torus", "chain", "random"])
    sp.add_argument("params", nargs="*")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--c", type=int, default=6, help="maximum crossing count for random codes")
    sp.add_argument("--r", type=int, default=1)
    sp.add_argument("--consistent", action="store_true",
                    help="random codes with planar-style linking sign consistency")
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("census", help="minimum of a metric over diagrams of one link")
    sp.add_argument("paths", nargs="+")
    sp.add_argument("--metric", choices=["d_plus_dminus", "f_value", "sr"], default="f_value")
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--max-r", type=int, default=MAX_R)
    sp.set_defaults(func=cmd_census)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, DiagramError, ValueError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
