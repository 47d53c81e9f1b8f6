"""Command line interface.

Exit codes: 0 success or "yes", 1 a "no" verdict, 2 bad input, 3 input
too large for an exhaustive oracle, 4 a result failed its own check.
Interval indices in output are 1-based positions in the input file.
"""
from __future__ import annotations

import argparse
import json
import random
import sys

from . import oracle as oracles
from .cfdp import max_cfc, min_cfc
from .ehs import colouring_to_partition, is_ehs, is_exact_hitting_set, validate_partition
from .graphs import NotIntervalGraph, build_canonical, check_forbidden_witness, is_ehig, model_realizes, parse_graph
from .hypergraph import (
    ParseError,
    colour_count,
    discrete_hypergraph,
    format_colouring,
    format_hypergraph,
    parse_colouring,
    parse_hypergraph,
    random_hypergraph,
    verify_cf_colouring,
)

EXIT_OK, EXIT_NO, EXIT_INPUT, EXIT_SCALE, EXIT_SELF_CHECK = 0, 1, 2, 3, 4


class SelfCheckFailed(Exception):
    pass


def _check(condition: bool, what: str):
    if not condition:
        raise SelfCheckFailed(what)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as f:
            return f.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None


def _points(ps) -> str:
    return " ".join(str(p) for p in sorted(ps))


def _model_text(model) -> str:
    lines = [format_hypergraph(model.hypergraph).rstrip("\n")]
    for v, i in sorted(model.vertex_interval.items()):
        lines.append(f"# vertex {v} -> interval {i + 1}")
    for k, z in enumerate(model.anchors, start=1):
        lines.append(f"# z {k} = {z}")
    return "\n".join(lines)


def _model_json(model) -> dict:
    return {
        "n": model.hypergraph.n,
        "intervals": [list(iv) for iv in model.hypergraph.intervals],
        "vertex_interval": {str(v): i + 1 for v, i in sorted(model.vertex_interval.items())},
        "anchors": list(model.anchors),
        "merged": {str(v): w for v, w in sorted(model.merged.items())},
    }


def cmd_solve(args):
    h = parse_hypergraph(_read(args.file))
    k, colouring = min_cfc(h)
    _check(verify_cf_colouring(h, colouring), "colouring is not conflict-free")
    _check(colour_count(colouring) == k, "colouring does not use exactly k colours")
    if args.json:
        return EXIT_OK, {"k": k, "colouring": list(colouring)}
    return EXIT_OK, f"k={k}\n{format_colouring(colouring).rstrip()}"


def cmd_maxcfc(args):
    h = parse_hypergraph(_read(args.file))
    if args.colors < 0:
        raise ParseError("--colors must be non-negative")
    count, witness = max_cfc(h, args.colors)
    _check(len(witness) == count and all(p in h[i] for i, p in witness.items()), "witness does not match count")
    reps = [witness.get(i, 0) for i in range(h.m)]
    if args.json:
        return EXIT_OK, {"count": count, "representatives": reps}
    return EXIT_OK, f"count={count}\n" + " ".join(map(str, reps))


def cmd_isehs(args):
    h = parse_hypergraph(_read(args.file))
    ok, points = is_ehs(h)
    if ok:
        _check(is_exact_hitting_set(h, points), "hitting set is not exact")
    if args.json:
        return (EXIT_OK if ok else EXIT_NO), {"exact": ok, "hitting_set": sorted(points) if ok else None}
    return (EXIT_OK if ok else EXIT_NO), (_points(points) if ok else "no")


def cmd_partition(args):
    h = parse_hypergraph(_read(args.file))
    colouring = parse_colouring(_read(args.colouring), h.n)
    if not verify_cf_colouring(h, colouring):
        raise ParseError("colouring is not conflict-free for this hypergraph")
    parts = colouring_to_partition(h, colouring)
    try:
        validate_partition(h, parts)
    except ValueError as exc:
        raise SelfCheckFailed(str(exc)) from None
    if args.json:
        return EXIT_OK, {
            "parts": [{"intervals": sorted(i + 1 for i in p.intervals), "hitting": sorted(p.hitting)} for p in parts]
        }
    lines = [
        f"part {k}: intervals {_points(i + 1 for i in p.intervals)} hitting {_points(p.hitting)}"
        for k, p in enumerate(parts, start=1)
    ]
    return EXIT_OK, "\n".join(lines)


def cmd_canonical(args):
    g = parse_graph(_read(args.file))
    model = build_canonical(g)
    _check(model_realizes(g, model.hypergraph, model.vertex_interval), "model does not realize the graph")
    if args.json:
        return EXIT_OK, _model_json(model)
    return EXIT_OK, _model_text(model)


def cmd_ehig(args):
    g = parse_graph(_read(args.file))
    result = is_ehig(g)
    _check(model_realizes(g, result.model.hypergraph, result.model.vertex_interval), "model does not realize the graph")
    if result.verdict:
        _check(is_exact_hitting_set(result.model.hypergraph, result.hitting_set), "hitting set is not exact")
        if args.json:
            return EXIT_OK, {"ehig": True, "model": _model_json(result.model), "hitting_set": sorted(result.hitting_set)}
        return EXIT_OK, _model_text(result.model) + f"\nhitting: {_points(result.hitting_set)}"
    w = result.witness
    _check(check_forbidden_witness(g, w), "forbidden pattern witness is invalid")
    if args.json:
        return EXIT_NO, {"ehig": False, "path": list(w.path), "independent": list(w.independent)}
    return EXIT_NO, f"P: {' '.join(map(str, w.path))}\nX: {_points(w.independent)}"


ORACLES = {
    "cfc-number": lambda h, n: oracles.brute_cfc_number(h),
    "max-cfc": lambda h, n: oracles.brute_max_cfc(h, n),
    "exact-hitting-set": lambda h, n: oracles.brute_exact_hitting_set(h),
    "min-cooccurrence": lambda h, n: oracles.brute_min_over_cooccurrence(h),
    "min-eh-partition": lambda h, n: oracles.brute_min_eh_partition(h),
}


def cmd_oracle(args):
    h = parse_hypergraph(_read(args.file))
    if args.name == "max-cfc" and args.colors is None:
        raise ParseError("oracle max-cfc needs --colors")
    value = ORACLES[args.name](h, args.colors)
    if isinstance(value, frozenset):
        value = sorted(value)
    if args.json:
        return EXIT_OK, {"oracle": args.name, "value": value}
    if value is None:
        return EXIT_OK, "none"
    return EXIT_OK, " ".join(map(str, value)) if isinstance(value, list) else str(value)


def cmd_gen(args):
    if args.kind == "discrete":
        if args.n < 1:
            raise ParseError("--n must be at least 1")
        h = discrete_hypergraph(args.n)
    else:
        if args.n < 1 or args.m < 0:
            raise ParseError("--n must be at least 1 and --m non-negative")
        h = random_hypergraph(random.Random(args.seed), args.n, args.m)
    if args.json:
        return EXIT_OK, {"n": h.n, "intervals": [list(iv) for iv in h.intervals]}
    return EXIT_OK, format_hypergraph(h).rstrip("\n")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cfinterval", description="Conflict-free colouring of interval hypergraphs.")
    parser.add_argument("--json", action="store_true", help="print machine-readable JSON")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="conflict-free chromatic number and colouring")
    p.add_argument("file")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("maxcfc", help="most intervals conflict-free colourable with N colours")
    p.add_argument("file")
    p.add_argument("--colors", type=int, required=True)
    p.set_defaults(func=cmd_maxcfc)

    p = sub.add_parser("isehs", help="exact hitting set of an interval hypergraph")
    p.add_argument("file")
    p.set_defaults(func=cmd_isehs)

    p = sub.add_parser("partition", help="split intervals into exactly hittable parts from a colouring")
    p.add_argument("file")
    p.add_argument("colouring")
    p.set_defaults(func=cmd_partition)

    p = sub.add_parser("canonical", help="canonical interval model of an interval graph")
    p.add_argument("file")
    p.set_defaults(func=cmd_canonical)

    p = sub.add_parser("ehig", help="is an interval graph exactly hittable")
    p.add_argument("file")
    p.set_defaults(func=cmd_ehig)

    p = sub.add_parser("oracle", help="run a brute-force reference solver")
    p.add_argument("name", choices=sorted(ORACLES))
    p.add_argument("file")
    p.add_argument("--colors", type=int)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("gen", help="generate a hypergraph")
    p.add_argument("kind", choices=["discrete", "random"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        code, payload = args.func(args)
    except (ParseError, NotIntervalGraph) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except oracles.OracleScaleExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SCALE
    except (SelfCheckFailed, AssertionError) as exc:
        print(f"internal error: self-check failed: {exc}", file=sys.stderr)
        return EXIT_SELF_CHECK
    if args.json:
        print(json.dumps(payload))
    else:
        print(payload)
    return code


if __name__ == "__main__":
    sys.exit(main())
