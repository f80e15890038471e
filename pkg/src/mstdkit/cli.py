"""Command-line interface: construct, embed, count, group-search, spectrum."""

from __future__ import annotations

import argparse
import json
import sys

from .constructions import (
    ConstructionError,
    Gap,
    OneTrackParams,
    TwoTrackParams,
    gap_base_recipe,
    gap_family,
    hegarty_roesler_family,
    one_track_family,
    two_dim_family,
    two_track_family,
)
from .counting import count_covering, find_group_mstd
from .grouplattice import GroupSubset, embed_report
from .search import DEFAULT_BUDGET, exhaustive_spectrum
from .setops import IntSet, mstd_delta, symmetry_witness

FAMILIES = ("t1", "t2", "t3", "gap", "gap2", "hr")


def _parse_gap(raw: dict) -> Gap:
    return Gap(
        base=raw.get("base", 0),
        dims=tuple(tuple(d) for d in raw.get("dims", [])),
    )


def _need(family: str, params: dict, *keys: str):
    missing = [k for k in keys if k not in params]
    if missing:
        raise ConstructionError(
            f"family {family!r} needs parameter(s): {', '.join(missing)}"
        )


def _build_family(family: str, params: dict) -> tuple[IntSet, int]:
    """Return (set, adjoined element) for a family code and its parameters."""
    if family == "t1":
        _need(family, params, "m", "d", "k")
        p = OneTrackParams(params["m"], params["d"], params["k"])
        return one_track_family(p), p.m
    if family == "t3":
        _need(family, params, "m", "d", "k")
        p = TwoTrackParams(params["m"], params["d"], params["k"])
        return two_track_family(p), p.m
    if family == "t2":
        _need(family, params, "k")
        return two_dim_family(params["k"]), 4
    if family == "hr":
        _need(family, params, "k")
        return hegarty_roesler_family(params["k"]), 4
    if family in ("gap", "gap2"):
        _need(family, params, "m", "k", "r", "s")
        p = _parse_gap(params.get("p", {"base": 0, "dims": []}))
        base = gap_base_recipe(p, params["r"], params["s"], params["m"])
        variant = "one_to_k" if family == "gap" else "zero_to_k"
        return gap_family(base, params["k"], variant), params["m"]
    raise ConstructionError(f"unknown family {family!r}")


def _cmd_construct(args) -> dict:
    params = json.loads(args.params)
    built, adjoined = _build_family(args.family, params)
    core = IntSet(e for e in built if e != adjoined)
    witness = symmetry_witness(core)
    if witness is None:  # pragma: no cover - families always build symmetric cores
        raise ConstructionError("internal error: construction core is not symmetric")
    return {
        "family": args.family,
        "params": params,
        "set": list(built.elements),
        "delta": mstd_delta(built).delta,
        "a_star": witness.center,
    }


def _cmd_embed(args) -> dict:
    if args.input == "-":
        text = sys.stdin.read()
    else:
        with open(args.input, "r", encoding="utf-8") as fh:
            text = fh.read()
    subset = GroupSubset.from_json(text)
    result = embed_report(subset, t_max=args.t_max, cap_l=args.cap_l)
    return {
        "t_used": result.t,
        "m_used": result.radix,
        "set": list(result.image.elements),
        "delta": result.delta,
    }


def _cmd_count(args) -> dict:
    return count_covering(args.n).to_dict(include_table=args.table)


def _cmd_group_search(args) -> dict:
    subset = find_group_mstd(args.n, strategy=args.strategy, seed=args.seed)
    return json.loads(subset.to_json())


def _cmd_spectrum(args):
    report = exhaustive_spectrum(
        args.range_max,
        args.min_size,
        args.max_size,
        budget=args.budget,
        threads=args.threads,
    )
    if args.format == "csv":
        sys.stdout.write(report.to_csv())
        return None
    return report.to_dict()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mstd",
        description="Construct, verify, search for, and embed MSTD sets.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a set from a named family")
    p.add_argument("--family", required=True, choices=FAMILIES)
    p.add_argument("--params", required=True, help="family parameters as JSON")
    p.set_defaults(handler=_cmd_construct)

    p = sub.add_parser("embed", help="turn a group MSTD subset into an integer one")
    p.add_argument("--input", required=True, help="group subset JSON file, or -")
    p.add_argument("--t-max", type=int, default=32, dest="t_max")
    p.add_argument("--cap-l", type=int, default=2, dest="cap_l")
    p.set_defaults(handler=_cmd_embed)

    p = sub.add_parser("count", help="covering counts for parity graphs in Z/n x Z/2")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--table", action="store_true", help="include per-element misses")
    p.set_defaults(handler=_cmd_count)

    p = sub.add_parser("group-search", help="find a covering parity graph")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--strategy", choices=("first", "random"), default="first")
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(handler=_cmd_group_search)

    p = sub.add_parser("spectrum", help="exhaustive delta spectrum over [0, N]")
    p.add_argument("--range-max", type=int, required=True, dest="range_max")
    p.add_argument("--min-size", type=int, default=0, dest="min_size")
    p.add_argument("--max-size", type=int, required=True, dest="max_size")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(handler=_cmd_spectrum)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        result = args.handler(args)
    except (ValueError, RuntimeError, OverflowError, OSError, KeyError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    if result is not None:
        print(json.dumps(result, indent=2))
    return 0


if __name__ == "__main__":
    sys.exit(main())
