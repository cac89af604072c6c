"""Command-line front end.

Exit codes: 0 success, 1 when ``check`` answers no, 2 for unreadable input
or bad arguments, 3 when a solver precondition fails.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence, TextIO

from .clique_cover import clique_cover_exact, clique_cover_nonorientable, clique_cover_small_hitting
from .errors import FamilyParameterError, GraphError, PreconditionError, SizeLimitError
from .generators.families import FamilySpec, NotPrismaticError, family_names, generate
from .generators.sweeps import candidate_specs
from .graph import core_mask
from .graphio import format_cover, format_graph, format_packing, read_graph
from .hitting_set import find_hitting_set_at_most, min_hitting_set
from .packing import CLAW_FREE, K33, OTHER, classify_derived_components, max_triangle_packing_prismatic
from .recognition import (
    find_rotator_or_twister,
    is_clawfree,
    is_diamond_k4_free,
    is_orientable,
    is_prismatic,
    is_rigid,
)

EXIT_OK, EXIT_NO, EXIT_INPUT, EXIT_PRECONDITION = 0, 1, 2, 3
PROPERTIES = ("prismatic", "orientable", "rigid", "clawfree")


class UsageError(Exception):
    pass


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="prismatic", description="Prismatic graph toolkit.")
    sub = p.add_subparsers(dest="verb", required=True)

    gen = sub.add_parser("gen", help="generate a family graph")
    gen.add_argument("family", choices=family_names())
    gen.add_argument("--param", action="append", default=[], metavar="KEY=JSON", help="override one parameter")
    gen.add_argument("--index", type=int, help="take the i-th entry of the family's default sweep")
    gen.add_argument("--seed", type=int, default=0, help="seed for randomized sweeps (default 0)")
    gen.add_argument("-o", "--output", help="output file (default: stdout)")

    check = sub.add_parser("check", help="test class membership")
    check.add_argument("file")
    for prop in PROPERTIES:
        check.add_argument(f"--{prop}", action="store_true")

    hs = sub.add_parser("hitting-set", help="triangle hitting set")
    hs.add_argument("file")
    mode = hs.add_mutually_exclusive_group()
    mode.add_argument("--max", type=int, default=5, metavar="K", help="find one of size at most K (default 5)")
    mode.add_argument("--exact", action="store_true", help="find a minimum one")

    cc = sub.add_parser("clique-cover", help="minimum clique cover")
    cc.add_argument("file")
    cc.add_argument(
        "--method",
        choices=("auto", "nonorientable", "small-hitting", "exact"),
        default="auto",
        help="solver to use (auto picks the first applicable)",
    )

    pack = sub.add_parser("pack", help="maximum vertex-disjoint triangle packing")
    pack.add_argument("file")

    stats = sub.add_parser("stats", help="basic counts")
    stats.add_argument("file")
    return p


def _parse_params(items: Sequence[str]) -> dict:
    params = {}
    for item in items:
        key, sep, value = item.partition("=")
        if not sep or not key:
            raise UsageError(f"--param expects KEY=JSON, got {item!r}")
        try:
            params[key] = json.loads(value)
        except json.JSONDecodeError as exc:
            raise UsageError(f"--param {key}: value is not JSON ({exc.msg})") from None
    return params


def _cmd_gen(args, out: TextIO) -> int:
    params = {}
    if args.index is not None:
        specs = candidate_specs(args.family, seed=args.seed)
        if not 0 <= args.index < len(specs):
            raise UsageError(f"--index must lie in 0..{len(specs) - 1} for {args.family}")
        params.update(specs[args.index].params)
    params.update(_parse_params(args.param))
    spec = FamilySpec(args.family, params)
    G = generate(spec)
    text = format_graph(G, comments=[f"family {spec.describe()}"])
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        out.write(text)
    return EXIT_OK


def _orientability_obstruction(G) -> str:
    found = find_rotator_or_twister(G)
    if found is not None:
        return str(found)
    return str(is_orientable(G).obstruction)


def _cmd_check(args, out: TextIO) -> int:
    wanted = [p for p in PROPERTIES if getattr(args, p)]
    G = read_graph(args.file)
    prismatic = is_prismatic(G)
    if not wanted:
        wanted = list(PROPERTIES) if prismatic else ["prismatic", "clawfree"]
    elif not prismatic and ({"orientable", "rigid"} & set(wanted)):
        raise PreconditionError(
            f"orientability and rigidity are defined for prismatic graphs only ({prismatic.obstruction})"
        )
    status = EXIT_OK
    for prop in wanted:
        if prop == "prismatic":
            verdict, detail = prismatic, str(prismatic.obstruction)
        elif prop == "orientable":
            verdict = is_orientable(G)
            detail = _orientability_obstruction(G) if not verdict else ""
        elif prop == "rigid":
            verdict = is_rigid(G)
            detail = str(verdict.obstruction)
        else:
            verdict = is_clawfree(G)
            detail = str(verdict.obstruction)
        out.write(f"{prop}: {'yes' if verdict else 'no'}\n")
        if not verdict:
            out.write(f"obstruction: {detail}\n")
            status = EXIT_NO
    return status


def _cmd_hitting_set(args, out: TextIO) -> int:
    G = read_graph(args.file)
    if args.exact:
        found = min_hitting_set(G)
    else:
        if args.max < 0:
            raise UsageError("--max must be non-negative")
        found = find_hitting_set_at_most(G, args.max)
    if found is None:
        out.write("none\n")
    else:
        out.write("vertices " + " ".join(map(str, found.vertices)) + "\n")
        out.write(f"size {len(found)}\n")
    return EXIT_OK


def _cmd_clique_cover(args, out: TextIO) -> int:
    G = read_graph(args.file)
    method = args.method
    if method == "auto":
        method = "small-hitting"
        prismatic = is_prismatic(G)
        if prismatic and not is_orientable(G):
            method = "nonorientable"
        elif is_diamond_k4_free(G) and find_hitting_set_at_most(G, 5) is None:
            raise PreconditionError(
                "clique cover is implemented for non-orientable prismatic graphs and for "
                "diamond-free, K4-free graphs with a triangle hitting set of at most 5 vertices"
            )
    if method == "nonorientable":
        cover = clique_cover_nonorientable(G)
    elif method == "small-hitting":
        cover = clique_cover_small_hitting(G)
    else:
        cover = clique_cover_exact(G)
    out.write(format_cover(cover))
    return EXIT_OK


def _cmd_pack(args, out: TextIO) -> int:
    G = read_graph(args.file)
    out.write(format_packing(max_triangle_packing_prismatic(G)))
    return EXIT_OK


def _cmd_stats(args, out: TextIO) -> int:
    G = read_graph(args.file)
    out.write(f"n={G.n} m={G.m} triangles={len(G.triangle_list)} core={core_mask(G).bit_count()}\n")
    comps = classify_derived_components(G)
    counts = {kind: sum(c.kind == kind for c in comps) for kind in (K33, CLAW_FREE, OTHER)}
    out.write(
        f"derived components={len(comps)} k33={counts[K33]} clawfree={counts[CLAW_FREE]} other={counts[OTHER]}\n"
    )
    return EXIT_OK


COMMANDS = {
    "gen": _cmd_gen,
    "check": _cmd_check,
    "hitting-set": _cmd_hitting_set,
    "clique-cover": _cmd_clique_cover,
    "pack": _cmd_pack,
    "stats": _cmd_stats,
}


def run(argv: Optional[Sequence[str]] = None, out: Optional[TextIO] = None, err: Optional[TextIO] = None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        return COMMANDS[args.verb](args, out)
    except (GraphError, UsageError, OSError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT
    except NotPrismaticError as exc:
        err.write(f"precondition violated: {exc}\n")
        return EXIT_PRECONDITION
    except FamilyParameterError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT
    except (PreconditionError, SizeLimitError) as exc:
        err.write(f"precondition violated: {exc}\n")
        return EXIT_PRECONDITION


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
