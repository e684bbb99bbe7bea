"""Command-line entry point.

Exit codes: 0 success, 1 verification failure, 2 usage or structural error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .board import DimensionError, make_board
from .constructions import ConstructionFault, construct_placement
from .diagonals import StructuralError, atlas_listing, enumerate_diagonals, upper_bound_from_atlas
from .formulas import case_tag, diagonal_count_formula, lemma3_bound, theorem_value
from .render import FORMATS, read_placement, render_net
from .solver import ConsistencyError, brute_force_oracle, independence_number, is_independent, max_placement
from .sweep import run_verification_sweep, sweep_pairs


def _dims(p: argparse.ArgumentParser) -> None:
    p.add_argument("--n", type=int, required=True, help="side of the square cross-section")
    p.add_argument("--m", type=int, required=True, help="length of the prism")


def _emit(p: argparse.ArgumentParser) -> None:
    p.add_argument("--emit", choices=FORMATS, help="also print the placement as a net or record")
    p.add_argument("--out", help="write the emitted document here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="prism-bishops", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("board", help="board facts")
    p.add_argument("action", choices=["info"])
    _dims(p)

    p = sub.add_parser("diagonals", help="maximal diagonal census")
    _dims(p)
    p.add_argument("--list", action="store_true", help="one line per diagonal: id, kind, length, cap visits")

    p = sub.add_parser("formula", help="closed-form values")
    _dims(p)

    p = sub.add_parser("solve", help="exact independence number")
    _dims(p)
    p.add_argument("--oracle", action="store_true", help="also run the brute-force oracle")
    _emit(p)

    p = sub.add_parser("construct", help="explicit optimal placement")
    _dims(p)
    _emit(p)

    p = sub.add_parser("check", help="check a placement file for independence")
    p.add_argument("path")

    p = sub.add_parser("verify", help="sweep a range of boards")
    p.add_argument("--n-min", type=int, default=3)
    p.add_argument("--n-max", type=int, default=6)
    p.add_argument("--m-max", type=int, help="largest m (default 5n per row)")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--periodicity", action="store_true", help="also compare against m + 4n")
    p.add_argument("--json", action="store_true", help="machine-readable report")
    return parser


def _write(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _run(args: argparse.Namespace) -> int:
    if args.command == "verify":
        pairs = sweep_pairs(args.n_min, args.n_max, args.m_max)
        report = run_verification_sweep(pairs, jobs=args.jobs, periodicity=args.periodicity)
        if args.json:
            sys.stdout.write(json.dumps(report.to_dict(), indent=1) + "\n")
        else:
            sys.stdout.write(report.to_text())
        return 0 if report.ok else 1

    if args.command == "check":
        p = read_placement(args.path)
        board = make_board(p.spec.n, p.spec.m)
        ok = is_independent(board, enumerate_diagonals(board), p)
        print(f"{len(p)} bishops on {p.spec.n}x{p.spec.n}x{p.spec.m}: {'independent' if ok else 'attacking'}")
        return 0 if ok else 1

    board = make_board(args.n, args.m)
    spec = board.spec
    flag = " (small-n: validated by oracle only)" if spec.small_n else ""

    if args.command == "board":
        print(f"n={spec.n} m={spec.m} k={spec.k} r={spec.r}{flag}")
        print(f"squares: {len(board.squares)}")
        print(f"grid points: {len(board.incidence)}  cuboid vertices: {len(board.cuboid_vertices())}")
        print(f"euler characteristic: {board.euler_characteristic()}")
        return 0

    if args.command == "formula":
        tag = case_tag(spec)
        print(f"n={spec.n} m={spec.m} k={spec.k} r={spec.r} branch={tag.branch}{flag}")
        print(f"independence number: {theorem_value(spec)}")
        print(f"upper bound (half the diagonals): {lemma3_bound(spec)}")
        print(f"maximal diagonals: {diagonal_count_formula(spec)}")
        return 0

    atlas = enumerate_diagonals(board)
    if args.command == "diagonals":
        print(f"diagonals: {len(atlas)} (open {atlas.open_count}, closed {atlas.closed_count});"
              f" formula {diagonal_count_formula(spec)}; bound {upper_bound_from_atlas(atlas)}{flag}")
        if args.list:
            print(atlas_listing(atlas))
        return 0

    if args.command == "solve":
        value = independence_number(board, atlas)
        print(f"independence number: {value} (formula {theorem_value(spec)}){flag}")
        status = 0 if value == theorem_value(spec) else 1
        if args.oracle:
            oracle = brute_force_oracle(board, atlas)
            print(f"oracle: {oracle}")
            status = status or int(oracle != value)
        if args.emit:
            _write(render_net(board, max_placement(board, atlas), args.emit), args.out)
        return status

    if args.command == "construct":
        p = construct_placement(board, atlas)
        print(f"construction {p.meta.get('construction')}: {len(p)} bishops, independent{flag}")
        if args.emit:
            _write(render_net(board, p, args.emit), args.out)
        return 0
    raise AssertionError(args.command)  # pragma: no cover


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _run(args)
    except (DimensionError, StructuralError, ConsistencyError, ConstructionFault, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
