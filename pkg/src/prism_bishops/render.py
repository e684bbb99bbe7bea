"""Placement files and net diagrams (fixed-width text and SVG)."""

from __future__ import annotations

import json
from pathlib import Path
from xml.sax.saxutils import escape

from .board import CAP_LEFT, CAP_RIGHT, CAPS, LATERALS, Board, BoardSpec, Square
from .solver import Placement

FORMATS = ("text", "svg", "file")
BISHOP = "B"


# --- placement file -------------------------------------------------------

def placement_to_dict(p: Placement) -> dict:
    out = {
        "n": p.spec.n,
        "m": p.spec.m,
        "count": len(p),
        "squares": [[s.face, s.row, s.col] for s in p.sorted()],
    }
    if p.meta:
        out["meta"] = {k: p.meta[k] for k in sorted(p.meta)}
    return out


def dumps_placement(p: Placement) -> str:
    return json.dumps(placement_to_dict(p), indent=1) + "\n"


def loads_placement(text: str) -> Placement:
    data = json.loads(text)
    try:
        spec = BoardSpec(int(data["n"]), int(data["m"]))
        squares = [Square(str(f), int(r), int(c)) for f, r, c in data["squares"]]
        count = int(data["count"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed placement record: {exc}") from exc
    if len(set(squares)) != len(squares):
        raise ValueError("placement record lists a square twice")
    return Placement(spec, frozenset(squares), count, dict(data.get("meta", {})))


def write_placement(p: Placement, path: str | Path) -> None:
    Path(path).write_text(dumps_placement(p))


def read_placement(path: str | Path) -> Placement:
    return loads_placement(Path(path).read_text())


# --- net layout -----------------------------------------------------------
#
# Net rows are band rows (lat0 at the bottom); net columns put cap_left to the
# left of band column 0 and cap_right to the right of band column m-1.  Both
# caps hang off lat0, sharing their row-0 edge with it; cap column x sits on
# band row x.

def net_position(board: Board, sq: Square) -> tuple[int, int]:
    """(net row from the bottom, net column) of a square."""
    n, m = board.n, board.m
    if sq.face == CAP_LEFT:
        return sq.col, n - 1 - sq.row
    if sq.face == CAP_RIGHT:
        return sq.col, n + m + sq.row
    return LATERALS.index(sq.face) * n + sq.row, n + sq.col


def _glue_notes(board: Board) -> list[str]:
    n = board.n
    return [
        "glue: band rows wrap (lat3 top edge = lat0 bottom edge)",
        f"glue: cap row 0 edge = lat0 end column; cap col {n - 1} edge = lat1;"
        f" cap row {n - 1} edge = lat2; cap col 0 edge = lat3",
    ]


def render_text(board: Board, placement: Placement | None = None) -> str:
    n, m = board.n, board.m
    squares = placement.squares if placement is not None else frozenset()
    width = 2 * n + m
    grid = [[" "] * width for _ in range(4 * n)]
    for sq in board.squares:
        row, col = net_position(board, sq)
        if sq in squares:
            grid[row][col] = BISHOP
        else:
            grid[row][col] = ":" if sq.face in CAPS else "."
    lines = [f"{n}x{n}x{m} prism, {len(squares)} bishops"]
    for row in reversed(range(4 * n)):
        face = LATERALS[row // n]
        label = face if row % n == n - 1 else ""
        lines.append(f"{label:>5} |" + "".join(grid[row]).rstrip())
    lines.append(f"{'':>5}  " + "cap_left".ljust(n) + " " * m + "cap_right")
    lines.extend(_glue_notes(board))
    return "\n".join(lines) + "\n"


def render_svg(board: Board, placement: Placement | None = None, cell: int = 16) -> str:
    n, m = board.n, board.m
    squares = placement.squares if placement is not None else frozenset()
    margin = 3 * cell
    w = (2 * n + m) * cell + 2 * margin
    h = 4 * n * cell + 2 * margin
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}"'
        f' viewBox="0 0 {w} {h}">',
        f"<title>{n}x{n}x{m} prism, {len(squares)} bishops</title>",
        "<style>.cap{fill:#f3e6c8}.lat{fill:#ffffff}.sq{stroke:#888;stroke-width:0.5}"
        ".bishop{fill:#202020}.glue{font:10px sans-serif;fill:#555}</style>",
    ]

    def xy(sq: Square) -> tuple[int, int]:
        row, col = net_position(board, sq)
        return margin + col * cell, margin + (4 * n - 1 - row) * cell

    for sq in board.squares:
        x, y = xy(sq)
        kind = "cap" if sq.face in CAPS else "lat"
        out.append(f'<rect class="sq {kind}" x="{x}" y="{y}" width="{cell}" height="{cell}"/>')
    for sq in sorted(squares):
        x, y = xy(sq)
        out.append(
            f'<circle class="bishop" cx="{x + cell / 2}" cy="{y + cell / 2}" r="{cell * 0.35}">'
            f"<title>{escape(str(sq))}</title></circle>"
        )
    # glue labels along the free cap edges
    top = margin + 3 * n * cell - 4
    for name, x0 in (("cap_left", margin), ("cap_right", margin + (n + m) * cell)):
        out.append(f'<text class="glue" x="{x0}" y="{top}">{name}: top edge = lat1</text>')
        out.append(f'<text class="glue" x="{x0}" y="{h - 6}">{name}: outer edge = lat2, bottom = lat3</text>')
    for i, face in enumerate(LATERALS):
        y = margin + (4 * n - i * n) * cell - cell // 3
        out.append(f'<text class="glue" x="{margin + n * cell + 2}" y="{y}">{face}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_net(board: Board, placement: Placement | None, fmt: str) -> str:
    if fmt == "text":
        return render_text(board, placement)
    if fmt == "svg":
        return render_svg(board, placement)
    if fmt == "file":
        if placement is None:
            placement = Placement(board.spec, frozenset())
        return dumps_placement(placement)
    raise ValueError(f"unknown format {fmt!r}; choose from {', '.join(FORMATS)}")
