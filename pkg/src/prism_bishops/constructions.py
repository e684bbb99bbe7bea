"""Explicit optimal bishop placements, one procedure per parity class.

All placements are laid out relative to ``lat0`` as the chosen lateral face
and ``cap_left`` as the first cap.  Both caps glue their row 0 to ``lat0``.
Lines on the surface are followed with :func:`straight_line`, so "extending
onto the adjacent face" is literal straight continuation across the glued
edge.  Cells where two open diagonals cross are read off the atlas.

Three readings could not be taken verbatim and are fixed as follows:

* Constructions 3 and 4 put the pair on the second cap in the row nearest
  ``lat0`` when ``(k - 1) // 2`` is even and in the farthest row otherwise.
  Only that choice is independent for k = 3, 4 (mod 4).
* In Construction 5 the left/right extensions continue outward from the two
  crossing-cell bishops, not from the centre bishop.
* Runs "symmetric around the centre" of the pivotal row are contiguous.
"""

from __future__ import annotations

from .board import (
    CAP_LEFT,
    CAP_RIGHT,
    CAPS,
    Board,
    Square,
    straight_line,
    straight_step,
)
from .diagonals import DiagonalAtlas, enumerate_diagonals
from .formulas import theorem_value
from .solver import Placement, first_conflict, is_independent, max_placement

CHOSEN_FACE = "lat0"


class ConstructionFault(RuntimeError):
    """A construction produced an attacking pair; always an implementation bug."""


def _atlas(board: Board, atlas: DiagonalAtlas | None) -> DiagonalAtlas:
    return atlas if atlas is not None else enumerate_diagonals(board)


def _require(board: Board, k_odd: bool, n_even: bool, m_even: bool | None, name: str) -> None:
    s = board.spec
    ok = (s.k % 2 == 1) == k_odd and (s.n % 2 == 0) == n_even
    if m_even is not None:
        ok = ok and (s.m % 2 == 0) == m_even
    if not ok:
        raise ValueError(f"{name} does not apply to n={s.n}, m={s.m} (k={s.k}, r={s.r})")
    if s.n < 3:
        raise ValueError(f"{name} needs n >= 3")


def _finish(board: Board, atlas: DiagonalAtlas, cells: list[Square], number: int, **meta) -> Placement:
    if len(set(cells)) != len(cells):
        dup = sorted({c for c in cells if cells.count(c) > 1})
        raise ConstructionFault(f"construction {number} places two bishops on {dup[0]}")
    p = Placement(board.spec, frozenset(cells), meta={"construction": number, **meta})
    if not is_independent(board, atlas, p):
        d, sqs = first_conflict(atlas, p.squares)
        raise ConstructionFault(
            f"construction {number} on n={board.n}, m={board.m}: diagonal {d} holds "
            + ", ".join(map(str, sqs))
        )
    return p


def open_crossings(atlas: DiagonalAtlas, face: str) -> list[Square]:
    """Squares of ``face`` that lie on two open diagonals."""
    return [s for s in atlas.board.squares if s.face == face and len(atlas.on_open(s)) == 2]


def loop(board: Board, start: Square, edge: int) -> list[Square]:
    """The closed straight line through ``start`` leaving through ``edge``."""
    out = [start]
    sq, e = straight_step(board, start, edge)
    while sq != start:
        out.append(sq)
        sq, e = straight_step(board, sq, e)
    return out


def _nearest_crossings(atlas: DiagonalAtlas, line: list[Square]) -> tuple[int, int]:
    """Offsets back and forward from ``line[0]`` to the nearest open-diagonal crossings."""
    size = len(line)

    def hit(i: int) -> bool:
        return len(atlas.on_open(line[i % size])) == 2

    back = next(d for d in range(1, size) if hit(-d))
    fwd = next(d for d in range(1, size) if hit(d))
    return back, fwd


def _centred_run(length: int, count: int) -> list[int]:
    centre = (length - 1) / 2
    return sorted(sorted(range(length), key=lambda j: (abs(j - centre), j))[:count])


def _cap_middle_row(board: Board, cap: str, left_skip: int, n_left: int, n_right: int) -> list[Square]:
    # even n: start at column n/2 of row n/2; rightward is +col, leftward -col
    n = board.n
    right0 = Square(cap, n // 2, n // 2)
    left0 = Square(cap, n // 2, n // 2 - 1)
    right = [right0] + straight_line(board, right0, 1, n_right - 1)
    left = ([left0] + straight_line(board, left0, 3, left_skip + n_left))[left_skip:left_skip + n_left]
    return right + left


def construction_1(board: Board, atlas: DiagonalAtlas | None = None) -> Placement:
    """k odd, n and m even: 2n - r bishops along a cap's middle row."""
    _require(board, True, True, True, "construction 1")
    atlas = _atlas(board, atlas)
    n, r = board.n, board.spec.r
    cells = _cap_middle_row(board, CAP_LEFT, r, n - r, n)
    return _finish(board, atlas, cells, 1)


def construction_2(board: Board, atlas: DiagonalAtlas | None = None) -> Placement:
    """k even, n and m even: n + r bishops along a cap's middle row."""
    _require(board, False, True, True, "construction 2")
    atlas = _atlas(board, atlas)
    n, r = board.n, board.spec.r
    cells = _cap_middle_row(board, CAP_LEFT, 0, r, n)
    return _finish(board, atlas, cells, 2)


def _lateral_column_runs(board: Board, column: int, each: int) -> list[Square]:
    """``each`` cells above and below the centre of a ``lat0`` column, around the band."""
    n = board.n
    up0 = Square(CHOSEN_FACE, n // 2, column)
    down0 = Square(CHOSEN_FACE, n // 2 - 1, column)
    if each <= 0:
        return []
    return [up0] + straight_line(board, up0, 1, each - 1) + [down0] + straight_line(board, down0, 3, each - 1)


def _cap_pairs(atlas: DiagonalAtlas) -> dict[str, tuple[list[Square], list[Square]]]:
    """Per cap: (crossing pair nearest lat0, crossing pair farthest from lat0)."""
    out = {}
    for cap in CAPS:
        cells = open_crossings(atlas, cap)
        rows = sorted({s.row for s in cells})
        if len(cells) != 4 or len(rows) != 2:
            raise ConstructionFault(f"expected a 2x2 arrangement of open crossings on {cap}, got {cells}")
        near = sorted(s for s in cells if s.row == rows[0])
        far = sorted(s for s in cells if s.row == rows[1])
        out[cap] = (near, far)
    return out


def _second_cap_far(k: int) -> bool:
    return ((k - 1) // 2) % 2 == 1


def construction_3(board: Board, atlas: DiagonalAtlas | None = None) -> Placement:
    """k odd, n even, m odd: 2n + 3 - r bishops on a lateral column and both caps."""
    _require(board, True, True, False, "construction 3")
    atlas = _atlas(board, atlas)
    n, k, r = board.n, board.spec.k, board.spec.r
    each = (2 * n + 3 - r) // 2 - 2
    cells = _lateral_column_runs(board, (n + r + 1) // 2 - 1, each)
    pairs = _cap_pairs(atlas)
    far = _second_cap_far(k)
    cells += pairs[CAP_LEFT][0] + pairs[CAP_RIGHT][1 if far else 0]
    return _finish(board, atlas, cells, 3, second_cap_pair="far" if far else "near")


def construction_4(board: Board, atlas: DiagonalAtlas | None = None) -> Placement:
    """k even, n even, m odd: n + 3 + r bishops, with 2r - 2 extra on one cap."""
    _require(board, False, True, False, "construction 4")
    atlas = _atlas(board, atlas)
    n, k, r = board.n, board.spec.k, board.spec.r
    each = (n + 3 + r) // 2 - r - 1
    cells = _lateral_column_runs(board, (2 * n + r + 1) // 2 - 1, each)
    pairs = _cap_pairs(atlas)
    far = _second_cap_far(k)
    near_l, far_l = pairs[CAP_LEFT]
    cells += near_l + pairs[CAP_RIGHT][1 if far else 0]
    row = near_l[0].row
    between = [Square(CAP_LEFT, row, j) for j in range(near_l[0].col + 1, near_l[1].col)]
    mirrored = [Square(CAP_LEFT, far_l[0].row, s.col) for s in between]
    cells += between + mirrored
    return _finish(board, atlas, cells, 4, second_cap_pair="far" if far else "near")


def construction_5(board: Board, atlas: DiagonalAtlas | None = None) -> Placement:
    """k odd, n odd: 2n + 3 - r bishops (2n + 4 when r = 0) around the pivotal row."""
    _require(board, True, False, None, "construction 5")
    atlas = _atlas(board, atlas)
    n, m, r = board.n, board.m, board.spec.r
    h = (n - 1) // 2
    ext = n - r - 1 if r else n - 1

    centre = Square(CAP_LEFT, h, h)
    line = loop(board, centre, 0)  # the pivotal row: cap_left column h, then lat0 row h
    back, fwd = _nearest_crossings(atlas, line)
    size = len(line)
    cells = [centre, line[back], line[-fwd]]
    cells += [line[(back + i) % size] for i in range(1, ext + 1)]
    cells += [line[(-fwd - i) % size] for i in range(1, ext + 1)]
    if r:
        cells += [Square(CHOSEN_FACE, h, j) for j in _centred_run(m, r - 1)]

    centre2 = Square(CAP_RIGHT, h, h)
    perp = loop(board, centre2, 1)
    back2, fwd2 = _nearest_crossings(atlas, perp)
    cells += [centre2, perp[back2], perp[-fwd2]]
    return _finish(board, atlas, cells, 5, extensions_from="crossing pair")


def construction_6(board: Board, atlas: DiagonalAtlas | None = None) -> Placement:
    """k even, n odd: n + 3 + r bishops (n + 5 when r = 0)."""
    _require(board, False, False, None, "construction 6")
    atlas = _atlas(board, atlas)
    n, m, r = board.n, board.m, board.spec.r
    h = (n - 1) // 2
    run = n - r - 1 if r else n - 1
    cells = [Square(CHOSEN_FACE, h, j) for j in _centred_run(m, run)]
    for cap in CAPS:
        centre = Square(cap, h, h)
        line = loop(board, centre, 0)
        back, fwd = _nearest_crossings(atlas, line)
        cells += [centre, line[back], line[-fwd]]
        if cap == CAP_LEFT and r:
            cells += [line[i] for i in range(1, back)] + [line[-i] for i in range(1, fwd)]
    return _finish(board, atlas, cells, 6)


CONSTRUCTIONS = {
    1: construction_1,
    2: construction_2,
    3: construction_3,
    4: construction_4,
    5: construction_5,
    6: construction_6,
}


def which_construction(board: Board) -> int:
    s = board.spec
    k_odd = s.k % 2 == 1
    if s.n % 2:
        return 5 if k_odd else 6
    if s.m % 2 == 0:
        return 1 if k_odd else 2
    return 3 if k_odd else 4


def construct_placement(board: Board, atlas: DiagonalAtlas | None = None) -> Placement:
    atlas = _atlas(board, atlas)
    if board.spec.small_n:
        p = max_placement(board, atlas)
        p.meta.update(construction=0, small_n=True)
        return p
    number = which_construction(board)
    p = CONSTRUCTIONS[number](board, atlas)
    want = theorem_value(board.spec)
    if len(p) != want:
        raise ConstructionFault(f"construction {number} placed {len(p)} bishops, expected {want}")
    return p
