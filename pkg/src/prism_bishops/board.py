"""Surface of the n x n x m square prism as an identified grid.

The prism occupies ``[0, n] x [0, n] x [0, m]``.  Every unit square of the
surface is addressed by ``(face, row, col)`` and every grid point is
canonicalised to its integer 3D coordinate, so edge identification falls out
of the embedding instead of a hand-maintained glue table.

Net convention: the four lateral faces form one band of ``4n`` rows (cyclic)
by ``m`` columns.  Band row ``t`` runs along the boundary of the square
cross-section; band column ``c`` is the slab ``z in [c, c+1]``.  ``cap_left``
sits at ``z = 0`` (glued to band column 0) and ``cap_right`` at ``z = m``
(glued to band column ``m - 1``).  On a cap, ``row`` is ``y`` and ``col`` is
``x``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Optional

CAP_LEFT = "cap_left"
CAP_RIGHT = "cap_right"
LATERALS = ("lat0", "lat1", "lat2", "lat3")
FACES = (CAP_LEFT, CAP_RIGHT) + LATERALS
CAPS = (CAP_LEFT, CAP_RIGHT)

Point = tuple[int, int, int]


class DimensionError(ValueError):
    """Raised for prism dimensions outside ``2 <= n <= m``."""


class Square(NamedTuple):
    face: str
    row: int
    col: int

    def __str__(self) -> str:
        return f"{self.face}[{self.row},{self.col}]"


class Vertex(NamedTuple):
    id: Point
    incident_squares: tuple[Square, ...]


class DiagStep(NamedTuple):
    """A square together with the corner (0..3) a diagonal entered through.

    Corners are numbered cyclically, so the exit corner is ``entry + 2 mod 4``.
    """

    square: Square
    entry_corner: int

    @property
    def exit_corner(self) -> int:
        return (self.entry_corner + 2) % 4


@dataclass(frozen=True)
class BoardSpec:
    n: int
    m: int

    def __post_init__(self) -> None:
        if self.n < 2:
            raise DimensionError(f"n must be at least 2, got n={self.n}")
        if self.m < self.n:
            raise DimensionError(f"m must be at least n, got n={self.n}, m={self.m}")

    @property
    def k(self) -> int:
        return self.m // self.n

    @property
    def r(self) -> int:
        return self.m % self.n

    @property
    def small_n(self) -> bool:
        return self.n == 2


def perimeter_point(n: int, t: int) -> tuple[int, int]:
    """Point at arc length ``t`` (mod 4n) around the cross-section boundary."""
    t %= 4 * n
    if t <= n:
        return (t, 0)
    if t <= 2 * n:
        return (n, t - n)
    if t <= 3 * n:
        return (3 * n - t, n)
    return (0, 4 * n - t)


def band_row(square: Square, n: int) -> int:
    """Row index of a lateral square within the cyclic band."""
    return LATERALS.index(square.face) * n + square.row


def band_square(n: int, t: int, col: int) -> Square:
    """Lateral square at cyclic band row ``t`` and column ``col``."""
    t %= 4 * n
    return Square(LATERALS[t // n], t % n, col)


@dataclass(eq=False)
class Board:
    """Immutable identified grid; build with :func:`make_board`."""

    spec: BoardSpec
    squares: tuple[Square, ...]
    corners: dict[Square, tuple[Point, Point, Point, Point]]
    incidence: dict[Point, tuple[Square, ...]]
    _rays: dict = field(default_factory=dict, repr=False)

    @property
    def n(self) -> int:
        return self.spec.n

    @property
    def m(self) -> int:
        return self.spec.m

    def __contains__(self, square: object) -> bool:
        return square in self.corners

    def face_shape(self, face: str) -> tuple[int, int]:
        if face in CAPS:
            return (self.n, self.n)
        return (self.n, self.m)

    def vertices(self) -> list[Vertex]:
        return [Vertex(p, sq) for p, sq in sorted(self.incidence.items())]

    def cuboid_vertices(self) -> list[Point]:
        return sorted(p for p, sq in self.incidence.items() if len(sq) == 3)

    def corner_squares(self) -> list[Square]:
        """The 24 squares touching a cuboid vertex."""
        out = {s for p in self.cuboid_vertices() for s in self.incidence[p]}
        return sorted(out)

    def edges(self) -> set[frozenset]:
        out = set()
        for c in self.corners.values():
            for i in range(4):
                out.add(frozenset((c[i], c[(i + 1) % 4])))
        return out

    def euler_characteristic(self) -> int:
        return len(self.incidence) - len(self.edges()) + len(self.squares)

    def check(self, square: Square) -> None:
        if square not in self.corners:
            raise KeyError(f"{square} is not a square of the {self.n}x{self.n}x{self.m} board")


def _square_corners(spec: BoardSpec, sq: Square) -> tuple[Point, Point, Point, Point]:
    n, m = spec.n, spec.m
    i, j = sq.row, sq.col
    if sq.face in CAPS:
        z = 0 if sq.face == CAP_LEFT else m
        return ((j, i, z), (j + 1, i, z), (j + 1, i + 1, z), (j, i + 1, z))
    t = band_row(sq, n)
    a, b = perimeter_point(n, t), perimeter_point(n, t + 1)
    return ((*a, j), (*b, j), (*b, j + 1), (*a, j + 1))


def make_board(n: int, m: int) -> Board:
    spec = BoardSpec(n, m)
    squares = []
    for face in FACES:
        cols = n if face in CAPS else m
        squares.extend(Square(face, i, j) for i in range(n) for j in range(cols))
    squares.sort()
    corners = {sq: _square_corners(spec, sq) for sq in squares}
    incidence: dict[Point, list[Square]] = {}
    for sq, cs in corners.items():
        for p in cs:
            incidence.setdefault(p, []).append(sq)
    return Board(spec, tuple(squares), corners, {p: tuple(v) for p, v in incidence.items()})


def neighbors(board: Board, square: Square) -> tuple[set[Square], set[Square]]:
    """Edge neighbours (share 2 grid points) and diagonal neighbours (share 1)."""
    board.check(square)
    mine = set(board.corners[square])
    shared: dict[Square, int] = {}
    for p in mine:
        for other in board.incidence[p]:
            if other != square:
                shared[other] = shared.get(other, 0) + 1
    edge = {s for s, c in shared.items() if c == 2}
    diag = {s for s, c in shared.items() if c == 1}
    return edge, diag


def diagonal_step(board: Board, step: DiagStep) -> Optional[DiagStep]:
    """Advance a diagonal one square; ``None`` when it runs into a cuboid vertex."""
    cs = board.corners[step.square]
    v = cs[step.exit_corner]
    around = board.incidence[v]
    if len(around) != 4:
        return None
    mine = set(cs)
    for other in around:
        if other == step.square:
            continue
        oc = board.corners[other]
        if len(mine.intersection(oc)) == 1:
            return DiagStep(other, oc.index(v))
    raise AssertionError(f"no diagonal continuation through {v}")  # pragma: no cover


def ray(board: Board, square: Square, corner: int) -> list[Square]:
    """Squares a bishop on ``square`` reaches moving out through ``corner``."""
    key = (square, corner)
    if key not in board._rays:
        out = []
        step = diagonal_step(board, DiagStep(square, (corner + 2) % 4))
        while step is not None and step.square != square:
            out.append(step.square)
            step = diagonal_step(board, step)
        board._rays[key] = tuple(out)
    return list(board._rays[key])


def attacked(board: Board, square: Square) -> set[Square]:
    """All squares covered by a bishop on ``square`` (itself excluded)."""
    out: set[Square] = set()
    for c in range(4):
        out.update(ray(board, square, c))
    out.discard(square)
    return out


def straight_step(board: Board, square: Square, edge: int) -> tuple[Square, int]:
    """Cross edge ``edge`` (corners ``edge``, ``edge + 1``) of ``square``.

    Returns the square on the other side and the index of the edge that
    continues the same straight line out of it.
    """
    cs = board.corners[square]
    a, b = cs[edge], cs[(edge + 1) % 4]
    for other in board.incidence[a]:
        if other != square and b in board.corners[other]:
            oc = board.corners[other]
            ia, ib = oc.index(a), oc.index(b)
            entry = ia if (ia + 1) % 4 == ib else ib
            return other, (entry + 2) % 4
    raise AssertionError(f"edge {edge} of {square} is unglued")  # pragma: no cover


def straight_line(board: Board, square: Square, edge: int, count: int) -> list[Square]:
    """``count`` squares continuing straight from ``square`` through ``edge``."""
    out = []
    for _ in range(count):
        square, edge = straight_step(board, square, edge)
        out.append(square)
    return out
