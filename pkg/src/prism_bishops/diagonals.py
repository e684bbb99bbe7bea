"""Maximal diagonals of the prism surface, cycle sets and the odd/even split."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .board import (
    CAP_LEFT,
    CAP_RIGHT,
    Board,
    DiagStep,
    Square,
    diagonal_step,
)


class StructuralError(RuntimeError):
    """The traced geometry violates an invariant the analysis relies on."""


Slot = tuple[Square, int]  # (square, axis); axis 0 joins corners 0-2, axis 1 joins 1-3


@dataclass(frozen=True)
class MaximalDiagonal:
    id: int
    kind: str  # "open" | "closed"
    squares: tuple[Square, ...]
    axes: tuple[int, ...]

    @property
    def is_open(self) -> bool:
        return self.kind == "open"

    @property
    def endpoints(self) -> Optional[tuple[Square, Square]]:
        if not self.is_open:
            return None
        return (self.squares[0], self.squares[-1])

    def __len__(self) -> int:
        return len(self.squares)


@dataclass(frozen=True)
class BoundedDiagonal:
    face: str
    squares: tuple[Square, ...]


@dataclass
class DiagonalAtlas:
    board: Board
    diagonals: list[MaximalDiagonal]
    incidence: dict[Square, tuple[int, int]]

    @property
    def open_count(self) -> int:
        return sum(d.is_open for d in self.diagonals)

    @property
    def closed_count(self) -> int:
        return len(self.diagonals) - self.open_count

    @property
    def open_ids(self) -> list[int]:
        return [d.id for d in self.diagonals if d.is_open]

    @property
    def closed_ids(self) -> list[int]:
        return [d.id for d in self.diagonals if not d.is_open]

    def __getitem__(self, i: int) -> MaximalDiagonal:
        return self.diagonals[i]

    def __len__(self) -> int:
        return len(self.diagonals)

    def on_open(self, square: Square) -> list[int]:
        """Ids of open diagonals through ``square``."""
        return [i for i in self.incidence[square] if self.diagonals[i].is_open]


@dataclass
class CycleSet:
    kind: str  # "first" | "second"
    members: list[int]
    profile: tuple[int, int] = (0, 0)
    P: list[int] = field(default_factory=list)
    Q: list[int] = field(default_factory=list)

    def __post_init__(self) -> None:
        self.P = self.members[0::2]
        self.Q = self.members[1::2]


def _walk(board: Board, start: DiagStep) -> tuple[list[DiagStep], bool]:
    """Steps after ``start`` until a cuboid vertex (False) or back at ``start`` (True)."""
    out = []
    step = diagonal_step(board, start)
    while step is not None:
        if step.square == start.square:
            if step.entry_corner % 2 != start.entry_corner % 2:
                raise StructuralError(f"diagonal crosses itself at {start.square}")
            if step.entry_corner != start.entry_corner:
                raise StructuralError(f"diagonal reverses through {start.square}")
            return out, True
        out.append(step)
        step = diagonal_step(board, step)
    return out, False


def trace(board: Board, square: Square, axis: int) -> tuple[list[DiagStep], bool]:
    """Full ordered trace of the maximal diagonal through a slot, and whether it closes."""
    start = DiagStep(square, axis)
    fwd, closed = _walk(board, start)
    if closed:
        return [start] + fwd, True
    back, _ = _walk(board, DiagStep(square, axis + 2))
    # backwards steps enter through the opposite corner; flip them to the forward sense
    back = [DiagStep(s.square, (s.entry_corner + 2) % 4) for s in reversed(back)]
    return back + [start] + fwd, False


def _canonical(steps: list[DiagStep], closed: bool) -> list[DiagStep]:
    if not closed:
        return steps if steps[0].square <= steps[-1].square else _reverse(steps)
    i = min(range(len(steps)), key=lambda j: steps[j].square)
    rot = steps[i:] + steps[:i]
    rev = _reverse(rot)
    rev = rev[-1:] + rev[:-1]
    return rot if rot[1].square <= rev[1].square else rev


def _reverse(steps: list[DiagStep]) -> list[DiagStep]:
    return [DiagStep(s.square, (s.entry_corner + 2) % 4) for s in reversed(steps)]


def enumerate_diagonals(board: Board) -> DiagonalAtlas:
    owner: dict[Slot, int] = {}
    found: list[tuple[Slot, list[DiagStep], bool]] = []

    def absorb(square: Square, axis: int) -> None:
        if (square, axis) in owner:
            return
        steps, closed = trace(board, square, axis)
        slots = [(s.square, s.entry_corner % 2) for s in steps]
        if len(set(slots)) != len(slots):
            raise StructuralError(f"slot revisited while tracing from {square}")
        squares = [s.square for s in steps]
        if len(set(squares)) != len(squares):
            raise StructuralError(f"diagonal through {square} crosses itself")
        idx = len(found)
        for sl in slots:
            if sl in owner:
                raise StructuralError(f"slot {sl} claimed by two diagonals")
            owner[sl] = idx
        found.append((min(slots), _canonical(steps, closed), closed))

    # open diagonals: the axis through the cuboid vertex at each corner square
    for v in board.cuboid_vertices():
        for sq in board.incidence[v]:
            absorb(sq, board.corners[sq].index(v) % 2)
    for sq in board.squares:
        for axis in (0, 1):
            absorb(sq, axis)

    order = sorted(range(len(found)), key=lambda i: found[i][0])
    remap = {old: new for new, old in enumerate(order)}
    diagonals = []
    for new, old in enumerate(order):
        _, steps, closed = found[old]
        diagonals.append(
            MaximalDiagonal(
                new,
                "closed" if closed else "open",
                tuple(s.square for s in steps),
                tuple(s.entry_corner % 2 for s in steps),
            )
        )
    incidence = {
        sq: tuple(sorted(remap[owner[(sq, a)]] for a in (0, 1))) for sq in board.squares
    }
    for sq, ids in incidence.items():
        if ids[0] == ids[1]:
            raise StructuralError(f"{sq} lies twice on diagonal {ids[0]}")
    return DiagonalAtlas(board, diagonals, incidence)


def bounded_diagonals(diagonal: MaximalDiagonal) -> list[BoundedDiagonal]:
    """Split a maximal diagonal into its maximal single-face runs.

    For a closed diagonal the split is cyclic, so a run straddling the start of
    the trace is returned as one piece.
    """
    sq = list(diagonal.squares)
    if not diagonal.is_open and len({s.face for s in sq}) > 1:
        i = next(j for j in range(len(sq)) if sq[j].face != sq[j - 1].face)
        sq = sq[i:] + sq[:i]
    runs: list[list[Square]] = []
    for s in sq:
        if runs and runs[-1][-1].face == s.face:
            runs[-1].append(s)
        else:
            runs.append([s])
    return [BoundedDiagonal(r[0].face, tuple(r)) for r in runs]


def cap_runs(diagonal: MaximalDiagonal, face: str) -> list[BoundedDiagonal]:
    return [b for b in bounded_diagonals(diagonal) if b.face == face]


def face_visit_profile(atlas: DiagonalAtlas, diagonal_id: int) -> tuple[int, int]:
    d = atlas[diagonal_id]
    if d.is_open:
        raise ValueError(f"diagonal {diagonal_id} is open; profiles are defined for closed diagonals")
    return (len(cap_runs(d, CAP_LEFT)), len(cap_runs(d, CAP_RIGHT)))


def upper_bound_from_atlas(atlas: DiagonalAtlas) -> int:
    """Each bishop uses up two diagonals, so at most half of them can be occupied."""
    for sq in atlas.board.squares:
        ids = atlas.incidence.get(sq)
        if ids is None or len(set(ids)) != 2:
            raise StructuralError(f"{sq} is not on exactly two diagonals")
    return len(atlas) // 2


# --- cycle sets -----------------------------------------------------------

def _corner_family(n: int, run: BoundedDiagonal) -> tuple[tuple[int, int], int]:
    """Cap corner a bounded diagonal cuts off, and its distance from that corner.

    A non-major bounded diagonal on an n x n cap joins two adjacent edges and
    separates exactly one cap corner.  Distance 1 is the single corner square.
    """
    cells = [(s.row, s.col) for s in run.squares]
    rows = {r for r, _ in cells}
    cols = {c for _, c in cells}
    length = len(cells)
    corner_r = 0 if 0 in rows else n - 1
    corner_c = 0 if 0 in cols else n - 1
    return (corner_r, corner_c), length


def _cap_passages(atlas: DiagonalAtlas, diag: MaximalDiagonal) -> list[tuple[tuple[int, int], int]]:
    n = atlas.board.n
    return [_corner_family(n, run) for run in cap_runs(diag, CAP_LEFT)]


def _open_distance(atlas: DiagonalAtlas) -> dict[tuple[int, int], int]:
    """Per CapLeft corner, distance of the open diagonal (if any) passing through it."""
    n = atlas.board.n
    out: dict[tuple[int, int], int] = {}
    for i in atlas.open_ids:
        for run in cap_runs(atlas[i], CAP_LEFT):
            if len(run.squares) < n:
                fam, dist = _corner_family(n, run)
                out[fam] = dist
    return out


def cycle_sets(atlas: DiagonalAtlas) -> list[CycleSet]:
    """Partition closed diagonals into numbered cycle sets.

    Every passage of a closed diagonal over CapLeft cuts off one cap corner at
    some distance.  Within each corner the passages split into those nearer the
    corner than the open diagonal crossing there, and those farther away.  A
    cycle set is the group of closed diagonals sharing the same collection of
    (corner, side) passages; members are numbered by distance within the
    first such corner.
    """
    board = atlas.board
    n, k, r = board.n, board.spec.k, board.spec.r
    opened = _open_distance(atlas)
    groups: dict[tuple, list[tuple[int, int]]] = {}
    for i in atlas.closed_ids:
        passages = sorted(_cap_passages(atlas, atlas[i]))
        if not passages:
            raise StructuralError(f"closed diagonal {i} never crosses {CAP_LEFT}")
        key = tuple(sorted((fam, dist < opened.get(fam, n)) for fam, dist in passages))
        first_fam = key[0][0]
        pos = min(d for f, d in passages if f == first_fam)
        groups.setdefault(key, []).append((pos, i))

    sets = []
    for key in sorted(groups):
        members = [i for _, i in sorted(groups[key])]
        profile = face_visit_profile(atlas, members[0])
        if any(face_visit_profile(atlas, i) != profile for i in members):
            raise StructuralError(f"cycle set {key} mixes visit profiles")
        # first kind: the (n - 1 - r)-sized family, crossing each cap once when k is odd
        once = profile == (1, 1)
        kind = "first" if once == (k % 2 == 1) else "second"
        sets.append(CycleSet(kind, members, profile))

    first = [s for s in sets if s.kind == "first"]
    second = [s for s in sets if s.kind == "second"]
    n_first, n_second = (4, 2) if k % 2 == 1 else (2, 4)
    want_first = n - 1 - r if r else n - 1
    ok = len(first) == (n_first if want_first > 0 else 0) and all(
        len(s.members) == want_first for s in first
    )
    if r:
        ok = ok and len(second) == (n_second if r > 1 else 0)
        ok = ok and all(len(s.members) == r - 1 for s in second)
    else:
        ok = ok and not second
    if not ok:
        shape = sorted((s.kind, len(s.members), s.profile) for s in sets)
        raise StructuralError(f"unexpected cycle-set structure for n={n}, m={board.m}: {shape}")
    sets.sort(key=lambda s: (s.kind != "first", s.members))
    return sets


def p_members(sets: list[CycleSet]) -> set[int]:
    return {i for s in sets for i in s.P}


def p_coverage_check(atlas: DiagonalAtlas, sets: list[CycleSet]) -> bool:
    """Whether every square lies on at least one odd-numbered cycle-set member."""
    spec = atlas.board.spec
    if spec.n % 2 or spec.r % 2:
        raise ValueError(f"coverage argument needs n and r even (n={spec.n}, r={spec.r})")
    P = p_members(sets)
    return all(any(i in P for i in ids) for ids in atlas.incidence.values())


def q_avoids_open(atlas: DiagonalAtlas, sets: list[CycleSet]) -> bool:
    """Even-numbered members never share a square with an open diagonal."""
    Q = {i for s in sets for i in s.Q}
    opened = set(atlas.open_ids)
    for a, b in atlas.incidence.values():
        if (a in Q and b in opened) or (b in Q and a in opened):
            return False
    return True


def q_meets_only_p(atlas: DiagonalAtlas, sets: list[CycleSet]) -> bool:
    """Even-numbered members only ever cross odd-numbered members.

    Sets whose diagonals pass each cap twice also cross their own odd members,
    so the check is not restricted to other sets.
    """
    P = p_members(sets)
    Q = {i for s in sets for i in s.Q}
    for a, b in atlas.incidence.values():
        if (a in Q and b not in P) or (b in Q and a not in P):
            return False
    return True


def atlas_listing(atlas: DiagonalAtlas) -> str:
    lines = []
    for d in atlas.diagonals:
        prof = "-" if d.is_open else "%d,%d" % face_visit_profile(atlas, d.id)
        lines.append(f"{d.id}\t{d.kind}\t{len(d)}\t{prof}")
    return "\n".join(lines)

