"""Exact bishop independence via maximum matching on the diagonal multigraph.

Every square joins its two maximal diagonals, and bishops are mutually
non-attacking exactly when no diagonal is used twice, so an independent
placement is a matching of that multigraph.  A branch-and-bound search on the
square conflict graph serves as an independent oracle for small boards.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

import networkx as nx

from .board import Board, BoardSpec, Square, attacked
from .diagonals import DiagonalAtlas, StructuralError

log = logging.getLogger(__name__)

ORACLE_CAP = 60


class ConsistencyError(RuntimeError):
    """Two independent computations of the same quantity disagree."""


@dataclass
class Placement:
    spec: BoardSpec
    squares: frozenset[Square]
    claimed_size: int = -1
    meta: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        self.squares = frozenset(self.squares)
        if self.claimed_size < 0:
            self.claimed_size = len(self.squares)
        if len(self.squares) != self.claimed_size:
            raise ValueError(
                f"placement claims {self.claimed_size} bishops but holds {len(self.squares)}"
            )

    def __len__(self) -> int:
        return len(self.squares)

    def sorted(self) -> list[Square]:
        return sorted(self.squares)


@dataclass
class DiagonalMultigraph:
    nodes: list[int]
    links: list[tuple[int, int, Square]]

    @classmethod
    def from_atlas(cls, atlas: DiagonalAtlas) -> "DiagonalMultigraph":
        links = [(a, b, sq) for sq, (a, b) in sorted(atlas.incidence.items())]
        if any(a == b for a, b, _ in links):
            raise StructuralError("self-loop link: a diagonal crosses itself")
        return cls([d.id for d in atlas.diagonals], links)

    def simple_graph(self) -> nx.Graph:
        """Collapse parallel links, keeping the lexicographically first square."""
        g = nx.Graph()
        g.add_nodes_from(self.nodes)
        for a, b, sq in self.links:
            if not g.has_edge(a, b):
                g.add_edge(a, b, square=sq)
        return g


def independent_by_atlas(atlas: DiagonalAtlas, squares) -> bool:
    used: set[int] = set()
    for sq in squares:
        for d in atlas.incidence[sq]:
            if d in used:
                return False
            used.add(d)
    return True


def independent_by_rays(board: Board, squares) -> bool:
    squares = set(squares)
    return all(not (attacked(board, sq) & squares) for sq in squares)


def is_independent(board: Board, atlas: DiagonalAtlas, placement) -> bool:
    squares = placement.squares if isinstance(placement, Placement) else set(placement)
    for sq in squares:
        board.check(sq)
    a = independent_by_atlas(atlas, squares)
    b = independent_by_rays(board, squares)
    if a != b:
        raise ConsistencyError(f"atlas says {a}, move rays say {b} for {sorted(squares)}")
    return a


def first_conflict(atlas: DiagonalAtlas, squares) -> tuple[int, list[Square]] | None:
    """A diagonal holding two or more of the given squares, with those squares."""
    seen: dict[int, list[Square]] = {}
    for sq in sorted(squares):
        for d in atlas.incidence[sq]:
            seen.setdefault(d, []).append(sq)
    for d, sqs in sorted(seen.items()):
        if len(sqs) > 1:
            return d, sqs
    return None


def _matching(atlas: DiagonalAtlas) -> list[Square]:
    g = DiagonalMultigraph.from_atlas(atlas).simple_graph()
    mate = nx.max_weight_matching(g, maxcardinality=True)
    return sorted(g.edges[a, b]["square"] for a, b in mate)


def independence_number(board: Board, atlas: DiagonalAtlas) -> int:
    try:
        return len(_matching(atlas))
    except StructuralError:
        log.warning("diagonal self-crossing on %s; falling back to oracle", board.spec)
        return brute_force_oracle(board, atlas)


def max_placement(board: Board, atlas: DiagonalAtlas) -> Placement:
    squares = _matching(atlas)
    p = Placement(board.spec, frozenset(squares), meta={"source": "matching"})
    if not is_independent(board, atlas, p):
        raise ConsistencyError("matching witness is not independent")
    return p


def max_independent_set(conflict: list[int], cliques: list[tuple[int, int]] | None = None) -> int:
    """Branch-and-bound maximum independent set on bitmask adjacency rows.

    ``cliques`` optionally names, per vertex, the two cliques it belongs to;
    then a subproblem can hold at most half of its live cliques.
    """
    best = 0

    def bound(cand: int) -> int:
        count = bin(cand).count("1")
        if cliques is None:
            return count
        live = set()
        c = cand
        while c:
            low = c & -c
            live.update(cliques[low.bit_length() - 1])
            c ^= low
        return min(count, len(live) // 2)

    def search(cand: int, size: int) -> None:
        nonlocal best
        if cand == 0:
            best = max(best, size)
            return
        if size + bound(cand) <= best:
            return
        # branch on the candidate with the most live conflicts
        c, pick, deg = cand, -1, -1
        while c:
            low = c & -c
            i = low.bit_length() - 1
            d = bin(conflict[i] & cand).count("1")
            if d > deg:
                pick, deg = i, d
            c ^= low
        search(cand & ~conflict[pick] & ~(1 << pick), size + 1)
        search(cand & ~(1 << pick), size)

    search((1 << len(conflict)) - 1, 0)
    return best


def brute_force_oracle(board: Board, atlas: DiagonalAtlas, cap: int = ORACLE_CAP) -> int:
    """Exact optimum on the square conflict graph, independent of the matching.

    Conflicts come from walking move rays; the atlas only feeds the pruning
    bound (each diagonal is a clique holding at most one bishop).
    """
    squares = list(board.squares)
    if len(squares) > cap:
        raise ValueError(f"oracle limited to {cap} squares, board has {len(squares)}")
    index = {sq: i for i, sq in enumerate(squares)}
    conflict = [0] * len(squares)
    for sq, i in index.items():
        for other in attacked(board, sq):
            conflict[i] |= 1 << index[other]
    return max_independent_set(conflict, [atlas.incidence[sq] for sq in squares])
