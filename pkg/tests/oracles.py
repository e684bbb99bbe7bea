"""Reference computations that share no code path with the package internals."""

from itertools import combinations


def slot_components(board):
    """Count maximal diagonals by union-find over (square, axis) slots.

    Two slots are glued when their squares meet in exactly one grid point and
    that point lies at the ends of both slots' axes, with only four squares
    around it.  Components that touch a three-square point are open.
    """
    parent = {}

    def find(x):
        while parent.setdefault(x, x) != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    ends_at_vertex = set()
    for p, around in board.incidence.items():
        if len(around) == 3:
            for sq in around:
                ax = board.corners[sq].index(p) % 2
                ends_at_vertex.add((sq, ax))
            continue
        for a, b in combinations(around, 2):
            if len(set(board.corners[a]) & set(board.corners[b])) == 1:
                ax = board.corners[a].index(p) % 2
                bx = board.corners[b].index(p) % 2
                ra, rb = find((a, ax)), find((b, bx))
                parent[ra] = rb
    for sq in board.squares:
        for ax in (0, 1):
            find((sq, ax))
    roots = {find(s) for s in parent}
    open_roots = {find(s) for s in ends_at_vertex}
    return len(roots), len(open_roots)
