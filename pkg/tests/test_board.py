import pytest
from hypothesis import given, strategies as st

from prism_bishops.board import (
    CAPS,
    FACES,
    BoardSpec,
    DiagStep,
    DimensionError,
    Square,
    attacked,
    diagonal_step,
    make_board,
    neighbors,
    straight_line,
)

from conftest import built


@pytest.mark.parametrize("n, m, squares", [(6, 8, 264), (5, 5, 150), (2, 2, 24), (3, 11, 150)])
def test_square_count(n, m, squares):
    board = make_board(n, m)
    assert len(board.squares) == squares == 2 * n * n + 4 * n * m


def test_six_faces_with_expected_shapes():
    board = make_board(4, 7)
    assert {s.face for s in board.squares} == set(FACES)
    for face in FACES:
        cells = [s for s in board.squares if s.face == face]
        assert len(cells) == (16 if face in CAPS else 28)


def test_eight_trivalent_vertices():
    board = make_board(6, 8)
    assert len(board.cuboid_vertices()) == 8
    assert {len(v.incident_squares) for v in board.vertices()} == {3, 4}


def test_every_square_of_2x2x2_touches_a_cuboid_vertex():
    board = make_board(2, 2)
    corner = {s for v in board.cuboid_vertices() for s in board.incidence[v]}
    assert corner == set(board.squares)


@pytest.mark.parametrize("n, m", [(1, 3), (4, 3), (0, 0)])
def test_rejects_bad_dimensions(n, m):
    with pytest.raises(DimensionError):
        make_board(n, m)


@given(st.integers(2, 12), st.integers(0, 40))
def test_k_r_decomposition(n, extra):
    spec = BoardSpec(n, n + extra)
    assert spec.m == spec.k * spec.n + spec.r
    assert spec.k >= 1 and 0 <= spec.r < n


@pytest.mark.parametrize("n, m", [(2, 2), (2, 5), (3, 3), (4, 9), (6, 8)])
def test_euler_characteristic(n, m):
    assert make_board(n, m).euler_characteristic() == 2


def test_interior_lateral_square_has_eight_neighbours():
    board = make_board(6, 8)
    edge, diag = neighbors(board, Square("lat1", 2, 4))
    assert len(edge) == 4 and len(diag) == 4
    assert diag == {Square("lat1", 1, 3), Square("lat1", 1, 5), Square("lat1", 3, 3), Square("lat1", 3, 5)}


def test_corner_square_has_seven_neighbours():
    board = make_board(6, 8)
    edge, diag = neighbors(board, Square("cap_left", 0, 0))
    assert (len(edge), len(diag)) == (4, 3)


@pytest.mark.parametrize("n, m", [(3, 3), (3, 7), (4, 4), (5, 12), (6, 8)])
def test_exactly_24_squares_with_seven_neighbours(n, m):
    board = make_board(n, m)
    totals = [sum(map(len, neighbors(board, s))) for s in board.squares]
    assert totals.count(7) == 24
    assert totals.count(8) == len(totals) - 24


def test_2x2x2_every_square_has_seven_neighbours():
    board = make_board(2, 2)
    for sq in board.squares:
        edge, diag = neighbors(board, sq)
        assert len(edge) == 4 and len(diag) == 3


def test_neighbour_relation_matches_shared_points():
    board = make_board(3, 5)
    for sq in board.squares:
        edge, diag = neighbors(board, sq)
        for other in board.squares:
            shared = len(set(board.corners[sq]) & set(board.corners[other]))
            if other != sq:
                assert (other in edge) == (shared == 2)
                assert (other in diag) == (shared == 1)


def test_flat_step_keeps_orientation():
    board = make_board(6, 8)
    step = DiagStep(Square("lat1", 2, 4), 0)
    nxt = diagonal_step(board, step)
    assert nxt == DiagStep(Square("lat1", 3, 5), 0)


def test_step_into_cuboid_vertex_terminates():
    board = make_board(6, 8)
    # corner 0 of cap_left[0,0] is the grid point (0, 0, 0)
    assert diagonal_step(board, DiagStep(Square("cap_left", 0, 0), 2)) is None
    assert diagonal_step(board, DiagStep(Square("cap_left", 0, 0), 0)) is not None


def test_step_across_cap_edge_lands_on_cap():
    board = make_board(6, 8)
    # lat0 row 2, column 0, leaving through its z = 0 edge towards cap_left
    sq = Square("lat0", 2, 0)
    entries = [c for c in range(4) if board.corners[sq][(c + 2) % 4][2] == 0]
    landed = {diagonal_step(board, DiagStep(sq, c)).square.face for c in entries}
    assert landed == {"cap_left"}


boards = st.sampled_from([(2, 2), (2, 3), (3, 4), (4, 6), (5, 7), (6, 8)])


@given(boards, st.data())
def test_step_is_reversible(dims, data):
    board, _ = built(*dims)
    sq = data.draw(st.sampled_from(board.squares))
    entry = data.draw(st.integers(0, 3))
    nxt = diagonal_step(board, DiagStep(sq, entry))
    if nxt is None:
        assert len(board.incidence[board.corners[sq][(entry + 2) % 4]]) == 3
        return
    back = diagonal_step(board, DiagStep(nxt.square, (nxt.entry_corner + 2) % 4))
    assert back == DiagStep(sq, (entry + 2) % 4)


@given(boards, st.data())
def test_attack_relation_is_symmetric(dims, data):
    board, _ = built(*dims)
    a = data.draw(st.sampled_from(board.squares))
    for b in attacked(board, a):
        assert a in attacked(board, b)


def test_straight_line_around_band_returns_home():
    board = make_board(3, 4)
    start = Square("lat0", 1, 2)
    line = straight_line(board, start, 1, 12)
    assert line[-1] == start
    assert {s.face for s in line} == {"lat0", "lat1", "lat2", "lat3"}


def test_straight_line_through_caps_has_length_2n_plus_2m():
    board = make_board(3, 5)
    start = Square("cap_left", 1, 1)
    line = straight_line(board, start, 0, 2 * 3 + 2 * 5)
    assert line[-1] == start
    assert len(set(line)) == 16
