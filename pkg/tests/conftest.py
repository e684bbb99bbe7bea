from functools import lru_cache

import hypothesis

from prism_bishops.board import make_board
from prism_bishops.diagonals import enumerate_diagonals

hypothesis.settings.register_profile("default", max_examples=60, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=10, deadline=None)
hypothesis.settings.load_profile("default")


@lru_cache(maxsize=None)
def built(n, m):
    board = make_board(n, m)
    return board, enumerate_diagonals(board)


def sweep_boards(n_lo=3, n_hi=6):
    return [(n, m) for n in range(n_lo, n_hi + 1) for m in range(n, 5 * n + 1)]


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
