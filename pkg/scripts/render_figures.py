"""Draw the six constructions on the boards used as worked examples.

    python scripts/render_figures.py results/figures
"""

import sys
from pathlib import Path

from prism_bishops.board import make_board
from prism_bishops.constructions import construct_placement
from prism_bishops.render import render_svg, render_text, write_placement

BOARDS = [(6, 8), (6, 14), (6, 9), (6, 15), (5, 7), (5, 12)]


def main(outdir="results/figures"):
    out = Path(outdir)
    out.mkdir(parents=True, exist_ok=True)
    for n, m in BOARDS:
        board = make_board(n, m)
        p = construct_placement(board)
        stem = out / f"construction{p.meta['construction']}_{n}x{n}x{m}"
        stem.with_suffix(".svg").write_text(render_svg(board, p))
        stem.with_suffix(".txt").write_text(render_text(board, p))
        write_placement(p, stem.with_suffix(".json"))
        print(f"{stem.name}: {len(p)} bishops")


if __name__ == "__main__":
    main(*sys.argv[1:])
