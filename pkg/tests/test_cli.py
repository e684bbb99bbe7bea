import json
import xml.etree.ElementTree as ET

import pytest
from hypothesis import given, strategies as st

from prism_bishops.board import Square, make_board
from prism_bishops.cli import main
from prism_bishops.constructions import construct_placement
from prism_bishops.render import (
    BISHOP,
    dumps_placement,
    loads_placement,
    net_position,
    read_placement,
    render_net,
    write_placement,
)
from prism_bishops.solver import Placement
from prism_bishops.sweep import run_verification_sweep, sweep_pairs, verify_board

from conftest import built

SVG = "{http://www.w3.org/2000/svg}"


def bishops_in_svg(doc):
    root = ET.fromstring(doc.encode())
    return [e for e in root.iter(f"{SVG}circle") if e.get("class") == "bishop"]


def grid_glyphs(doc):
    return sum(line.split("|", 1)[1].count(BISHOP) for line in doc.splitlines() if "|" in line)


def test_text_net_for_construction_1():
    board, atlas = built(6, 8)
    doc = render_net(board, construct_placement(board, atlas), "text")
    assert grid_glyphs(doc) == 10


def test_svg_net_for_construction_5():
    board, atlas = built(5, 7)
    doc = render_net(board, construct_placement(board, atlas), "svg")
    assert len(bishops_in_svg(doc)) == 11


@pytest.mark.parametrize("fmt", ["text", "svg"])
def test_empty_placement_renders_without_glyphs(fmt):
    board = make_board(4, 5)
    doc = render_net(board, Placement(board.spec, frozenset()), fmt)
    if fmt == "svg":
        assert bishops_in_svg(doc) == []
    else:
        assert grid_glyphs(doc) == 0


def test_unknown_format():
    board = make_board(3, 3)
    with pytest.raises(ValueError):
        render_net(board, None, "png")


def test_net_positions_are_distinct():
    board = make_board(4, 7)
    pos = [net_position(board, s) for s in board.squares]
    assert len(set(pos)) == len(pos)


@given(st.sampled_from([(3, 4), (4, 9), (5, 7)]), st.data())
def test_glyph_count_equals_placement_size(dims, data):
    board, _ = built(*dims)
    cells = data.draw(st.sets(st.sampled_from(board.squares), max_size=12))
    p = Placement(board.spec, frozenset(cells))
    assert grid_glyphs(render_net(board, p, "text")) == len(cells)
    assert len(bishops_in_svg(render_net(board, p, "svg"))) == len(cells)


@given(st.sampled_from([(3, 4), (6, 8)]), st.data())
def test_placement_record_round_trip(dims, data):
    board, _ = built(*dims)
    cells = data.draw(st.sets(st.sampled_from(board.squares), max_size=10))
    p = Placement(board.spec, frozenset(cells), meta={"construction": 1})
    q = loads_placement(dumps_placement(p))
    assert q.spec == p.spec and q.squares == p.squares and q.meta == p.meta


def test_placement_record_layout():
    p = Placement(make_board(3, 3).spec, frozenset({Square("lat1", 0, 2), Square("cap_left", 1, 1)}))
    data = json.loads(dumps_placement(p))
    assert data == {"n": 3, "m": 3, "count": 2, "squares": [["cap_left", 1, 1], ["lat1", 0, 2]]}


@pytest.mark.parametrize(
    "text",
    [
        '{"n": 3, "m": 3, "count": 2, "squares": [["lat0", 0, 0]]}',
        '{"n": 3, "count": 0, "squares": []}',
        '{"n": 3, "m": 3, "count": 2, "squares": [["lat0", 0, 0], ["lat0", 0, 0]]}',
    ],
)
def test_malformed_records(text):
    with pytest.raises(ValueError):
        loads_placement(text)


def test_file_round_trip(tmp_path):
    board, atlas = built(6, 14)
    p = construct_placement(board, atlas)
    path = tmp_path / "p.json"
    write_placement(p, path)
    assert read_placement(path).squares == p.squares


# --- sweep ----------------------------------------------------------------

def test_sweep_rows_pass():
    report = run_verification_sweep(sweep_pairs(3, 4))
    assert report.ok
    assert [(r.n, r.m) for r in report.rows] == sweep_pairs(3, 4)


def test_lemma1_row_check():
    row = verify_board(5, 7, periodicity=True)
    assert row.periodic_ok and row.passed


def test_empty_sweep_succeeds():
    report = run_verification_sweep([])
    assert report.ok and report.rows == []


def test_small_n_rows_are_report_only():
    report = run_verification_sweep(sweep_pairs(2, 2, 4))
    assert report.summary()["report_only"] == 3
    assert report.summary()["checked"] == 0


def test_report_is_identical_with_and_without_workers():
    pairs = sweep_pairs(3, 4, 9)
    a = run_verification_sweep(pairs, jobs=1).to_text()
    b = run_verification_sweep(pairs, jobs=3).to_text()
    assert a == b


def test_failed_row_counts_against_the_sweep():
    row = verify_board(4, 6)
    row.solver += 1
    assert not row.passed and "solver != theorem" in row.failures()


# --- command line ---------------------------------------------------------

def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_cli_board_info(capsys):
    code, out = run(capsys, "board", "info", "--n", "6", "--m", "8")
    assert code == 0
    assert "squares: 264" in out and "cuboid vertices: 8" in out and "euler characteristic: 2" in out


def test_cli_formula(capsys):
    code, out = run(capsys, "formula", "--n", "6", "--m", "8")
    assert code == 0 and "independence number: 10" in out and "maximal diagonals: 26" in out


def test_cli_diagonals_list(capsys):
    code, out = run(capsys, "diagonals", "--n", "5", "--m", "5", "--list")
    assert code == 0
    assert out.splitlines()[0].startswith("diagonals: 28 (open 12, closed 16)")
    assert len(out.splitlines()) == 29


def test_cli_solve_with_oracle(capsys):
    code, out = run(capsys, "solve", "--n", "2", "--m", "3", "--oracle")
    assert code == 0 and "independence number: 6" in out and "oracle: 6" in out and "small-n" in out


def test_cli_construct_svg(capsys, tmp_path):
    out_file = tmp_path / "net.svg"
    code, _ = run(capsys, "construct", "--n", "5", "--m", "7", "--emit", "svg", "--out", str(out_file))
    assert code == 0
    assert len(bishops_in_svg(out_file.read_text())) == 11


def test_cli_construct_then_check(capsys, tmp_path):
    rec = tmp_path / "p.json"
    code, _ = run(capsys, "construct", "--n", "6", "--m", "9", "--emit", "file", "--out", str(rec))
    assert code == 0
    code, out = run(capsys, "check", str(rec))
    assert code == 0 and "12 bishops" in out and "independent" in out


def test_cli_check_reports_attacks(capsys, tmp_path):
    board, atlas = built(4, 4)
    d = atlas[atlas.open_ids[0]]
    rec = tmp_path / "bad.json"
    write_placement(Placement(board.spec, frozenset(d.squares[:2])), rec)
    code, out = run(capsys, "check", str(rec))
    assert code == 1 and "attacking" in out


def test_cli_verify(capsys):
    code, out = run(capsys, "verify", "--n-min", "3", "--n-max", "3", "--m-max", "8", "--periodicity")
    assert code == 0
    assert out.splitlines()[-1] == "summary: 6/6 passed, 0 failed, 0 report-only"


def test_cli_verify_json(capsys):
    code, out = run(capsys, "verify", "--n-min", "3", "--n-max", "3", "--m-max", "4", "--json")
    data = json.loads(out)
    assert code == 0 and data["summary"]["passed"] == 2


def test_cli_empty_range(capsys):
    code, out = run(capsys, "verify", "--n-min", "5", "--n-max", "4")
    assert code == 0 and "0/0 passed" in out


def test_cli_dimension_error(capsys):
    assert main(["formula", "--n", "5", "--m", "3"]) == 2
    assert "error" in capsys.readouterr().err


def test_cli_usage_error():
    with pytest.raises(SystemExit) as exc:
        main(["construct", "--n", "5", "--m", "7", "--emit", "png"])
    assert exc.value.code == 2
