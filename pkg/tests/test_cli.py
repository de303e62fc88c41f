import csv
import io
import json

import pytest

from mccolor import exact_mcc
from mccolor.cli import EXIT_BUDGET, EXIT_INPUT, EXIT_OK, EXIT_VERIFY, main, parse_values
from mccolor.graph import load_graph


def run(argv, capsys):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def make(tmp_path, capsys):
    def _make(name, *args):
        path = tmp_path / f"{name}.json"
        code, _, err = run(["generate", *args, "--out", path], capsys)
        assert code == EXIT_OK, err
        return path

    return _make


def test_parse_values():
    assert parse_values("6:8") == [6, 7, 8]
    assert parse_values("100,1000") == [100, 1000]
    assert parse_values("5") == [5]


def test_generate_3tree(make):
    assert load_graph(make("t", "--family", "complete-3tree", "--k", "2")).n == 7


def test_generate_wheel_is_k4(make):
    g = load_graph(make("w", "--family", "wheel", "--n", "4"))
    assert (g.n, g.m) == (4, 6)


def test_generate_deterministic(make):
    a = make("a", "--family", "random-mop", "--n", "10", "--seed", "7")
    b = make("b", "--family", "random-mop", "--n", "10", "--seed", "7")
    assert a.read_bytes() == b.read_bytes()


def test_generate_dot(capsys):
    code, out, _ = run(["generate", "--family", "wheel", "--n", "5", "--format", "dot"], capsys)
    assert code == EXIT_OK and out.startswith("graph")


def test_generate_bad_params(capsys):
    code, _, err = run(["generate", "--family", "wheel", "--n", "3"], capsys)
    assert code == EXIT_INPUT and "n" in err
    code, _, _ = run(["generate", "--family", "outerpath"], capsys)
    assert code == EXIT_INPUT


def test_color_dp2_matches_oracle(make, tmp_path, capsys):
    gpath = make("m", "--family", "random-mop", "--n", "12", "--seed", "3")
    rep = tmp_path / "rep.json"
    code, out, _ = run(["color", gpath, "--algo", "dp2", "--report", rep], capsys)
    assert code == EXIT_OK
    assert json.loads(out)["format"] == "mcc-coloring/1"
    assert json.loads(rep.read_text())["value"] == exact_mcc(load_graph(gpath), 2).value


def test_color_tree3(make, tmp_path, capsys):
    gpath = make("t", "--family", "complete-3tree", "--k", "2")
    rep = tmp_path / "rep.json"
    code, _, _ = run(["color", gpath, "--algo", "tree3-3col", "--report", rep], capsys)
    assert code == EXIT_OK
    assert json.loads(rep.read_text())["max_component"] == 4


def test_color_oracle_w5(make, capsys):
    gpath = make("w", "--family", "wheel", "--n", "5")
    code, _, err = run(["color", gpath, "--algo", "oracle", "--colors", "2"], capsys)
    assert code == EXIT_OK and "value=3" in err


def test_color_family_mismatch(make, capsys):
    gpath = make("w", "--family", "wheel", "--n", "6")
    code, _, err = run(["color", gpath, "--algo", "snowflake2"], capsys)
    assert code == EXIT_INPUT and "snowflake" in err


def test_color_budget(make, capsys):
    gpath = make("w", "--family", "wheel", "--n", "16")
    code, _, _ = run(["color", gpath, "--algo", "oracle", "--budget", "20"], capsys)
    assert code == EXIT_BUDGET


def test_dump_tables(make, tmp_path, capsys):
    gpath = make("m", "--family", "random-mop", "--n", "9", "--seed", "1")
    dump = tmp_path / "tables.csv"
    code, _, _ = run(["color", gpath, "--algo", "dp2", "--dump-tables", dump, "--out", tmp_path / "c.json"], capsys)
    rows = list(csv.reader(dump.open()))
    assert code == EXIT_OK and rows[0] == ["node", "u", "v", "w", "states"] and len(rows) == 8


def test_verify(make, tmp_path, capsys):
    gpath = make("w", "--family", "wheel", "--n", "5")
    cpath = tmp_path / "c.json"
    cpath.write_text(json.dumps({"format": "mcc-coloring/1", "t": 2, "colors": [0, 0, 1, 1, 1]}))
    code, out, _ = run(["verify", gpath, cpath], capsys)
    assert code == EXIT_OK and json.loads(out)["max_component"] == 3
    code, _, _ = run(["verify", gpath, cpath, "--max-component", "2"], capsys)
    assert code == EXIT_VERIFY
    cpath.write_text(json.dumps({"format": "mcc-coloring/1", "t": 2, "colors": [0, 1]}))
    code, _, _ = run(["verify", gpath, cpath], capsys)
    assert code == EXIT_INPUT


def test_missing_file(capsys, tmp_path):
    code, _, _ = run(["verify", tmp_path / "nope.json", tmp_path / "nope2.json"], capsys)
    assert code == EXIT_INPUT


def test_witness(make, capsys):
    gpath = make("t", "--family", "complete-3tree", "--k", "6")
    code, out, _ = run(["witness", gpath, "--kind", "path", "--seed", "4"], capsys)
    assert code == EXIT_OK and json.loads(out)["length"] >= 2
    code, out, _ = run(["witness", gpath, "--kind", "wheel", "--outer-index", "2"], capsys)
    assert code == EXIT_OK and json.loads(out)["n"] == 2**6 + 2


def test_bench_tree3(capsys):
    code, out, err = run(["bench", "--family", "complete-3tree", "--algo", "tree3-3col", "--k", "2:6"], capsys)
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == EXIT_OK
    assert [int(r["max_component"]) for r in rows] == [3 * k - 2 for k in range(2, 7)]
    assert "fit:" in err


def test_bench_empty_range(capsys):
    code, _, _ = run(["bench", "--family", "wheel", "--algo", "wheel2", "--n", "9:3"], capsys)
    assert code == EXIT_INPUT


def test_export(make, tmp_path, capsys):
    gpath = make("w", "--family", "wheel", "--n", "5")
    cpath = tmp_path / "c.json"
    cpath.write_text(json.dumps({"format": "mcc-coloring/1", "t": 2, "colors": [0, 0, 1, 1, 1]}))
    code, out, _ = run(["export", gpath, "--coloring", cpath], capsys)
    assert code == EXIT_OK and "fillcolor" in out
