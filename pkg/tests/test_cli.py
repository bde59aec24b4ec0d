import json

import pytest

from agfuzzy.algebra import format_table, left_zero_table, parse_tables, subtraction_table
from agfuzzy.cli import main
from agfuzzy.enumeration import EnumSpec, enumerate_naive


@pytest.fixture
def files(tmp_path):
    z3 = tmp_path / "z3.txt"
    z3.write_text(format_table(subtraction_table(3)))
    lz = tmp_path / "lz.txt"
    lz.write_text(format_table(left_zero_table(2)))
    bad = tmp_path / "bad.txt"
    bad.write_text("2\n0 0\n1 q\n")
    return {"z3": str(z3), "lz": str(lz), "bad": str(bad)}


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_enumerate_one(capsys):
    code, out, _ = run(capsys, "enumerate", "1")
    assert code == 0
    assert "count_labeled=1" in out


def test_enumerate_matches_naive_and_round_trips(capsys, tmp_path):
    target = tmp_path / "two.txt"
    code, out, _ = run(capsys, "enumerate", "2", "--out", str(target))
    assert code == 0
    tables = parse_tables(target.read_text())
    assert tables == enumerate_naive(EnumSpec(2)).tables
    assert "count_labeled=6" in out


def test_enumerate_left_identity_iso(capsys, tmp_path):
    target = tmp_path / "li.txt"
    run(capsys, "enumerate", "3", "--left-identity", "--up-to-iso", "--out", str(target))
    tables = parse_tables(target.read_text())
    assert len(tables) == 6
    assert all(any(row == tuple(range(3)) for row in t.rows) for t in tables)


def test_enumerate_bound(capsys):
    code, _, err = run(capsys, "enumerate", "6")
    assert code == 2 and "bound" in err


def test_check_exit_codes(capsys, files):
    assert run(capsys, "check", files["z3"])[:2] == (0, "pass\n")
    code, out, _ = run(capsys, "check", files["lz"])
    assert code == 1 and "(0, 0, 1)" in out
    code, _, err = run(capsys, "check", files["bad"])
    assert code == 2 and "line 3, column 3" in err


def test_product(capsys, files):
    assert run(capsys, "product", files["z3"], "k=1; 0 1 0", "k=1; 0 0 1")[1] == "k=1; 0 1 0\n"
    assert run(capsys, "product", files["z3"], "k=2; 2 2 2", "k=2; 0 0 0")[1] == "k=2; 0 0 0\n"
    assert run(capsys, "product", files["z3"], "k=2; 2 2 2", "k=2; 2 2 2")[1] == "k=2; 2 2 2\n"
    assert run(capsys, "product", files["z3"], "k=1; 0 1", "k=1; 0 0 1")[0] == 2


def test_gen_ideal(capsys, files):
    assert run(capsys, "gen-ideal", files["z3"], "1", "2")[1] == "k=2; 2 2 2\n"
    code, out, _ = run(capsys, "gen-ideal", files["z3"], "1", "2", "--oracle")
    assert code == 0 and out.endswith("agree\n")
    code, _, err = run(capsys, "gen-ideal", files["lz"], "0", "1")
    assert code == 2 and "left identity" in err


def test_gen_ideal_oracle_without_left_identity(capsys, tmp_path):
    path = tmp_path / "zero.txt"
    path.write_text("2\n0 0\n0 0\n")
    code, out, _ = run(capsys, "gen-ideal", str(path), "1", "1", "--oracle")
    assert code == 0 and out == "oracle k=2; 1 1\n"


def test_ideals(capsys, files):
    code, out, _ = run(capsys, "ideals", files["z3"], "--k", "1")
    assert code == 0
    assert json.loads(out)["members"] == ["k=1; 0 0 0", "k=1; 1 1 1"]


def test_verify_and_suite(capsys, tmp_path):
    code, out, _ = run(capsys, "verify", "T3", "--orders", "1,2")
    assert code == 0 and json.loads(out)["verdict"] == "verified"
    code, out, _ = run(capsys, "suite", "--ids", "T7", "--orders", "1,2")
    assert code == 0
    assert [r["statement"] for r in json.loads(out)["reports"]] == ["T7"]


def test_suite_exit_one_on_falsification(capsys):
    code, out, _ = run(capsys, "suite", "--ids", "L6", "--orders", "4", "--up-to-iso")
    assert code == 1
    assert json.loads(out)["summary"]["falsified"] == 1


def test_suite_seed_determinism(capsys, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for target in (a, b):
        run(capsys, "suite", "--orders", "1,2", "--k", "1,2", "--seed", "9", "--out", str(target))
    assert a.read_bytes() == b.read_bytes()
