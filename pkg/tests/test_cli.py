import json

import pytest

from knotorder.cli import main
from knotorder.words import bundled_data_path


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_alex(capsys):
    code, out, _ = run(capsys, "alex", "4_1")
    assert code == 0 and out.strip() == "1 - 3*t + t^2"


def test_alexdiv(capsys):
    assert run(capsys, "alexdiv", "4_1", "3_1")[1].strip() == "REFUTED"
    assert run(capsys, "alexdiv", "11a_6", "3_1")[1].strip() == "DIVIDES"


def test_reps_and_talex(capsys):
    code, out, _ = run(capsys, "reps", "3_1", "-p", "3", "--list")
    assert code == 0 and out.splitlines()[0] == "11"
    code, out, _ = run(capsys, "reps", "3_1", "-p", "3", "--irreducible-only")
    assert out.strip() == "5"
    code, out, _ = run(capsys, "talex", "3_1", "-p", "3", "--rep", "0")
    assert code == 0 and out.startswith("numerator = ")
    code, _, err = run(capsys, "talex", "3_1", "-p", "3", "--rep", "99")
    assert code == 1 and "out of range" in err


def test_refute(capsys):
    code, out, _ = run(capsys, "refute", "11a_6", "3_1", "-p", "3")
    assert code == 0 and out.startswith("REFUTED p=3 rep=")
    code, out, _ = run(capsys, "refute", "3_1", "3_1", "-p", "2,3")
    assert out.startswith("INCONCLUSIVE")


def test_unknown_knot(capsys):
    code, _, err = run(capsys, "alex", "99_9")
    assert code == 1 and "unknown knot" in err


def test_verify_hom(capsys, tmp_path):
    code, out, _ = run(capsys, "verify-hom")
    assert code == 0
    assert sum(line.startswith("PASS ") for line in out.splitlines()) == 20
    empty = tmp_path / "empty.txt"
    empty.write_text("")
    assert run(capsys, "verify-hom", "--homs", str(empty))[0] == 0
    bad = tmp_path / "bad.txt"
    bad.write_text("hom 11a_6 -> 4_1\nmap 1: 1 1\n")
    code, out, _ = run(capsys, "verify-hom", "--homs", str(bad))
    assert code == 1 and "FAIL 11a_6 4_1" in out


def test_order_files(capsys, tmp_path):
    knots = tmp_path / "k.txt"
    knots.write_text("knot 3_1\ngens 3\nrel 3 1 -3 -2\nrel 1 2 -1 -3\n\n"
                     "knot 4_1\ngens 4\nrel 2 1 -2 -3\nrel 4 2 -4 -3\nrel 1 3 -1 -4\n")
    out_txt, out_json = tmp_path / "r.txt", tmp_path / "r.json"
    code, out, _ = run(capsys, "order", "--knots", str(knots), "--out", str(out_txt), "--json", str(out_json))
    assert code == 0 and out == ""
    text = out_txt.read_text()
    assert "3_1 4_1 REFUTED_ALEXANDER" in text
    rows = json.loads(out_json.read_text())
    assert len(rows) == 2


def test_order_exit_codes(capsys, tmp_path, knots):
    code, _, err = run(capsys, "order", "--knots", str(tmp_path / "missing.txt"))
    assert code == 1
    table = tmp_path / "twins.txt"
    P = knots["3_1"]
    table.write_text(P.to_text() + "\n" + P.to_text().replace("knot 3_1", "knot 3_1b"))
    homs = tmp_path / "h.txt"
    homs.write_text("hom 3_1 -> 3_1b\nmap 1: 1\nmap 2: 2\nmap 3: 3\n"
                    "hom 3_1b -> 3_1\nmap 1: 1\nmap 2: 2\nmap 3: 3\n")
    code, _, err = run(capsys, "order", "--knots", str(table), "--homs", str(homs))
    assert code == 2 and "antisymmetry" in err
    cfg = tmp_path / "c.cfg"
    cfg.write_text("nonsense = 3\n")
    assert run(capsys, "order", "--knots", str(table), "--config", str(cfg))[0] == 1


def test_bundled_file_is_readable():
    assert bundled_data_path("knots.txt").exists()


def test_missing_subcommand():
    with pytest.raises(SystemExit):
        main([])
