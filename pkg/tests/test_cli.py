"""End-to-end CLI behavior: formats, exit codes, caching, stdin."""

import io
import json

import pytest

from latticecubes.cli import main

from .published_data import EXAMPLE_CUBE, TABLE1

UNIT_JSON = json.dumps(TABLE1[0][2])


def run(capsys, *argv):
    rc = main(list(argv))
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


def test_count(capsys):
    rc, out, _ = run(capsys, "count", "--n", "4")
    assert rc == 0
    assert out == "100\n"


def test_count_json(capsys):
    rc, out, _ = run(capsys, "count", "--n", "4", "--format", "json")
    assert rc == 0
    assert out == "100\n"


def test_sequence_bfile(capsys):
    rc, out, _ = run(capsys, "sequence", "--n", "3", "--format", "bfile")
    assert rc == 0
    assert out == "1 1\n2 9\n3 36\n"


def test_sequence_json(capsys):
    rc, out, _ = run(capsys, "sequence", "--n", "1", "--format", "json")
    assert rc == 0
    assert out == "[1]\n"


def test_sequence_csv(capsys):
    rc, out, _ = run(capsys, "sequence", "--n", "2", "--format", "csv")
    assert rc == 0
    assert out == "n,nc\n1,1\n2,9\n"


def test_sequence_table(capsys):
    rc, out, _ = run(capsys, "sequence", "--n", "2")
    assert rc == 0
    assert out == "   1 1\n   2 9\n"


def test_sequence_thread_determinism(capsys):
    rc1, out1, _ = run(capsys, "sequence", "--n", "8", "--format", "bfile")
    rc2, out2, _ = run(
        capsys, "sequence", "--n", "8", "--format", "bfile", "--threads", "2"
    )
    assert rc1 == rc2 == 0
    assert out1 == out2


def test_list_unit(capsys):
    rc, out, _ = run(capsys, "list", "--n", "1")
    assert rc == 0
    assert out == (
        "1 | 1 | [0, 0, 0], [0, 0, 1], [0, 1, 0], [0, 1, 1], "
        "[1, 0, 0], [1, 0, 1], [1, 1, 0], [1, 1, 1] | 1 | [1, 1, 0, 0]\n"
    )


def test_list_13(capsys):
    rc, out, _ = run(capsys, "list", "--n", "13")
    assert rc == 0
    rows = [line.split(" | ") for line in out.splitlines()]
    assert [int(r[0]) for r in rows] == [1, 3, 5, 7, 9, 11, 13, 13]
    # within one side, bigger bounding boxes print first
    assert [int(r[1]) for r in rows if r[0] == "13"] == [19, 17]


def test_list_multiples(capsys):
    rc, plain, _ = run(capsys, "list", "--n", "6")
    rc2, with_mult, _ = run(capsys, "list", "--n", "6", "--multiples")
    assert rc == rc2 == 0
    extra = set(with_mult.splitlines()) - set(plain.splitlines())
    sides = sorted(int(line.split(" | ")[0]) for line in extra)
    assert sides == [2, 3, 4, 5, 6]  # the unit cube dilated by 2..6


def test_list_json_schema(capsys):
    rc, out, _ = run(capsys, "list", "--n", "3", "--format", "json")
    assert rc == 0
    data = json.loads(out)
    assert len(data) == 2
    for rec in data:
        assert set(rec) == {
            "side", "bound_dim", "cube", "k_values", "invariants", "source",
        }
        assert set(rec["source"]) == {"a", "b", "c", "d", "m", "n"}


def test_rejects_bad_n(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["count", "--n", "0"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["count", "--n", "x"])
    assert exc.value.code == 2


def test_rejects_unknown_flag(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["count", "--n", "2", "--frobnicate"])
    assert exc.value.code == 2


def test_invariants_argument(capsys):
    rc, out, err = run(capsys, "invariants", UNIT_JSON)
    assert rc == 0
    assert out == "1 1 0 0\nk-values: 1\n"
    assert "side: 1" in err


def test_invariants_json(capsys):
    rc, out, _ = run(
        capsys, "invariants", json.dumps(EXAMPLE_CUBE), "--format", "json"
    )
    assert rc == 0
    data = json.loads(out)
    assert data["side"] == 61
    assert data["bound_dim"] == 97
    assert data["invariants"][0] >= 1


def test_invariants_stdin(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO(UNIT_JSON))
    rc, out, _ = run(capsys, "invariants")
    assert rc == 0
    assert out.startswith("1 1 0 0")


def test_invariants_rejects_garbage(capsys):
    rc, out, err = run(capsys, "invariants", "[[0,0,0]]")
    assert rc == 1
    assert out == ""
    assert "not a lattice cube" in err
    rc, _, err = run(capsys, "invariants", "{not json")
    assert rc == 1
    assert "not a lattice cube" in err


def test_verify_small(capsys):
    rc, out, err = run(capsys, "verify", "--n", "6")
    assert rc == 0
    lines = out.splitlines()
    assert len(lines) == 7  # header + 6 rows
    assert "MISMATCH" not in out
    assert "agree" in err


def test_verify_oracle_cap_and_log_flag(capsys):
    rc, out, _ = run(capsys, "verify", "--n", "15", "--oracle-max", "2")
    assert rc == 0
    rows = out.splitlines()[1:]
    assert rows[2].split()[2] == "-"  # oracle column empty past the cap
    assert "log differs" in rows[14]  # the published computation log is wrong here
    assert "listed differs" not in out


def test_representations_table(capsys):
    rc, out, _ = run(capsys, "representations", "5")
    assert rc == 0
    assert out == "1 5 7\nenumerated: 1\nformula:    1\n"


def test_representations_json(capsys):
    rc, out, _ = run(capsys, "representations", "9", "--format", "json")
    assert rc == 0
    assert json.loads(out) == {
        "d": 9,
        "solutions": [[1, 11, 11], [5, 7, 13]],
        "enumerated": 2,
        "formula": 2,
    }


def test_representations_rejects_even(capsys):
    rc, _, err = run(capsys, "representations", "4")
    assert rc == 1
    assert "odd" in err


def test_cache_save_and_load(tmp_path, capsys):
    cache = str(tmp_path / "reg.json")
    rc1, out1, err1 = run(capsys, "count", "--n", "5", "--cache", cache)
    assert rc1 == 0 and "saved registry cache" in err1
    rc2, out2, err2 = run(capsys, "count", "--n", "5", "--cache", cache)
    assert rc2 == 0 and "loaded registry cache (N=5)" in err2
    assert out1 == out2 == "229\n"


def test_cache_corruption_falls_back(tmp_path, capsys):
    cache = tmp_path / "reg.json"
    cache.write_text("garbage")
    rc, out, err = run(capsys, "count", "--n", "3", "--cache", str(cache))
    assert rc == 0
    assert out == "36\n"
    assert "saved registry cache" in err  # rebuilt and overwrote the bad file
