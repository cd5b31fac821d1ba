"""Command-line behavior: output shapes, exit codes, determinism."""

import json
import shutil

import pytest

from matroid_forge.cli import main
from matroid_forge.formats import parse_matroid_text


@pytest.fixture(scope="module")
def paths(data_dir):
    return {
        "m": str(data_dir / "M.matroid"),
        "n": str(data_dir / "N.matroid"),
        "a": str(data_dir / "A.matrix"),
        "a2": str(data_dir / "yuzvinsky_a2.matrix"),
    }


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# -- validate -----------------------------------------------------------------

def test_validate_ok(capsys, paths):
    code, out, _ = run(capsys, "validate", paths["m"])
    assert code == 0
    assert out == "ok: simple rank-3 matroid on 13 elements, 271 bases\n"


def test_validate_json(capsys, paths):
    code, out, _ = run(capsys, "validate", paths["n"], "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc == {"valid": True, "n": 13, "rank": 4,
                   "bases": 494, "simple": True}


def test_validate_invalid_exits_1(capsys, tmp_path):
    bad = tmp_path / "bad.matroid"
    bad.write_text("n 5\nrank 3\nflat 2 0 3\n")
    code, out, _ = run(capsys, "validate", str(bad))
    assert code == 1
    assert out.startswith("invalid:")


def test_missing_file_exits_2(capsys):
    code, _, err = run(capsys, "validate", "/no/such/file.matroid")
    assert code == 2
    assert err.startswith("error:")


# -- flats ----------------------------------------------------------------------

def test_flats_text(capsys, paths):
    code, out, _ = run(capsys, "flats", paths["m"], "--rank", "2",
                       "--min-size", "3")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 15
    assert lines[0] == "{0,3,9}"


def test_flats_json(capsys, paths):
    code, out, _ = run(capsys, "flats", paths["m"], "--rank", "2",
                       "--min-size", "3", "--json")
    doc = json.loads(out)
    assert len(doc["flats"]) == 15


def test_bad_matroid_input_exits_2(capsys, tmp_path, paths):
    bad = tmp_path / "bad.matroid"
    bad.write_text("n 5\nrank 3\nflat 2 0 3\n")
    code, _, err = run(capsys, "flats", str(bad), "--rank", "2")
    assert code == 2
    assert err.startswith("error:")


# -- erect -----------------------------------------------------------------------

def test_erect_all(capsys, paths):
    code, out, _ = run(capsys, "erect", paths["m"], "--all")
    assert code == 0
    assert out.splitlines() == [
        "2 erections of a rank-3 matroid on 13 elements",
        "[0] rank 3, 271 bases (trivial)",
        "[1] rank 4, 494 bases",
        "free erection: [1]",
    ]


def test_erect_free_roundtrips(capsys, paths, rank4_matroid):
    code, out, _ = run(capsys, "erect", paths["m"], "--free")
    assert code == 0
    assert parse_matroid_text(out) == rank4_matroid


def test_erect_requires_mode(paths):
    with pytest.raises(SystemExit):
        main(["erect", paths["m"]])


# -- formality / charpoly ----------------------------------------------------------

def test_formality_text(capsys, paths):
    code, out, _ = run(capsys, "formality", paths["a"])
    assert code == 0
    assert out.splitlines() == [
        "kernel dimension     10",
        "weight-3 dimension   10",
        "matrix rank          3",
        "formalization rank   3",
        "verdict              formal",
    ]


def test_formality_negative_json(capsys, paths):
    code, out, _ = run(capsys, "formality", paths["a2"], "--json")
    doc = json.loads(out)
    assert doc["formal"] is False
    assert doc["formalization_rank"] == 4


def test_charpoly_text(capsys, paths):
    code, out, _ = run(capsys, "charpoly", paths["m"])
    assert code == 0
    assert out == "t^3 - 13*t^2 + 63*t - 51\ninteger roots: none\n"


# -- minor / obstruction ------------------------------------------------------------

def test_minor_found(capsys, paths):
    code, out, _ = run(capsys, "minor", paths["n"], paths["n"])
    assert code == 0
    assert out == "minor found: contract {}, delete {}\n"


def test_minor_not_found_exits_1(capsys, paths):
    code, out, _ = run(capsys, "minor", paths["n"], paths["m"])
    assert code == 1
    assert out == "no minor found\n"


def test_minor_json(capsys, paths):
    code, out, _ = run(capsys, "minor", paths["n"], paths["m"], "--json")
    assert code == 1
    assert json.loads(out) == {"found": False}


def test_obstruction_text(capsys, paths):
    code, out, _ = run(capsys, "obstruction", paths["n"])
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "verdict: no-field"
    assert lines[1].startswith("char-2 minor: contract {6}, delete {10,12}")
    assert lines[2] == "char-not-2 minor: contract {}, delete {0,1,2,3,4,5}"


def test_obstruction_json(capsys, paths):
    code, out, _ = run(capsys, "obstruction", paths["m"], "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["verdict"] == "char-not-2-only"
    assert doc["fano"] is None
    assert doc["nonfano"]["delete"] == [0, 1, 2, 3, 4, 5]


# -- reproduce -----------------------------------------------------------------------

def test_reproduce_deterministic(capsys):
    code1, out1, _ = run(capsys, "reproduce")
    code2, out2, _ = run(capsys, "reproduce")
    assert code1 == code2 == 0
    assert out1 == out2
    assert "overall                 PASS    12/12 checks passed" in out1
    assert "timing" not in out1


def test_reproduce_json(capsys):
    code, out, _ = run(capsys, "reproduce", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["overall"] is True
    assert doc["total"] == 12
    assert [c["name"] for c in doc["checks"]][:3] == [
        "m-wellformed", "realization", "erections"]


def test_reproduce_timing_lines(capsys):
    code, out, _ = run(capsys, "reproduce", "--timing")
    assert code == 0
    timing_lines = [l for l in out.splitlines() if l.startswith("timing")]
    assert len(timing_lines) == 12


def test_reproduce_negative_control(capsys, data_dir, tmp_path):
    # removing one plane from the rank-4 file must fail the erections check
    for p in data_dir.iterdir():
        shutil.copy(p, tmp_path / p.name)
    target = tmp_path / "N.matroid"
    lines = target.read_text().splitlines()
    first_plane = next(i for i, l in enumerate(lines) if l.startswith("flat 3"))
    del lines[first_plane]
    target.write_text("\n".join(lines) + "\n")

    code, out, _ = run(capsys, "reproduce", "--data", str(tmp_path))
    assert code == 1
    erections_line = next(l for l in out.splitlines()
                          if l.startswith("erections"))
    assert "FAIL" in erections_line
    assert "overall                 FAIL" in out


def test_budget_env_invalid(capsys, monkeypatch, paths):
    monkeypatch.setenv("MATROID_FORGE_BUDGET", "lots")
    code, _, err = run(capsys, "erect", paths["m"], "--all")
    assert code == 2
    assert "MATROID_FORGE_BUDGET" in err


def test_budget_env_tiny(capsys, monkeypatch, paths):
    monkeypatch.setenv("MATROID_FORGE_BUDGET", "1")
    code, _, err = run(capsys, "erect", paths["m"], "--all")
    assert code == 2
    assert "exceeded" in err


def test_budget_env_generous(capsys, monkeypatch, paths):
    monkeypatch.setenv("MATROID_FORGE_BUDGET", "100000000")
    code, _, _ = run(capsys, "erect", paths["m"], "--all")
    assert code == 0
