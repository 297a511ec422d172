"""The command-line interface, driven through main() directly."""

import json
import os

import pytest

from symposet.cli import main
from symposet.io import poset_from_structured


def test_export_stdout_structured(capsys):
    code = main(["export", "--poset", "U", "--genus", "1",
                 "--format", "structured"])
    assert code == 0
    out = capsys.readouterr().out
    P = poset_from_structured(out)
    assert len(P) == 2


def test_export_to_file(tmp_path):
    target = tmp_path / "u.txt"
    code = main(["export", "--poset", "U", "--genus", "2",
                 "--out", str(target)])
    assert code == 0
    text = target.read_text()
    assert text.startswith("poset with 22 elements")


def test_export_dot(capsys):
    assert main(["export", "--poset", "D+", "--format", "dot"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("digraph poset {")
    assert out.count("label=") == 10


def test_export_ring_choice(capsys):
    assert main(["export", "--poset", "O", "--ring", "p3", "--genus", "2",
                 "--format", "structured"]) == 0
    P = poset_from_structured(capsys.readouterr().out)
    assert len(P) == 56


def test_export_O_rejects_integers():
    with pytest.raises(SystemExit):
        main(["export", "--poset", "O", "--ring", "Z"])


def test_export_HU_rejects_radical():
    with pytest.raises(SystemExit):
        main(["export", "--poset", "HU", "--radical", "1"])


def test_export_radical_module(capsys):
    assert main(["export", "--poset", "I", "--genus", "1", "--radical", "1",
                 "--format", "structured"]) == 0
    P = poset_from_structured(capsys.readouterr().out)
    assert len(P) == 6


def test_export_cache_round_trip(tmp_path, capsys):
    cachedir = str(tmp_path / "cache")
    argv = ["export", "--poset", "D", "--format", "structured",
            "--cache", cachedir]
    assert main(argv) == 0
    first = capsys.readouterr().out
    assert len(os.listdir(cachedir)) == 1
    assert main(argv) == 0
    assert capsys.readouterr().out == first


def test_suite_run_writes_report(tmp_path, capsys):
    code = main(["um", "--out", str(tmp_path), "--quiet"])
    assert code == 0
    out = capsys.readouterr().out
    assert "suite um:" in out and "exit 0" in out
    data = json.loads((tmp_path / "um.json").read_text())
    assert data["suite"] == "um"
    assert all(r["verdict"] == "verified" for r in data["records"])
    assert all("seconds" not in r for r in data["records"])


def test_suite_timings_flag(tmp_path):
    main(["um", "--out", str(tmp_path), "--quiet", "--timings"])
    data = json.loads((tmp_path / "um.json").read_text())
    assert all("seconds" in r for r in data["records"])


def test_suite_budget_starvation(capsys):
    code = main(["um", "--budget", "10", "--quiet"])
    assert code == 2
    assert "exit 2" in capsys.readouterr().out


def test_suite_summary_lines(capsys):
    main(["core-props", "--seed", "3"])
    out = capsys.readouterr().out
    assert "verified" in out
    assert "suite core-props:" in out


def test_version_flag(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["--version"])
    assert exc.value.code == 0
    assert "symposet" in capsys.readouterr().out


def test_unknown_command():
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_missing_command():
    with pytest.raises(SystemExit):
        main([])
