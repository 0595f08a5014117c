import os

import pytest

from kirbycheck.cli import main
from kirbycheck.corpus import _FILES

CORPUS = os.path.join(os.path.dirname(__file__), "..", "src", "kirbycheck", "corpus")


def corpus_path(name: str) -> str:
    return os.path.join(CORPUS, _FILES[name])


def test_validate_ok(capsys):
    assert main(["validate", corpus_path("fig11-W1")]) == 0
    assert "ok" in capsys.readouterr().out


def test_validate_parse_error(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("twohandle h framing=0\nword h x+\n")
    assert main(["validate", str(bad)]) == 2
    assert "line 2" in capsys.readouterr().err


def test_invariants_output(capsys):
    assert main(["invariants", corpus_path("fig16-Q1")]) == 0
    out = capsys.readouterr().out
    assert "H1 = Z" in out and "H2 = 0" in out


def test_pi1_simplify(capsys):
    assert main(["pi1", corpus_path("fig11-W1"), "--simplify"]) == 0
    out = capsys.readouterr().out
    assert "triviality: trivial" in out


def test_apply_and_audit(tmp_path, capsys):
    out_file = tmp_path / "out.txt"
    code = main(
        [
            "apply",
            corpus_path("fig11-W1"),
            corpus_path("cork-twist-W"),
            "--audit",
            "--out",
            str(out_file),
        ]
    )
    assert code == 0
    assert out_file.exists()
    assert "dottozero" in capsys.readouterr().out


def test_movie_pipeline(tmp_path, capsys):
    comp = tmp_path / "comp.txt"
    assert main(["movie-complement", corpus_path("fig03-mazur-movie"), "--out", str(comp)]) == 0
    doubled = tmp_path / "doubled.txt"
    assert main(["double", str(comp), "--out", str(doubled)]) == 0
    assert main(["verify-product", str(doubled), corpus_path("mazur-product")]) == 0
    out = capsys.readouterr().out
    assert "PASS" in out

    # an empty script leaves handles behind: exit code 1
    empty = tmp_path / "noop.txt"
    empty.write_text("script noop\n")
    assert main(["verify-product", str(doubled), str(empty)]) == 1


def test_glue_command(tmp_path, capsys):
    comp = tmp_path / "comp.txt"
    main(["movie-complement", corpus_path("fig02-movie-K"), "--out", str(comp)])
    glued = tmp_path / "glued.txt"
    assert main(["glue", corpus_path("cork-W"), "eta", str(comp), "--out", str(glued)]) == 0
    assert main(["invariants", str(glued)]) == 0
    out = capsys.readouterr().out
    assert "H1 = 0" in out


def test_tb_command(capsys):
    assert main(["tb", corpus_path("fig07-frontK")]) == 0
    assert "tb = 4" in capsys.readouterr().out


def test_stein_command(capsys):
    code = main(
        ["stein", corpus_path("fig16-Q1"), "--fronts", corpus_path("fig16-fronts")]
    )
    assert code == 0
    assert "stein: PASS" in capsys.readouterr().out


def test_export_dt_command(capsys):
    assert main(["export-dt", corpus_path("fig01-export"), "K", "U"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("dt K U\n")


def test_corpus_run_and_report(tmp_path, capsys):
    report_dir = tmp_path / "report"
    assert main(["corpus", "run", "--report-dir", str(report_dir)]) == 0
    out = capsys.readouterr().out
    assert "corpus checks passed" in out
    assert (report_dir / "results.tsv").exists()
    assert (report_dir / "checks-by-group.png").exists()
    assert (report_dir / "tb-captions.png").exists()
    header = (report_dir / "results.tsv").read_text().splitlines()[0]
    assert header == "group\tcheck\tstatus\tdetails"


def test_corpus_list(capsys):
    assert main(["corpus", "list"]) == 0
    out = capsys.readouterr().out
    assert "fig11-W1" in out and "movie" in out


def test_apply_report_dir(tmp_path, capsys):
    report_dir = tmp_path / "audit"
    code = main(
        [
            "apply",
            corpus_path("fig11-W1"),
            corpus_path("single-pair-W1"),
            "--report-dir",
            str(report_dir),
        ]
    )
    assert code == 0
    files = os.listdir(report_dir)
    assert any(f.endswith(".tsv") for f in files)
    assert any(f.endswith(".png") for f in files)
