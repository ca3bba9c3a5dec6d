import logging
import os
import time

from utils import (
    cleanup_stale_artifacts,
    graph_to_dict,
    logging_progress,
    make_bar,
    read_manifest,
    resolve_output,
    rows_to_csv,
    write_artifact,
)

import app


def test_make_bar():
    assert make_bar(0) == "░" * 20
    assert make_bar(50) == "█" * 10 + "░" * 10
    assert make_bar(250) == "█" * 20


def test_logging_progress(caplog):
    callback = logging_progress("n=4", step=50)
    with caplog.at_level(logging.INFO, logger="assoc"):
        for found in (5, 10, 30, 42):
            callback(found, 42)
    lines = [r.getMessage() for r in caplog.records]
    assert len(lines) == 3
    assert lines[-1].endswith("42/42")


def test_resolve_output(tmp_path):
    assert resolve_output(None) is None
    assert resolve_output("-") is None
    assert resolve_output("report.json") == tmp_path / "report.json"
    assert resolve_output("sub/report.json").as_posix() == "sub/report.json"


def test_write_artifact(tmp_path, capsys):
    assert write_artifact("hello") is None
    assert capsys.readouterr().out == "hello\n"
    target = write_artifact("a,b", str(tmp_path / "deep" / "rows.csv"))
    assert target.read_text() == "a,b\n"


def test_cleanup_stale_artifacts(tmp_path):
    old = write_artifact("{}", str(tmp_path / "old.json"))
    fresh = write_artifact("a,b", str(tmp_path / "new.csv"))
    foreign = tmp_path / "notes.json"
    foreign.write_text("x")
    hour_ago = time.time() - 3600
    for f in (old, foreign):
        os.utime(f, (hour_ago, hour_ago))
    assert read_manifest(tmp_path) == ["old.json", "new.csv"]
    assert cleanup_stale_artifacts(tmp_path, max_age_minutes=30) == 1
    assert not old.exists() and fresh.exists() and foreign.exists()
    assert read_manifest(tmp_path) == ["new.csv"]
    assert cleanup_stale_artifacts(tmp_path / "missing") == 0


def test_cli_cleans_output_dir(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("ASSOC_ARTIFACT_MAX_AGE", "60")
    stale = write_artifact("digraph {}", "stale.dot")
    day_ago = time.time() - 86400
    os.utime(stale, (day_ago, day_ago))
    assert app.main(["enumerate", "--n", "1"]) == 0
    assert not stale.exists()


def test_cleanup_leaves_files_it_did_not_write(tmp_path, monkeypatch, capsys):
    monkeypatch.chdir(tmp_path)
    monkeypatch.setenv("ASSOC_OUTPUT_DIR", ".")
    monkeypatch.setenv("ASSOC_ARTIFACT_MAX_AGE", "1")
    hour_ago = time.time() - 3600
    for name in ("requirements.txt", "data.json", "notes.txt"):
        (tmp_path / name).write_text("keep me")
        os.utime(tmp_path / name, (hour_ago, hour_ago))
    assert app.main(["enumerate", "--n", "1"]) == 0
    assert sorted(p.name for p in tmp_path.iterdir()) == ["data.json", "notes.txt", "requirements.txt"]


def test_cleanup_needs_an_output_dir(tmp_path, monkeypatch, capsys):
    stale = write_artifact("{}", "stale.json")
    day_ago = time.time() - 86400
    os.utime(stale, (day_ago, day_ago))
    monkeypatch.delenv("ASSOC_OUTPUT_DIR")
    monkeypatch.setenv("ASSOC_ARTIFACT_MAX_AGE", "1")
    monkeypatch.chdir(tmp_path)
    assert app.main(["enumerate", "--n", "1"]) == 0
    assert stale.exists()


def test_rows_to_csv():
    text = rows_to_csv([{"n": 2, "rank": 1}], ("n", "rank"))
    assert text == "n,rank\n2,1\n"


def test_graph_to_dict(graphs):
    data = graph_to_dict(graphs(1))
    assert data["nodes"] == [[[1, 3]], [[2, 4]]]
    assert data["edges"] == [{"u": 0, "v": 1, "label": [1, 2, 3, 4]}]
    assert data["five_cycles"] == []
