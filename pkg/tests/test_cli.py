import json

import pytest

from semicoclass import cli
from semicoclass import graph as gr


def run(*argv):
    return cli.main(list(argv))


def test_config_errors(tmp_path):
    assert run("census", "--coclass", "1", "--generators", "3", "--max-order", "6") == cli.EXIT_CONFIG
    assert run("graph", "--coclass", "1", "--generators", "2", "--prime", "9") == cli.EXIT_CONFIG
    assert run("census", "--coclass", "2", "--generators", "2", "--max-order", "4") == cli.EXIT_CONFIG
    assert run("census", "--coclass", "1") == cli.EXIT_CONFIG
    assert run("analyze", str(tmp_path / "missing.json")) == cli.EXIT_CONFIG
    assert run("verify", "--criteria", "42") == cli.EXIT_CONFIG


def test_census_is_deterministic(tmp_path):
    outs = []
    for w in ("1", "2"):
        path = tmp_path / f"c{w}.jsonl"
        assert run("census", "--coclass", "1", "--generators", "2", "--max-order", "8",
                   "--workers", w, "--out", str(path)) == cli.EXIT_OK
        outs.append(path.read_bytes())
    assert outs[0] == outs[1]
    recs = [json.loads(line) for line in outs[0].decode().splitlines()]
    assert [r["order"] for r in recs] == sorted(r["order"] for r in recs)
    assert len(recs) == 1 + 9 + 9 + 11 + 12 + 14


def test_graph_analyze_export(tmp_path):
    census = tmp_path / "c.jsonl"
    assert run("census", "--coclass", "1", "--generators", "2", "--max-order", "10",
               "--out", str(census)) == cli.EXIT_OK
    prefix = str(tmp_path / "g1")
    assert run("graph", "--coclass", "1", "--generators", "2", "--max-order", "10",
               "--prime", "5", "--census", str(census), "--out", prefix) == cli.EXIT_OK
    g = gr.import_json(open(prefix + ".json").read())
    assert gr.roots(g) == ["2.0"]
    nodes, edges = gr.parse_dot(open(prefix + ".dot").read())
    assert set(nodes) == {v.id for v in g.vertices} and len(edges) == len(g) - 1

    report = tmp_path / "r.json"
    assert run("analyze", prefix + ".json", "--out", str(report)) == cli.EXIT_OK
    reps = json.loads(report.read_text())
    assert len(reps) == 1 and reps[0]["root"] == "2.0"
    rep = gr.PeriodicityReport.from_dict(reps[0])
    assert gr.verify_report(g, rep)

    dot = tmp_path / "lr.dot"
    assert run("export", prefix + ".json", "--rankdir", "LR", "--out", str(dot)) == cli.EXIT_OK
    assert "rankdir=LR;" in dot.read_text()
    js = tmp_path / "again.json"
    assert run("export", prefix + ".json", "--format", "json", "--out", str(js)) == cli.EXIT_OK
    assert js.read_text() == open(prefix + ".json").read()


def test_verify_subset(capsys):
    assert run("verify", "--criteria", "1") == cli.EXIT_OK
    out = capsys.readouterr().out
    assert "[PASS] criterion 1" in out and "1/1 criteria passed" in out
