import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

from slater import __version__
from slater.cli import run
from slater.formats import from_graph6
from slater.generators import family_outerplanar_extremal
from slater.sparse import OuterplanarEmbedding, certify_outerplanar

GOLDEN = Path(__file__).parent / "golden"
INPUTS = GOLDEN / "inputs"

# name -> argv; each pins a JSON report in golden/<name>.json
CASES = {
    "slater_clique_plus_isolated_4": ["slater", "clique_plus_isolated_4.g6"],
    "slater_star_4": ["slater", "star_4.txt"],
    "dom_clique_plus_isolated_4": ["dom", "clique_plus_isolated_4.g6"],
    "dom_gstar_6": ["dom", "gstar_6.g6"],
    "dom_c4_plus_k1": ["dom", "c4_plus_k1.txt"],
    "dom_star_4_total_oracle": ["dom", "star_4.txt", "--variant", "total", "--oracle"],
    "dom_k2_plus_2k1_paired": ["dom", "k2_plus_2k1.txt", "--variant", "paired"],
    "decide_k1": ["decide", "k1.g6"],
    "decide_clique_plus_isolated_4": ["decide", "clique_plus_isolated_4.g6"],
    "member_gstar_6": ["member", "gstar_6.g6", "--alpha", "2", "--beta", "2"],
    "member_c4": ["member", "c4.txt", "--alpha", "1", "--beta", "1"],
    "recognize_c4_plus_k1": ["recognize", "c4_plus_k1.txt"],
    "recognize_k2_plus_2k1": ["recognize", "k2_plus_2k1.txt"],
    "reduce_two_clauses": ["reduce", "two_clauses.cnf"],
}


def _json_run(argv, capsys):
    code = run([argv[0], "--json", *[str(INPUTS / a) if (INPUTS / a).exists() else a for a in argv[1:]]])
    out = json.loads(capsys.readouterr().out)
    return code, out


def _normalized(report: dict) -> dict:
    report = dict(report)
    report["inputs"] = {k: Path(v).name if k == "cnf" else v for k, v in report["inputs"].items()}
    return report


@pytest.mark.parametrize("name", sorted(CASES))
def test_golden_reports(name, capsys):
    code, report = _json_run(CASES[name], capsys)
    assert code == 0
    report = _normalized(report)
    path = GOLDEN / f"{name}.json"
    if os.environ.get("SLATER_REGEN_GOLDEN"):
        path.write_text(json.dumps(report, indent=2, sort_keys=True) + "\n")
    assert report == json.loads(path.read_text())


def test_report_schema(capsys):
    _, report = _json_run(CASES["decide_k1"], capsys)
    assert set(report) == {"command", "inputs", "results", "counterexamples", "seed", "version"}
    assert report["version"] == __version__
    assert report["results"]["kind"] == "UPPER" and len(report["results"]["witness"]) == 1


def test_named_example_values(capsys):
    _, report = _json_run(CASES["dom_clique_plus_isolated_4"], capsys)
    assert report["results"]["value"] == 5
    _, report = _json_run(CASES["member_c4"], capsys)
    assert report["results"]["member"] is False and report["results"]["violating_subgraph"] == [0, 1, 2, 3]


def test_plain_output(capsys):
    assert run(["slater", str(INPUTS / "star_4.txt")]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[:3] == ["slater: 1", "total_slater: 2", "ord_c: 2"]


def test_gen_writes_graph6_and_embedding(tmp_path, capsys):
    emb_path = tmp_path / "emb.txt"
    assert run(["gen", "outerplanar-extremal", "4", "--embedding", str(emb_path)]) == 0
    g = from_graph6(capsys.readouterr().out.strip())
    n, emb = OuterplanarEmbedding.from_text(emb_path.read_text())
    assert (g, emb) == family_outerplanar_extremal(4, check=False) and n == 22
    assert certify_outerplanar(g, emb)


def test_gen_is_seeded(capsys):
    run(["gen", "random-tree", "12", "--seed", "9"])
    first = capsys.readouterr().out
    run(["gen", "random-tree", "12", "--seed", "9"])
    assert capsys.readouterr().out == first


def test_gen_embedding_for_non_outerplanar_family(tmp_path, capsys):
    assert run(["gen", "gstar", "4", "--embedding", str(tmp_path / "e")]) == 2


def test_audit_exit_codes(capsys):
    assert run(["audit", "theorem5", "--max-n", "4"]) == 0
    assert "theorem5: ok" in capsys.readouterr().out
    assert run(["audit", "mincut", "--seed", "3", "--trials", "20", "--max-n", "8", "--json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["seed"] == 3 and report["results"]["checked"] == 20


def test_audit_is_idempotent(capsys):
    argv = ["audit", "lemma1", "--seed", "2", "--trials", "50", "--max-n", "20", "--json"]
    run(argv)
    first = json.loads(capsys.readouterr().out)
    run(argv)
    second = json.loads(capsys.readouterr().out)
    for report in (first, second):
        report["results"].pop("seconds")
    assert first == second


def test_audit_reports_counterexamples_with_exit_1(monkeypatch, capsys):
    from slater import audits

    def broken(max_n: int = 3):
        report = audits.AuditReport("broken")
        report.fail(graph6="@", note="forced")
        return report

    monkeypatch.setitem(audits.SUITES, "theorem5", broken)
    assert run(["audit", "theorem5"]) == 1
    assert "counterexample" in capsys.readouterr().out


@pytest.mark.parametrize(
    "argv",
    [
        ["audit", "theorem5", "--seed", "3"],
        ["member", "INPUT", "--alpha", "0.5", "--beta", "0"],
        ["member", "INPUT", "--alpha", "1", "--beta", "2"],
        ["slater", "/nonexistent/graph.g6"],
    ],
)
def test_input_errors_exit_2(argv, capsys):
    argv = [str(INPUTS / "c4.txt") if a == "INPUT" else a for a in argv]
    assert run(argv) == 2
    assert "error" in capsys.readouterr().err


@pytest.mark.parametrize("argv", [[], ["nosuch"], ["dom", "x", "--variant", "weird"], ["dom", "x", "--exact", "--oracle"]])
def test_usage_errors_exit_2(argv):
    with pytest.raises(SystemExit) as info:
        run(argv)
    assert info.value.code == 2


def test_malformed_graph_file_exits_2(tmp_path, capsys):
    bad = tmp_path / "bad.g6"
    bad.write_text("C~~\n")
    assert run(["dom", str(bad)]) == 2


def test_pipeline_through_stdin():
    gen = subprocess.run([sys.executable, "-m", "slater", "gen", "clique-plus-isolated", "4"],
                         capture_output=True, text=True, check=True)
    dom = subprocess.run([sys.executable, "-m", "slater", "dom", "-"], input=gen.stdout,
                         capture_output=True, text=True, check=True)
    assert "value: 5" in dom.stdout.splitlines()
