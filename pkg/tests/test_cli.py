"""CLI subcommands, config handling, exit codes."""

import json

import pytest

from nilgraph.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_ring_z4(capsys):
    code, out, _ = run_cli(capsys, "ring", "Z4")
    assert code == 0
    assert "nilpotents: {0, 2}" in out
    assert "two_primal: yes" in out
    assert "minimal primes: 1" in out


def test_ring_m2z2(capsys):
    code, out, _ = run_cli(capsys, "ring", "M2Z2")
    assert code == 0
    assert "two_primal: no" in out
    assert "witness" in out


def test_ring_z6(capsys):
    code, out, _ = run_cli(capsys, "ring", "Z6")
    assert code == 0
    assert "reduced: yes" in out
    assert "minimal primes: 2" in out


def test_ring_unknown_exits_2(capsys):
    code, _, err = run_cli(capsys, "ring", "Zx99")
    assert code == 2
    assert "config error" in err


def test_graph_json_z4(capsys):
    code, out, _ = run_cli(capsys, "graph", "Z4", "--nilpotent", "--json", "--quiet")
    assert code == 0
    payload = json.loads(out)
    assert len(payload["vertices"]) == 3
    assert payload["metrics"]["diameter"] == 2
    assert payload["metrics"]["girth"] == "inf"


def test_graph_complete_f2xf2(capsys):
    code, out, _ = run_cli(capsys, "graph", "Z2xZ2", "--nilpotent", "--json", "--quiet")
    assert json.loads(out)["metrics"]["complete"] is True and code == 0


def test_graph_sampled_dot_contains_cycle_vertices(capsys):
    code, out, _ = run_cli(capsys, "graph", "Z6x", "--nilpotent", "--max-degree", "1",
                           "--dot", "--quiet")
    assert code == 0
    for label in ('"2"', '"3"', '"2*x1"', '"3*x1"'):
        assert label in out


def test_graph_byte_identical_runs(capsys):
    _, first, _ = run_cli(capsys, "graph", "Z8", "--nilpotent", "--json", "--quiet")
    _, second, _ = run_cli(capsys, "graph", "Z8", "--nilpotent", "--json", "--quiet")
    assert first == second


def test_graph_precondition_failure_exits_1(capsys):
    code, _, err = run_cli(capsys, "graph", "Z2xZ2swap", "--nilpotent", "--quiet")
    assert code == 1
    assert "PreconditionUnverified" in err


def test_export_writes_file(tmp_path, capsys):
    out_file = tmp_path / "g.dot"
    code, out, _ = run_cli(capsys, "export", "Z4", "--nilpotent", "--dot",
                           "--out", str(out_file))
    assert code == 0 and out == ""
    assert out_file.read_text().startswith("graph {")


def test_export_requires_out(capsys):
    code, _, err = run_cli(capsys, "export", "Z4", "--dot")
    assert code == 2 and "--out" in err


def test_compat_report(capsys):
    code, out, _ = run_cli(capsys, "compat", "F4frob")
    assert code == 0
    assert "sigma_rigid: True" in out
    code, out, _ = run_cli(capsys, "compat", "Z2xZ2swap")
    assert code == 0
    assert "sigma_compatible: False" in out
    assert "witness" in out


def test_config_user_ring_and_spec(tmp_path, capsys):
    config = {
        "rings": {"Z9": {"kind": "zmod", "n": 9}},
        "specs": {"Z9x": {"ring": "Z9", "vars": 1}},
    }
    path = tmp_path / "cfg.json"
    path.write_text(json.dumps(config))
    code, out, _ = run_cli(capsys, "--config", str(path), "ring", "Z9")
    assert code == 0
    assert "nilpotents: {0, 3, 6}" in out
    code, out, _ = run_cli(capsys, "--config", str(path), "graph", "Z9x",
                           "--nilpotent", "--max-degree", "1", "--json", "--quiet")
    assert code == 0
    assert json.loads(out)["metrics"]["girth"] == 3


def test_config_undefined_reference_exits_2(tmp_path, capsys):
    path = tmp_path / "cfg.json"
    path.write_text(json.dumps({"specs": {"S": {"ring": "NoSuch"}}}))
    code, _, err = run_cli(capsys, "--config", str(path), "ring", "Z4")
    assert code == 2
    assert "undefined ring" in err


def test_config_invalid_json_reports_position(tmp_path, capsys):
    path = tmp_path / "cfg.json"
    path.write_text('{"rings": {')
    code, _, err = run_cli(capsys, "--config", str(path), "ring", "Z4")
    assert code == 2
    assert "line" in err


def test_verify_default_corpus_green(tmp_path, capsys):
    json_out = tmp_path / "report.json"
    md_out = tmp_path / "report.md"
    code, out, _ = run_cli(capsys, "verify", "--json-out", str(json_out),
                           "--md-out", str(md_out))
    assert code == 0
    assert "0 fail" in out
    payload = json.loads(json_out.read_text())
    assert payload["summary"]["fail"] == 0
    assert "Verification report" in md_out.read_text()


def test_verify_corrupted_expectation_exits_1(tmp_path, capsys):
    config = {"expected": {"Z4": {"gamma_n_diameter": 9}}}
    path = tmp_path / "cfg.json"
    path.write_text(json.dumps(config))
    code, out, _ = run_cli(capsys, "--config", str(path), "verify",
                           "--json-out", str(tmp_path / "r.json"),
                           "--md-out", str(tmp_path / "r.md"))
    assert code == 1
    assert "FAIL" in out and "expected_gamma_n_diameter" in out
