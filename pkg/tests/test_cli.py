from __future__ import annotations

import json
import re

import pytest

from arithinv.cli import main
from arithinv.scenarios import Options, report_json, report_markdown, run_many

FAST = ["craig-v-ratio", "g4-l2", "symm-L0-n3"]


def _run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_all_pass_exit_zero(capsys):
    code, out, _ = _run(capsys, "run", *sum((["--scenario", n] for n in FAST), []))
    assert code == 0
    doc = json.loads(out)
    assert [r["name"] for r in doc["scenarios"]] == FAST
    for r in doc["scenarios"]:
        assert set(r) == {"name", "paper_ref", "status", "witness", "flags", "ms"}
        assert r["status"] == "PASS" and isinstance(r["ms"], int)


def test_failure_exit_one(capsys):
    code, out, _ = _run(capsys, "run", "--scenario", "g8-relation")
    assert code == 1
    assert json.loads(out)["scenarios"][0]["status"] == "FAIL"


@pytest.mark.parametrize(
    "argv",
    [
        ["run", "--scenario", "no-such-scenario"],
        ["run"],
        ["run", "--scenario", "g12-polynomial", "--max-order", "10"],
        ["run", "--scenario", "g22-leading-p", "--max-degree", "6"],
    ],
)
def test_configuration_and_resource_errors_exit_two(capsys, argv):
    code, _, err = _run(capsys, *argv)
    assert code == 2
    assert err


def test_config_file_and_flag_precedence(capsys, tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"max_order": 10}))
    code, _, err = _run(capsys, "run", "--config", str(cfg), "--scenario", "g4-l2")
    assert code == 2 and "resource limit" in err
    code, _, _ = _run(capsys, "run", "--config", str(cfg), "--max-order", "4000", "--scenario", "g4-l2")
    assert code == 0
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"colour": 1}))
    code, _, _ = _run(capsys, "run", "--config", str(bad), "--scenario", "g4-l2")
    assert code == 2


def test_json_and_markdown_hold_the_same_records(capsys, tmp_path):
    names = FAST + ["g8-relation"]
    argv = sum((["--scenario", n] for n in names), [])
    _run(capsys, "run", *argv, "--format", "json", "--output", str(tmp_path / "r.json"))
    _run(capsys, "run", *argv, "--format", "md", "--output", str(tmp_path / "r.md"))
    doc = json.loads((tmp_path / "r.json").read_text())
    md = (tmp_path / "r.md").read_text()
    rows = re.findall(r"^\| ([\w+-]+) \| (PASS|FAIL) \|", md, re.M)
    assert rows == [(r["name"], r["status"]) for r in doc["scenarios"]]
    for r in doc["scenarios"]:
        assert r["paper_ref"] in md
        if r["witness"] is not None:
            assert json.dumps(r["witness"], sort_keys=True) in md


def test_empty_report_is_valid():
    assert report_json([]) == {"scenarios": []}
    assert report_markdown([]).startswith("| scenario |")


def test_outcomes_do_not_depend_on_order_or_parallelism():
    names = FAST + ["g8-relation"]
    seq, _ = run_many(names, Options())
    rev, _ = run_many(list(reversed(names)), Options())
    par, _ = run_many(names, Options(jobs=2))

    def key(records):
        return sorted((r.name, r.status, json.dumps(r.witness, sort_keys=True), tuple(r.flags)) for r in records)

    assert key(seq) == key(rev) == key(par)
    assert [r.name for r in par] == names


def test_catalog_list(capsys):
    code, out, _ = _run(capsys, "catalog", "list")
    assert code == 0
    lines = out.strip().splitlines()
    assert any(line.startswith("G12 ") and "order=48" in line and "degrees=6,8" in line for line in lines)
    assert any(line.startswith("S6/L3") for line in lines)


def test_scenario_listing(capsys):
    code, out, _ = _run(capsys, "scenarios")
    assert code == 0 and "g8-not-polynomial" in out
