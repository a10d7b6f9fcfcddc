from __future__ import annotations

import json
import subprocess
import sys

import jsonschema
import networkx as nx
import pytest

from chromsym import cli
from chromsym import graph as G
from chromsym.graph6 import decode
from chromsym.report import REPORT_SCHEMA, TSV_COLUMNS, build_report
from chromsym.symfun import is_positive, parse
from chromsym.verify import CheckResult

from conftest import to_nx


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def reports(out):
    return [json.loads(line) for line in out.splitlines() if line.strip()]


def test_compute_named_examples(capsys):
    code, out, _ = run(capsys, "compute", "--name", "claw", "--name", "complete:5", "--name", "path:1")
    assert code == 0
    claw, k5, k1 = reports(out)
    assert claw["e_expansion"] == "4e[4] + 5e[3,1] - 2e[2,2] + e[2,1,1]"
    assert claw["e_positive"] is False and claw["alpha"] == 3
    assert k5["e_expansion"] == "120e[5]"
    assert k1["e_expansion"] == "e[1]"


@pytest.mark.parametrize("name", ["three-sun", "claw", "paw", "co-diamond", "pyramid:2,1,1", "cycle:6",
                                  "empty:3", "P4"])
def test_report_schema_and_invariants(capsys, name):
    code, out, _ = run(capsys, "compute", "--name", name, "--timings", "--cross-check")
    assert code == 0
    (rep,) = reports(out)
    jsonschema.validate(rep, REPORT_SCHEMA)
    assert rep["e_positive"] == is_positive(parse(rep["e_expansion"]))[0]
    assert rep["s_positive"] == is_positive(parse(rep["s_expansion"]))[0]
    g = cli.named_graph(name)
    assert nx.is_isomorphic(to_nx(decode(rep["graph_id"])), to_nx(g))
    assert rep["timings"]


def test_report_without_timings_is_deterministic(capsys):
    args = ("compute", "--name", "three-sun", "--name", "cycle:7")
    first = run(capsys, *args)[1]
    assert first == run(capsys, *args)[1]
    assert all(r["timings"] == {} for r in reports(first))


def test_tsv_output(capsys):
    code, out, _ = run(capsys, "compute", "--name", "three-sun", "--tsv")
    header, row = out.strip().split("\n")
    assert tuple(header.split("\t")) == TSV_COLUMNS
    cells = row.split("\t")
    assert cells[TSV_COLUMNS.index("e_positive")] == "false"
    assert cells[TSV_COLUMNS.index("s_positive")] == "true"


def test_input_files(tmp_path, capsys):
    g6 = tmp_path / "g.g6"
    g6.write_text(">>graph6<<D?{\nC~\n")
    code, out, _ = run(capsys, "compute", "--input", str(g6))
    assert code == 0 and [r["n"] for r in reports(out)] == [5, 4]
    edges = tmp_path / "g.txt"
    edges.write_text("# the claw\n4 3\n0 1\n0 2\n0 3\n")
    code, out, _ = run(capsys, "compute", "--input", str(edges), "--limit", "1")
    assert reports(out)[0]["e_expansion"].startswith("4e[4]")


def test_parse_errors_exit_3(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("3 2\n0 1\n1 7\n")
    code, _, err = run(capsys, "compute", "--input", str(bad))
    assert code == 3 and "line 3" in err
    bad.write_text("D?{\nC" + chr(33) + "\n")
    code, _, err = run(capsys, "compute", "--input", str(bad), "--format", "graph6")
    assert code == 3 and "byte 5" in err


def test_usage_errors_exit_2(capsys):
    assert run(capsys, "compute", "--name", "bogus")[0] == 2
    assert run(capsys, "compute")[0] == 2
    assert run(capsys, "free-check", "--name", "claw", "--free", "nope")[0] == 2
    assert run(capsys, "survey", "13")[0] == 2
    with pytest.raises(SystemExit) as info:
        cli.main(["compute", "--no-such-flag"])
    assert info.value.code == 2


def test_free_check_examples(capsys):
    _, out, _ = run(capsys, "free-check", "--name", "three-sun", "--free", "claw,co-claw")
    assert json.loads(out)["free"] is True
    _, out, _ = run(capsys, "free-check", "--name", "three-sun", "--free", "co-diamond")
    verdict = json.loads(out)
    assert verdict["free"] is False and len(verdict["witness"]) == 4
    sun = G.three_sun()
    assert sum(1 for u in verdict["witness"] for v in verdict["witness"] if u < v and sun.has_edge(u, v)) == 1
    _, out, _ = run(capsys, "free-check", "--name", "complete:3", "--free", ",".join(
        ["claw", "paw", "co-paw", "P4", "K4", "4K1", "C4", "2K2", "diamond", "co-diamond", "co-claw"]))
    assert json.loads(out)["free"] is True


@pytest.mark.parametrize("kinds,expect_bad", [("claw,paw", 0), ("claw,co-paw", 0), ("claw", None)])
def test_survey_examples(capsys, kinds, expect_bad):
    code, out, err = run(capsys, "survey", "6", "--free", kinds)
    assert code == 0
    rows = reports(out)
    bad = [r for r in rows if not r["e_positive"]]
    if expect_bad is None:
        assert bad and any(r["graph_id"] == build_report(G.three_sun()).graph_id for r in bad)
    else:
        assert len(bad) == expect_bad
    assert f"{len(rows)} graphs" in err


def test_threads_preserve_order(capsys):
    serial = run(capsys, "survey", "6", "--free", "claw,P4")[1]
    parallel = run(capsys, "survey", "6", "--free", "claw,P4", "--threads", "3")[1]
    assert serial == parallel


def test_other_commands(capsys):
    code, out, _ = run(capsys, "enumerate", "4", "--exact")
    assert code == 0 and len(out.split()) == 11
    code, out, _ = run(capsys, "k4-bound")
    assert json.loads(out)["counts"]["6"] == 0
    code, out, _ = run(capsys, "pyramid-sweep", "--max-total", "7", "--tsv")
    assert out.splitlines()[0].split("\t")[:3] == ["p", "q", "r"]
    code, out, err = run(capsys, "explore-codiamond", "6")
    assert code == 0 and "exploratory" in err and "POTENTIAL" not in err
    code, out, _ = run(capsys, "case-check")
    assert code == 0 and json.loads(out)["counts"]["raw_sum"] == 46


def test_verify_exit_codes(capsys, monkeypatch):
    def fake(results):
        def battery(callback=None):
            for r in results:
                if callback:
                    callback(r)
            return results
        return battery

    ok = [CheckResult("C1", "a", True, "x"), CheckResult("C12", "b", False, "y", exploratory=True)]
    monkeypatch.setattr(cli, "run_battery", fake(ok))
    code, out, _ = run(capsys, "verify")
    assert code == 0 and "FLAG [C12]" in out
    monkeypatch.setattr(cli, "run_battery", fake(ok + [CheckResult("C7", "c", False, "z")]))
    code, out, _ = run(capsys, "verify-paper")
    assert code == 1 and "failed C7" in out


def test_console_script_runs():
    proc = subprocess.run([sys.executable, "-m", "chromsym.cli", "compute", "--name", "complete:4", "--tsv"],
                          capture_output=True, text=True, check=True)
    assert "24e[4]" in proc.stdout
