import io
import json
import subprocess
import sys

import pytest

from zeroforcing.cli import main
from zeroforcing.graph6 import write_graph6
from zeroforcing.named import complete_bipartite, cycle, heawood, path, petersen


def run(argv, text=None, tmp_path=None):
    if text is not None:
        path = tmp_path / "in.g6"
        path.write_text(text)
        argv = argv + [str(path)]
    out = io.StringIO()
    code = main(argv, out)
    return code, [json.loads(line) for line in out.getvalue().splitlines() if line.startswith("{")], out.getvalue()


def stream(*graphs):
    return "".join((g if isinstance(g, str) else write_graph6(g)) + "\n" for g in graphs)


def test_number(tmp_path):
    code, recs, _ = run(["number"], stream(petersen()), tmp_path=tmp_path)
    assert code == 0 and recs[0]["z"] == 5 and recs[0]["girth"] == 5


def test_number_with_oracle(tmp_path):
    code, recs, _ = run(["number", "--oracle"], stream(cycle(6), petersen()), tmp_path=tmp_path)
    assert code == 0
    assert [r["oracle_agrees"] for r in recs] == [True, True]


def test_empty_stream(tmp_path):
    code, recs, _ = run(["number"], "", tmp_path=tmp_path)
    assert code == 0 and recs == []


def test_malformed_line_is_isolated(tmp_path):
    code, recs, _ = run(["number"], stream(petersen(), "Dxx!", heawood()), tmp_path=tmp_path)
    assert code == 2
    assert recs[0]["z"] == 5 and "error" in recs[1] and recs[2]["z"] == 6
    assert [r["input_index"] for r in recs] == [0, 1, 2]


def test_check_bound_slack(tmp_path):
    code, recs, _ = run(["check-bound", "--summary"], stream(heawood(), petersen(), "E?~o"), tmp_path=tmp_path)
    assert code == 0
    assert recs[0]["slack"] == 0 and recs[1]["slack"] == 0
    assert recs[-1]["summary"] and recs[-1]["violations"] == 0


def test_check_bound_skips_forests(tmp_path):
    code, recs, _ = run(["check-bound"], stream(path(4)), tmp_path=tmp_path)
    assert code == 0 and recs[0]["status"].startswith("skipped")


def test_lemmas_minimum(tmp_path):
    code, recs, _ = run(["lemmas", "--minimum"], stream(petersen()), tmp_path=tmp_path)
    assert code == 0 and recs[0]["status"] == "pass"
    assert recs[0]["hypothesis_satisfied"] is False


def test_lemmas_given_set(tmp_path):
    code, recs, _ = run(["lemmas", "--set", "0,1"], stream(cycle(5)), tmp_path=tmp_path)
    assert code == 0 and recs[0]["status"] == "pass"
    assert recs[0]["report"]["hypothesis_satisfied"] is False


def test_lemmas_skip_and_error(tmp_path):
    code, recs, _ = run(["lemmas", "--minimum"], stream(complete_bipartite(3, 3)), tmp_path=tmp_path)
    assert code == 0 and recs[0]["status"].startswith("skipped")
    code, recs, _ = run(["lemmas", "--set", "0,2"], stream(cycle(5)), tmp_path=tmp_path)
    assert code == 2 and "error" in recs[0]


def test_extremal():
    code, recs, _ = run(["extremal", "7", "4", "--oracle"])
    assert code == 0 and recs[0]["value"] == 8 and recs[0]["oracle"] == 8 and recs[0]["agree"]
    code, recs, _ = run(["extremal", "5", "3"])
    assert code == 0 and recs[0]["value"] == 6
    assert run(["extremal", "20", "4"])[0] == 2


def test_named():
    code, _, text = run(["named", "heawood", "--emit", "g6"])
    assert code == 0 and text.strip() == write_graph6(heawood())
    code, recs, _ = run(["named", "petersen"])
    assert code == 0 and recs[0]["z"] == 5 and recs[0]["slack"] == 0


def test_unknown_name(capsys):
    assert main(["named", "frucht"], io.StringIO()) == 2
    assert "mcgee" in capsys.readouterr().err


def test_usage_errors():
    assert main([], io.StringIO()) == 2
    assert main(["lemmas"], io.StringIO()) == 2
    assert main(["number", "--workers", "0"], io.StringIO()) == 2


def test_module_entry_point(tmp_path):
    path = tmp_path / "p.g6"
    path.write_text(stream(petersen()))
    proc = subprocess.run([sys.executable, "-m", "zeroforcing", "number", str(path)],
                          capture_output=True, text=True, check=True)
    assert json.loads(proc.stdout)["z"] == 5
