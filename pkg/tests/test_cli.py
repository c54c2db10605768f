import json
import subprocess
import sys

import pytest

from konig.cli import main
from konig.graphs import format_graph, net_graph, path_graph, to_graph6
from konig.trees import worked_tree


@pytest.fixture
def write(tmp_path):
    def _write(name, text):
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    return _write


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_info_net(capsys, write):
    code, out, _ = run(capsys, "info", write("net.txt", format_graph(net_graph())))
    assert code == 0
    assert "grade 5, LF 4, König: no" in out
    assert "cover: NONE" in out


def test_info_accepts_graph6(capsys, write):
    code, out, _ = run(capsys, "info", write("p4.g6", to_graph6(path_graph(4)) + "\n"))
    assert code == 0 and "König: yes" in out and "S: {}" in out


def test_cover_find_and_verify(capsys, write):
    path = write("p4.txt", format_graph(path_graph(4)))
    code, out, _ = run(capsys, "cover", "find", path)
    assert code == 0 and "F: 1-2 2-3 3-4" in out
    assert run(capsys, "cover", "verify", path, "--forest", "1-2,2-3,3-4")[0] == 0
    code, out, _ = run(capsys, "cover", "verify", path, "--forest", "1-2,2-3,3-4", "--s", "1")
    assert code == 1 and "criterion 1" in out
    assert run(capsys, "cover", "verify", path)[0] == 2
    assert run(capsys, "cover", "verify", path, "--forest", "1-3")[0] == 2
    assert run(capsys, "cover", "verify", path, "--forest", "1:2")[0] == 2


def test_tree_trace(capsys, write):
    code, out, _ = run(capsys, "tree", write("t.txt", format_graph(worked_tree())), "--trace")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("step 1: case2-leg b=3")
    assert "S: {3, 7}" in out and "grade 7; verified: yes" in out


def test_tree_rejects_cycle(capsys, write):
    code, _, err = run(capsys, "tree", write("c.txt", "n 3\ne 1 2\ne 2 3\ne 1 3\n"))
    assert code == 2 and "not a tree" in err


def test_bad_graph_file(capsys, write):
    code, _, err = run(capsys, "info", write("bad.txt", "n 3\ne 1 4\n"))
    assert code == 2 and "line 2" in err
    assert run(capsys, "info", "/nonexistent/file")[0] == 2
    assert run(capsys, "frobnicate")[0] == 2


def test_sweep_outputs_identical_across_jobs(capsys, tmp_path):
    outs = []
    for jobs in ("1", "2"):
        csv_path = tmp_path / f"s{jobs}.csv"
        code, out, _ = run(capsys, "sweep", "--class", "all", "--max-n", "5", "--jobs", jobs, "--out", str(csv_path))
        assert code == 0
        outs.append((csv_path.read_bytes(), csv_path.with_suffix(".json").read_bytes()))
    assert outs[0] == outs[1]
    assert outs[0][0].startswith(b"graph6,n,edges,grade,lf,konig,cover_s\n")


def test_sweep_all_reports_net_but_succeeds(capsys):
    code, out, _ = run(capsys, "sweep", "--class", "all", "--max-n", "6")
    assert code == 0 and "non-coverable: 1" in out and "counterexamples: 0" in out


def test_sweep_exit_codes(capsys, write):
    stream = write("g.g6", to_graph6(net_graph()) + "\n")
    assert run(capsys, "sweep", "--graph6", stream, "--check", "tree-algorithm")[0] == 1
    assert run(capsys, "sweep", "--graph6", stream)[0] == 0
    assert run(capsys, "sweep", "--graph6", write("bad.g6", "A_\n!!\n"))[0] == 2
    assert run(capsys, "sweep")[0] == 2


def test_verify_suite(capsys, tmp_path):
    js = tmp_path / "r.json"
    code, out, _ = run(capsys, "verify", "--suite", "regseq", "--n", "4", "--char", "3", "--json", str(js))
    assert code == 0 and out.rstrip().endswith("suite regseq: pass")
    assert len(json.loads(js.read_text())) == 4
    assert run(capsys, "verify", "--suite", "colon", "--n", "2")[0] == 2
    assert run(capsys, "verify", "--suite", "pd", "--n", "9")[0] == 3  # beyond the size caps
    assert run(capsys, "verify", "--suite", "pd", "--n", "3", "--char", "4")[0] == 2


IDEAL = "char 3\nn 3\nx1*y2 - x2*y1\nx2*y3 - x3*y2\n"


def test_ideal_commands(capsys, write):
    a = write("a.txt", IDEAL)
    code, out, _ = run(capsys, "ideal", "gb", a)
    assert code == 0 and out.splitlines()[:2] == ["char 3", "n 3"] and len(out.splitlines()) == 4
    assert run(capsys, "ideal", "member", a, "--poly", "x1*y3 - x3*y1")[0] == 1
    assert run(capsys, "ideal", "member", a, "--poly", "x1*(y2)")[0] == 2
    code, out, _ = run(capsys, "ideal", "member", a, "--poly", "x1*y2 - x2*y1")
    assert code == 0 and out.strip() == "member"
    assert run(capsys, "ideal", "equal", a, a)[0] == 0
    b = write("b.txt", "char 3\nn 3\nx1\n")
    assert run(capsys, "ideal", "equal", a, b)[0] == 1
    assert run(capsys, "ideal", "intersect", a, b)[0] == 0
    code, out, _ = run(capsys, "ideal", "colon", a, "--poly", "x2")
    assert code == 0
    assert run(capsys, "ideal", "colon", a, b)[0] == 0
    assert run(capsys, "ideal", "colon", a)[0] == 2
    assert run(capsys, "ideal", "equal", a, write("c.txt", "char 5\nn 3\nx1\n"))[0] == 2


def test_module_entry_point(write):
    path = write("p3.txt", format_graph(path_graph(3)))
    proc = subprocess.run([sys.executable, "-m", "konig", "info", path], capture_output=True, text=True)
    assert proc.returncode == 0 and "grade 2, LF 2" in proc.stdout
