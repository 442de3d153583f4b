import json

import pytest

from sparsedom import oracles
from sparsedom.cli import EXIT_BUDGET, EXIT_CHECK_FAILED, EXIT_OK, EXIT_USAGE, main
from sparsedom.generators import complete_graph, cycle_graph, path_graph
from sparsedom.graph import load_graph, save_graph
from sparsedom.orderings import load_ordering


@pytest.fixture
def p5(tmp_path):
    path = tmp_path / "p5.txt"
    save_graph(path_graph(5), str(path))
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_dominate_path(capsys, p5):
    code, out, _ = run(capsys, "dominate", p5, "--k", "1", "--m", "2")
    assert code == EXIT_OK
    rec = json.loads(out)
    assert rec["size_D"] <= rec["c"] ** 2 * rec["size_A"]
    assert all(rec["verified"].values())
    assert oracles.verify_dominating(path_graph(5), rec["D"], 1)


def test_dominate_is_byte_identical(capsys, p5):
    first = run(capsys, "dominate", p5, "--k", "2", "--ordering", "adm-approx")[1]
    second = run(capsys, "dominate", p5, "--k", "2", "--ordering", "adm-approx")[1]
    assert first == second


def test_dominate_text(capsys, p5):
    code, out, _ = run(capsys, "dominate", p5, "--k", "1", "--format", "text")
    assert code == EXIT_OK and "verified ratio: ok" in out and "|A'|:" in out


def test_dominate_m_out_of_range(capsys, p5):
    code, _, err = run(capsys, "dominate", p5, "--k", "1", "--m", "4")
    assert code == EXIT_USAGE and "2k+1" in err


def test_dominate_empty_file(capsys, tmp_path):
    empty = tmp_path / "empty.txt"
    empty.write_text("")
    assert run(capsys, "dominate", str(empty))[0] == EXIT_USAGE


def test_dominate_bad_ordering_file(capsys, p5, tmp_path):
    bad = tmp_path / "ord.txt"
    bad.write_text("3\n0\n1\n2\n")
    assert run(capsys, "dominate", p5, "--ordering", f"file:{bad}")[0] == EXIT_USAGE
    missing = tmp_path / "nope.txt"
    assert run(capsys, "dominate", p5, "--ordering", f"file:{missing}")[0] == EXIT_USAGE


def test_dominate_pmax_too_low(capsys, tmp_path):
    path = tmp_path / "k5.txt"
    save_graph(complete_graph(5), str(path))
    code = run(capsys, "dominate", str(path), "--ordering", "adm-exact", "--pmax", "2")[0]
    assert code == EXIT_USAGE


def test_generate_and_order(capsys, tmp_path):
    gpath, opath = tmp_path / "g5.txt", tmp_path / "g5.ord"
    code = run(capsys, "generate", "lower_bound:5,1", "--out", str(gpath), "--ordering-out", str(opath))[0]
    assert code == EXIT_OK
    g = load_graph(str(gpath))
    assert g.n == 5 + 10 + 1
    assert load_ordering(str(opath)).order[0] == g.n - 1

    code, out, _ = run(capsys, "dominate", str(gpath), "--k", "1", "--m", "2", "--ordering", f"file:{opath}")
    assert code == EXIT_OK and json.loads(out)["ordering"] == "file"

    out_ord = tmp_path / "adm.ord"
    code, _, err = run(capsys, "order", str(gpath), "--m", "1", "--ordering", "adm-exact", "--out", str(out_ord))
    info = json.loads(err)
    assert code == EXIT_OK and info["adm"] == 3 and info["wcol"] == 4
    assert len(load_ordering(str(out_ord))) == g.n


def test_generate_to_stdout(capsys):
    code, out, _ = run(capsys, "generate", "cycle:4")
    assert code == EXIT_OK and out.splitlines()[0] == "4 4"


def test_exact(capsys, tmp_path):
    c6 = tmp_path / "c6.txt"
    save_graph(cycle_graph(6), str(c6))
    code, out, _ = run(capsys, "exact", str(c6), "--k", "1")
    rec = json.loads(out)
    assert code == EXIT_OK and rec["dom_k"] == 2

    k4 = tmp_path / "k4.txt"
    save_graph(complete_graph(4), str(k4))
    rec = json.loads(run(capsys, "exact", str(k4), "--k", "1", "--m", "2")[1])
    assert (rec["wcol_m"], rec["col_m"], rec["adm_m"]) == (4, 4, 3)


def test_exact_budget_refusal(capsys, tmp_path):
    big = tmp_path / "p50.txt"
    save_graph(path_graph(50), str(big))
    assert run(capsys, "exact", str(big))[0] == EXIT_BUDGET
    code, out, _ = run(capsys, "exact", str(big), "--budget-n", "50", "--k", "3")
    assert code == EXIT_OK and json.loads(out)["dom_k"] == 8


def test_verify(capsys, p5, tmp_path):
    cert = tmp_path / "cert.jsonl"
    run(capsys, "dominate", p5, "--k", "1", "--m", "2", "--out", str(cert))
    code, out, _ = run(capsys, "verify", p5, str(cert))
    assert code == EXIT_OK and json.loads(out)["dominating"] is True

    rec = json.loads(cert.read_text())
    rec["D"] = [0]
    cert.write_text(json.dumps(rec) + "\n")
    code, out, _ = run(capsys, "verify", p5, str(cert))
    assert code == EXIT_CHECK_FAILED and json.loads(out)["dominating"] is False


def test_bench(capsys, tmp_path):
    corpus = tmp_path / "corpus"
    corpus.mkdir()
    save_graph(cycle_graph(8), str(corpus / "c8.txt"))
    save_graph(path_graph(9), str(corpus / "p9.txt"))
    (corpus / "broken.txt").write_text("3 1\n0 0\n")
    code, out, _ = run(capsys, "bench", str(corpus), "grid:5x5", "--k", "1", "--m", "2", "--no-time")
    rows = [json.loads(line) for line in out.splitlines()]
    assert code == EXIT_OK and len(rows) == 4
    by_name = {r["instance"]: r for r in rows}
    assert "self-loop" in by_name["broken.txt"]["error"]
    for name in ("c8.txt", "p9.txt", "grid:5x5"):
        r = by_name[name]
        assert r["verified"] and r["size_D"] <= r["c_squared"] * r["size_A"]
        assert r["label_decreases"] <= r["decrease_bound"]
        assert "wall_time" not in r
    again = run(capsys, "bench", str(corpus), "grid:5x5", "--k", "1", "--m", "2", "--no-time")[1]
    assert again == out


def test_bench_empty(capsys, tmp_path):
    (tmp_path / "empty").mkdir()
    code, out, _ = run(capsys, "bench", str(tmp_path / "empty"))
    assert code == EXIT_OK and out == ""


def test_bench_parallel_matches_serial(capsys):
    args = ["bench", "grid:6x6", "cycle:9", "random:40,60", "--k", "2", "--no-time"]
    serial = run(capsys, *args)[1]
    parallel = run(capsys, *args, "--jobs", "2")[1]
    assert serial == parallel
