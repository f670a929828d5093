import json
from itertools import combinations

import pytest

from graph_core import parse_graph
from main import EXIT_ERROR, EXIT_INFEASIBLE, EXIT_OK, main
from recognizers import is_quasi_threshold


@pytest.fixture(autouse=True)
def workdir(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    monkeypatch.setenv("NO_FIGLET", "1")
    return tmp_path


def write_graph(path, n, edges):
    lines = [str(n)] + [f"{u} {v}" for u, v in edges]
    path.write_text("\n".join(lines) + "\n")
    return str(path)


def run(capsys, *argv):
    rc = main(list(argv))
    out, err = capsys.readouterr()
    return rc, out, err


def last_error(err):
    return json.loads(err.strip().splitlines()[-1])


def k4(workdir):
    return write_graph(workdir / "k4.txt", 4, combinations(range(4), 2))


# -------------------------
# solve
# -------------------------
def test_solve_cactus_with_qt(capsys, workdir):
    rc, out, _ = run(capsys, "solve", "cactus", k4(workdir), "--method", "qt")
    assert rc == EXIT_OK
    data = json.loads(out)
    assert data["deletions"] == 2
    assert data["method"] == "qt"
    assert data["certificate"]["verdict"] == "accept"


def test_solve_auto_picks_oracle_for_a_hole(capsys, workdir):
    c5 = write_graph(workdir / "c5.txt", 5, [(i, (i + 1) % 5) for i in range(5)])
    rc, out, _ = run(capsys, "solve", "cactus", c5)
    assert rc == EXIT_OK
    data = json.loads(out)
    assert data["method"] == "oracle"
    assert data["deletions"] == 0


def test_solve_constellation_on_a_star(capsys, workdir):
    star = write_graph(workdir / "star.txt", 6, [(0, i) for i in range(1, 6)])
    rc, out, _ = run(capsys, "solve", "constellation", star)
    assert rc == EXIT_OK
    data = json.loads(out)
    assert data["method"] == "domset"
    assert data["deletions"] == 0


def test_solve_disconnected_host(capsys, workdir):
    two = write_graph(workdir / "two.txt", 6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    rc, _, err = run(capsys, "solve", "cactus", two)
    assert rc == EXIT_INFEASIBLE
    assert last_error(err)["error"] == "InfeasibleError"

    rc, out, _ = run(capsys, "solve", "cactus", two, "--per-component")
    assert rc == EXIT_OK
    assert json.loads(out)["label"] == "forest-of-cacti"


def test_solve_is_byte_identical_across_runs(capsys, workdir):
    # two K4 blocks sharing vertex 3, plus a pendant edge
    edges = list(combinations(range(4), 2)) + [(3, 4), (3, 5), (3, 6), (4, 5), (4, 6), (5, 6), (6, 7)]
    graph = write_graph(workdir / "blocks.txt", 8, edges)
    for argv in (["solve", "cactus", graph], ["solve", "cactus", graph, "--shuffle-joins", "--seed", "4"]):
        first = run(capsys, *argv)
        second = run(capsys, *argv)
        assert first[0] == EXIT_OK
        assert first[1] == second[1]


def test_solve_method_must_fit_target(capsys, workdir):
    rc, _, err = run(capsys, "solve", "caterpillar", k4(workdir), "--method", "qt")
    assert rc == EXIT_ERROR
    assert last_error(err)["error"] == "PreconditionError"


def test_solution_verifies(capsys, workdir):
    graph = k4(workdir)
    assert run(capsys, "solve", "cactus", graph, "-o", "sol.json")[0] == EXIT_OK
    rc, out, _ = run(capsys, "verify", graph, "--solution", "sol.json")
    assert rc == EXIT_OK
    assert json.loads(out)["valid"] is True

    (workdir / "bad.json").write_text(json.dumps({"label": "cactus", "kept": [[0, 1]]}))
    rc, out, err = run(capsys, "verify", graph, "--solution", "bad.json")
    assert rc == EXIT_ERROR
    assert json.loads(out)["valid"] is False
    assert last_error(err)["error"] == "CertificateError"


# -------------------------
# reduce / translate
# -------------------------
def test_reduce_hampath_to_caterpillar(capsys, workdir):
    k3 = write_graph(workdir / "k3.txt", 3, [(0, 1), (1, 2), (0, 2)])
    rc, out, _ = run(capsys, "reduce", "hampath-to-caterpillar", k3)
    assert rc == EXIT_OK
    data = json.loads(out)
    assert data["budget"] == 1
    assert data["gadget"]["n"] == 9
    assert data["gadget_text"].startswith("9\n")


def test_reduce_pip3_rejects_triangle(capsys, workdir):
    k3 = write_graph(workdir / "k3.txt", 3, [(0, 1), (1, 2), (0, 2)])
    rc, _, err = run(capsys, "reduce", "pip3-to-cactus", k3)
    assert rc == EXIT_ERROR
    assert last_error(err)["error"] == "PreconditionError"


def test_reduce_domset_with_a_set(capsys, workdir):
    c4 = write_graph(workdir / "c4.txt", 4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    rc, out, _ = run(capsys, "reduce", "domset-to-constellation", c4, "--set", "0,2")
    assert rc == EXIT_OK
    data = json.loads(out)
    assert data["budget"] == 2
    assert data["solution"]["deletions"] == 2


def test_translate_both_ways(capsys, workdir):
    p4 = write_graph(workdir / "p4.txt", 4, [(0, 1), (1, 2), (2, 3)])
    assert run(capsys, "reduce", "hampath-to-caterpillar", p4, "--bundle", "b.json")[0] == EXIT_OK
    (workdir / "path.json").write_text(json.dumps({"path": [0, 1, 2, 3]}))

    rc, _, _ = run(capsys, "translate", "path.json", "--bundle", "b.json", "-o", "forward.json")
    assert rc == EXIT_OK
    forward = json.loads((workdir / "forward.json").read_text())
    assert forward["direction"] == "forward"
    assert forward["deletions"] == 0

    rc, out, _ = run(capsys, "translate", "forward.json", "--bundle", "b.json", "--direction", "backward")
    assert rc == EXIT_OK
    assert json.loads(out)["path"] in ([0, 1, 2, 3], [3, 2, 1, 0])


# -------------------------
# oracle / recognize / gen / info
# -------------------------
def test_oracle_hampath(capsys, workdir):
    c4 = write_graph(workdir / "c4.txt", 4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    rc, out, _ = run(capsys, "oracle", "hampath", c4)
    assert rc == EXIT_OK
    assert json.loads(out) == {"problem": "hampath", "optimum": 4, "witness": [0, 1, 2, 3]}


def test_oracle_pi_equivalence(capsys, workdir):
    p4 = write_graph(workdir / "p4.txt", 4, [(0, 1), (1, 2), (2, 3)])
    rc, out, _ = run(capsys, "oracle", "pi-equiv", p4, "--pi", "linear-forest")
    assert rc == EXIT_OK
    assert json.loads(out)["witness"]["answer"] == "yes"


def test_recognize_hole(capsys, workdir):
    c4 = write_graph(workdir / "c4.txt", 4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    rc, out, _ = run(capsys, "recognize", c4, "--class", "chordal")
    assert rc == EXIT_OK
    [cert] = json.loads(out)["certificates"]
    assert cert["label"] == "chordal" and cert["verdict"] == "reject"


def test_gen_is_seeded(capsys):
    first = run(capsys, "gen", "qt-random", "--n", "7", "--seed", "3")
    second = run(capsys, "gen", "qt-random", "--n", "7", "--seed", "3")
    assert first[0] == EXIT_OK
    assert first[1] == second[1]
    g = parse_graph(first[1].encode())
    assert g.n == 7 and is_quasi_threshold(g)


def test_gen_bipartite_subcubic_needs_multiple_of_three(capsys):
    rc, _, err = run(capsys, "gen", "bipartite-subcubic", "--n", "7")
    assert rc == EXIT_ERROR
    assert last_error(err)["error"] == "PreconditionError"


def test_info_shows_overrides(capsys):
    rc, out, _ = run(capsys, "info", "--limit", "hampath_max_n=5")
    assert rc == EXIT_OK
    assert "CACTUSKIT" in out
    assert "hampath_max_n: 5  (overridden)" in out
    assert "domset_max_n: 24\n" in out


# -------------------------
# usage and configuration errors
# -------------------------
@pytest.mark.parametrize(
    "argv, error",
    [
        ([], "CliUsageError"),
        (["solve"], "CliUsageError"),
        (["info", "--limit", "flux_max=3"], "ConfigValidationError"),
        (["verify", "k4.txt"], "CliUsageError"),
    ],
)
def test_usage_errors_exit_one(capsys, workdir, argv, error):
    k4(workdir)
    rc, _, err = run(capsys, *argv)
    assert rc == EXIT_ERROR
    assert last_error(err)["error"] == error


def test_clear_logs_uses_configured_directory(capsys, workdir):
    (workdir / "settings.yml").write_text("logging:\n  dir: runlogs\n")
    for name in ("runlogs", "logs"):
        (workdir / name).mkdir()
        (workdir / name / "old.log").write_text("x\n")
    rc, out, _ = run(capsys, "--clear-logs")
    assert rc == EXIT_OK
    assert "1 old log files deleted" in out
    assert not (workdir / "runlogs" / "old.log").exists()
    assert (workdir / "logs" / "old.log").exists()
