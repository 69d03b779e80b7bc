import pytest

from frugalhom import Digraph, MonotoneSatInstance, UGraph
from frugalhom.cli import run
from frugalhom.fileio import (
    parse_colouring,
    read_digraph,
    read_sat_instance,
    read_ugraph,
    write_digraph,
    write_sat_instance,
    write_ugraph,
)

TWO_IN = Digraph(3, [(0, 2), (1, 2)])
C2 = Digraph(2, [(0, 1), (1, 0)])
C4 = Digraph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, g in [("two_in", TWO_IN), ("c2", C2), ("c4", C4)]:
        p = tmp_path / f"{name}.dg"
        write_digraph(str(p), g)
        paths[name] = str(p)
    return tmp_path, paths


def test_classify_npc(files, capsys):
    _, paths = files
    assert run(["classify", "-H", paths["two_in"], "-t", "2"]) == 0
    out = capsys.readouterr()
    assert out.out.splitlines()[0] == "NPC"


def test_classify_explain(files, capsys):
    _, paths = files
    assert run(["classify", "-H", paths["c2"], "-t", "2", "--explain"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "P"
    assert "delta_minus: 1" in lines


def test_solve_verify_pipeline(files):
    tmp, paths = files
    cert = str(tmp / "c4.map")
    assert run(["solve", "-G", paths["c4"], "-H", paths["c2"], "-t", "2", "--cert", cert]) == 0
    assert run(["verify", "-G", paths["c4"], "-H", paths["c2"], "-t", "2", "--cert", cert]) == 0


def test_verify_rejects_frugality_violation(files, tmp_path):
    _, paths = files
    g_path = tmp_path / "sink.dg"
    write_digraph(str(g_path), Digraph(3, [(0, 2), (1, 2)]))
    cert = tmp_path / "f.map"
    cert.write_text("map 3\n0 0\n1 0\n2 2\n")
    # both in-neighbours of the sink share colour 0: fine at t=2, not at t=1
    assert run(["verify", "-G", str(g_path), "-H", paths["two_in"], "-t", "2", "--cert", str(cert)]) == 0
    assert run(["verify", "-G", str(g_path), "-H", paths["two_in"], "-t", "1", "--cert", str(cert)]) == 1


def test_solve_no_answer_exit_1(files, tmp_path):
    _, paths = files
    k3 = tmp_path / "k3.dg"
    write_digraph(str(k3), Digraph(3, [(u, v) for u in range(3) for v in range(3) if u != v]))
    assert run(["solve", "-G", str(k3), "-H", paths["c2"], "-t", "2"]) == 1


def test_solve_budget_exit_3(files, capsys):
    _, paths = files
    assert run(["solve", "-G", paths["c4"], "-H", paths["c2"], "-t", "2", "--budget", "1"]) == 3
    assert capsys.readouterr().err.startswith("error:")


def test_solve_prints_certificate_without_output_flag(files, capsys):
    _, paths = files
    assert run(["solve", "-G", paths["c4"], "-H", paths["c2"], "-t", "2"]) == 0
    f = parse_colouring(capsys.readouterr().out)
    assert len(f) == 4


def test_indicator_output_reparses(files, tmp_path):
    _, paths = files
    out = tmp_path / "ind.ug"
    assert run(["indicator", "-H", paths["two_in"], "-o", str(out)]) == 0
    assert read_ugraph(str(out)) == UGraph(3, [(0, 1)])


def test_gadget_f0(files, tmp_path, capsys):
    out = tmp_path / "f0.dg"
    assert run(["gadget", "f0", "--t", "2", "--delta", "2", "-o", str(out)]) == 0
    g = read_digraph(str(out))
    assert g.n == 7 and len(g.arcs) == 8
    legend = dict(
        line.split(maxsplit=1) for line in capsys.readouterr().out.splitlines()
    )
    assert set(legend) == {"w", "x", "y", "z", "commons"}


def test_gadget_f1_markers(files, tmp_path, capsys):
    out = tmp_path / "f1.dg"
    assert run(["gadget", "f1", "--t", "3", "--delta", "2", "-o", str(out)]) == 0
    assert read_digraph(str(out)).n == 9
    line = capsys.readouterr().out.splitlines()[0]
    assert line.startswith("markers ") and len(line.split()) == 3


def test_verify_out_of_range_certificate(files, tmp_path):
    _, paths = files
    cert = tmp_path / "bad.map"
    cert.write_text("map 4\n0 0\n1 9\n2 0\n3 1\n")  # image 9 exceeds the target
    assert run(["verify", "-G", paths["c4"], "-H", paths["c2"], "-t", "2", "--cert", str(cert)]) == 1


def test_gadget_bad_parameters_exit_2(files, tmp_path, capsys):
    out = tmp_path / "f0.dg"
    assert run(["gadget", "f0", "--t", "1", "--delta", "2", "-o", str(out)]) == 2
    assert capsys.readouterr().err.startswith("error:")


def test_reduce_hstar_with_legend(files, tmp_path):
    _, paths = files
    g_path = tmp_path / "k2.ug"
    write_ugraph(str(g_path), UGraph(2, [(0, 1)]))
    out = tmp_path / "star.dg"
    legend = tmp_path / "legend.txt"
    code = run(
        ["reduce", "hstar", "-G", str(g_path), "-H", paths["two_in"], "-t", "2",
         "-o", str(out), "--legend", str(legend)]
    )
    assert code == 0
    star = read_digraph(str(out))
    assert star.n == 9 and len(star.arcs) == 11
    rows = [line.split() for line in legend.read_text().splitlines()]
    assert [r[0] for r in rows] == ["0", "1"]  # total over origin vertices


def test_reduce_sat(files, tmp_path):
    _, paths = files
    s_path = tmp_path / "s.mks"
    write_sat_instance(str(s_path), MonotoneSatInstance(4, 4, [(0, 1, 2, 3)]))
    out = tmp_path / "inc.dg"
    assert run(["reduce", "sat", "-S", str(s_path), "-t", "2", "-o", str(out)]) == 0
    assert read_digraph(str(out)).n == 5


def test_sat_solve_check_pipeline(tmp_path):
    s_path = tmp_path / "s.mks"
    write_sat_instance(str(s_path), MonotoneSatInstance(3, 3, [(0, 1, 2)]))
    cert = tmp_path / "a.asg"
    assert run(["sat", "solve", "-S", str(s_path), "-l", "1", "--cert", str(cert)]) == 0
    assert run(["sat", "check", "-S", str(s_path), "-l", "1", "--cert", str(cert)]) == 0
    assert run(["sat", "check", "-S", str(s_path), "-l", "2", "--cert", str(cert)]) == 1


def test_sat_solve_unsat_exit_1(tmp_path):
    s_path = tmp_path / "s.mks"
    write_sat_instance(str(s_path), MonotoneSatInstance(2, 2, [(0, 1)]))
    assert run(["sat", "solve", "-S", str(s_path), "-l", "1"]) == 0
    # both true and both false cannot each hold
    unsat = tmp_path / "u.mks"
    write_sat_instance(str(unsat), MonotoneSatInstance(3, 2, [(0, 1), (0, 2), (1, 2)]))
    assert run(["sat", "solve", "-S", str(unsat), "-l", "1"]) == 1


def test_sat_transform_subcommands(tmp_path):
    s_path = tmp_path / "s.mks"
    write_sat_instance(str(s_path), MonotoneSatInstance(3, 3, [(0, 1, 2)]))
    widened = tmp_path / "w.mks"
    assert run(["sat", "widen", "-S", str(s_path), "-l", "1", "-o", str(widened)]) == 0
    assert read_sat_instance(str(widened)).k == 4
    lifted = tmp_path / "l.mks"
    assert run(["sat", "lift", "-S", str(s_path), "-l", "2", "-o", str(lifted)]) == 0
    assert read_sat_instance(str(lifted)).k == 4
    chained = tmp_path / "c.mks"
    assert run(["sat", "chain", "-S", str(s_path), "-l", "2", "-k", "5", "-o", str(chained)]) == 0
    assert read_sat_instance(str(chained)).k == 5


def test_core_subcommand(files, capsys):
    _, paths = files
    assert run(["core", "-H", paths["c2"]]) == 0
    assert capsys.readouterr().out.strip() == "cycles 2"


def test_decide_subcommand(files, tmp_path):
    _, paths = files
    assert run(["decide", "-G", paths["c4"], "-H", paths["c2"], "-t", "2"]) == 0
    c3 = tmp_path / "c3.dg"
    write_digraph(str(c3), Digraph(3, [(0, 1), (1, 2), (2, 0)]))
    assert run(["decide", "-G", str(c3), "-H", paths["c2"], "-t", "2"]) == 1


def test_decide_high_indegree_target_exit_2(files, capsys):
    _, paths = files
    assert run(["decide", "-G", paths["c4"], "-H", paths["two_in"], "-t", "2"]) == 2
    assert capsys.readouterr().err.startswith("error:")


def test_parse_error_exit_2(files, tmp_path, capsys):
    bad = tmp_path / "bad.dg"
    bad.write_text("digraph 2 2\n0 1\n0 1\n")
    _, paths = files
    assert run(["classify", "-H", str(bad), "-t", "2"]) == 2
    assert capsys.readouterr().err.startswith("error:")


def test_missing_file_exit_2(files, capsys):
    assert run(["classify", "-H", "/nonexistent.dg", "-t", "2"]) == 2
    assert capsys.readouterr().err.startswith("error:")


def test_usage_error_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        run(["classify"])
    assert exc.value.code == 2
    assert "error:" in capsys.readouterr().err
