from __future__ import annotations

import io
from importlib.resources import files

import pytest

from h3g.cli import main


def fixture(name: str) -> str:
    return str(files("h3g").joinpath("fixtures", f"{name}.h3g"))


def run(capsys, *argv: str) -> tuple[int, str]:
    code = main(list(argv))
    return code, capsys.readouterr().out


def feed(monkeypatch, text: str) -> None:
    monkeypatch.setattr("sys.stdin", io.StringIO(text))


def test_count_trees_complete7(capsys):
    assert run(capsys, "count-trees", fixture("complete7")) == (0, "735\n")


def test_count_trees_zero_is_negative(capsys, monkeypatch):
    _, text = run(capsys, "gen", "twin")
    feed(monkeypatch, text)
    assert run(capsys, "count-trees", "-") == (1, "0\n")


def test_decide_table3_gives_witness(capsys):
    code, out = run(capsys, "decide-3pfaffian", fixture("table3"))
    assert code == 0
    assert out.splitlines() == ["WITNESS flip: 01c 02d 03e 04a 5ae", "sign +1"]


def test_generated_interlaced4_gives_certificate(capsys, monkeypatch):
    _, text = run(capsys, "gen", "interlaced", "4")
    feed(monkeypatch, text)
    code, out = run(capsys, "decide-3pfaffian", "-")
    lines = out.splitlines()
    assert code == 1 and lines[0] == "CERTIFICATE" and lines[-1] == "verified"
    trees = [ln for ln in lines if ln.startswith("tree ")]
    assert 0 < len(trees) <= 8 + 1


def test_graph_pfaffian(capsys):
    code, out = run(capsys, "decide-graph-pfaffian", fixture("c4"))
    assert code == 0 and out.startswith("WITNESS reverse:")
    code, out = run(capsys, "decide-graph-pfaffian", fixture("k33"))
    assert code == 1 and out.startswith("CERTIFICATE")


def test_enumerate_and_census(capsys):
    code, out = run(capsys, "enumerate-trees", fixture("table2-1"))
    assert code == 0
    assert out.splitlines()[0] == "0 -1 01a 02b 03c" and len(out.splitlines()) == 4
    code, out = run(capsys, "census", fixture("table2-1"))
    assert out.splitlines() == ["positive 0", "negative 4", "difference -4"]


def test_sign_of_listed_tree(capsys):
    assert run(capsys, "sign", fixture("table2-1"), "01a", "02b", "03c") == (0, "-1\n")


def test_sign_rejects_absent_triple(capsys):
    assert main(["sign", fixture("table2-1"), "01b", "02b", "03c"]) == 2


def test_signed_counts_agree(capsys):
    _, a = run(capsys, "pfaffian-count", fixture("complete7"))
    _, b = run(capsys, "hr-count", fixture("complete7"))
    assert a.split()[-1] == b.split()[-1] == "49"


def test_prufer_round_trip(capsys, tmp_path):
    p = tmp_path / "t.h3g"
    p.write_text("vertices 5\ntriple 1 2 3\ntriple 3 4 5\n")
    code, out = run(capsys, "prufer", "encode", str(p))
    assert code == 0 and out.splitlines() == ["gamma 3", "matching 1-2 3-4"]
    code, out = run(capsys, "prufer", "decode", "--n", "2", "--gamma", "3", "--matching", "1-2,3-4")
    assert code == 0 and "1 2 3" in out and "3 4 5" in out


def test_psts_commands(capsys):
    code, out = run(capsys, "psts", "decide", fixture("psts-k33"))
    assert code == 1 and out.startswith("NOT PFAFFIAN")
    code, out = run(capsys, "psts", "bijection", fixture("fano"))
    assert code == 0 and "7" in out and "15" in out


def test_suspend_and_2susp(capsys, tmp_path):
    p = tmp_path / "g.h3g"
    p.write_text("vertices 5\nedge 1 2\nedge 2 3\nedge 1 3\nedge 4 5\n")
    code, out = run(capsys, "suspend", str(p), "2")
    assert code == 0 and out.count("triple") == 8
    code, _ = run(capsys, "decide-2susp", str(p))
    assert code == 1


def test_structure_commands(capsys):
    code, out = run(capsys, "tutte-check", fixture("twin"))
    assert code == 1
    code, _ = run(capsys, "exists", fixture("complete7"), "--seed", "3")
    assert code == 0
    code, out = run(capsys, "blocks", fixture("triangle-path"))
    assert code == 1 and out.splitlines() == ["odd 1 2 3", "even 3 4", "even 4 5"]


@pytest.mark.parametrize(
    "argv",
    [["count-trees", "/nonexistent/file.h3g"], ["gen", "bogus"], ["gen", "interlaced", "2"], ["gen", "complete", "6"]],
)
def test_input_errors_exit_2(argv, capsys):
    assert main(argv) == 2
    assert capsys.readouterr().err.startswith("error:")


def test_malformed_stdin_exits_2(capsys, monkeypatch):
    feed(monkeypatch, "vertices 3\ntriple 1 2\n")
    assert main(["count-trees", "-"]) == 2


def test_usage_errors_exit_2():
    with pytest.raises(SystemExit) as info:
        main(["prufer", "decode", "--n", "2"])
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        main(["count-trees", fixture("fano"), "--threads", "0"])
    assert info.value.code == 2


def test_output_is_deterministic(capsys):
    first = run(capsys, "decide-3pfaffian", fixture("interlaced5"))
    assert all(run(capsys, "decide-3pfaffian", fixture("interlaced5")) == first for _ in range(3))
    assert run(capsys, "exists", fixture("sts9"), "--seed", "9") == run(capsys, "exists", fixture("sts9"), "--seed", "9")


def test_verify_all_subset(capsys):
    code, out = run(capsys, "verify-all", "--only", "1", "--only", "5")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 2 and all(ln.startswith("[PASS]") for ln in lines)
    assert main(["verify-paper", "--only", "1"]) == 0
