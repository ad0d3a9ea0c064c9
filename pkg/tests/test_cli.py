import subprocess
import sys

import pytest

from signedflow.cli import main


def run(*args):
    return main([str(a) for a in args])


@pytest.fixture
def bouquet_file(tmp_path):
    path = tmp_path / "bouquet3.sg"
    assert run("gen", "bouquet", "3", "-o", path) == 0
    return path


def test_classify_bouquet(bouquet_file, capsys):
    assert run("classify", bouquet_file, "--certificate") == 0
    out = capsys.readouterr().out
    assert out.startswith("flow-number: 3\n")
    assert "triple: [0] [1] [2]" in out
    assert "certificate:\ngroup Z\n" in out


def test_construct_then_verify(bouquet_file, tmp_path, capsys):
    flow = tmp_path / "f.sf"
    assert run("construct", bouquet_file, "-o", flow) == 0
    assert run("verify", bouquet_file, flow, "--max-abs", 2) == 0
    assert capsys.readouterr().out.rstrip().endswith("result: pass")


def test_verify_bound_failure(bouquet_file, tmp_path):
    flow = tmp_path / "f.sf"
    run("construct", bouquet_file, "-o", flow)
    assert run("verify", bouquet_file, flow, "--max-abs", 1) == 1


def test_verify_kirchhoff_failure(tmp_path, capsys):
    g = tmp_path / "loop.sg"
    g.write_text("v 1\ne 0 0 0 -\n")
    f = tmp_path / "loop.sf"
    f.write_text("group Z\nf 0 out out 1\n")
    assert run("verify", g, f) == 1
    assert "kirchhoff: FAIL" in capsys.readouterr().out


def test_construct_refuses_inadmissible(tmp_path):
    g = tmp_path / "loop.sg"
    run("gen", "neg-loop", "-o", g)
    assert run("construct", g, "-o", tmp_path / "x.sf") == 1


def test_parse_error_exit_code(tmp_path, capsys):
    g = tmp_path / "bad.sg"
    g.write_text("v 2\ne 0 0 5 +\n")
    assert run("classify", g) == 1
    assert "line 2" in capsys.readouterr().err


def test_missing_file(tmp_path):
    assert run("classify", tmp_path / "nope.sg") == 1


def test_not_eulerian(tmp_path):
    g = tmp_path / "edge.sg"
    g.write_text("v 2\ne 0 0 1 +\n")
    assert run("classify", g) == 1


@pytest.mark.parametrize(
    "argv",
    [
        ["classify"],
        ["classify", "x.sg", "--bogus"],
        ["gen", "six-regular-antibalanced", "4"],
        ["gen", "bouquet", "three"],
        ["gen", "petersen"],
        ["oracle", "group-flow", "x.sg"],
        ["oracle", "sweep"],
        ["frobnicate"],
    ],
)
def test_usage_errors(argv, tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    (tmp_path / "x.sg").write_text("v 1\ne 0 0 0 -\n")
    with pytest.raises(SystemExit) as err:
        main(argv)
    assert err.value.code == 2


def test_switch(tmp_path, capsys):
    g = tmp_path / "d.sg"
    g.write_text("v 2\ne 0 0 1 +\ne 1 0 1 +\n")
    assert run("switch", g, "--at", "0") == 0
    assert capsys.readouterr().out == "v 2\ne 0 0 1 -\ne 1 0 1 -\n"


def test_gen_byte_stable(tmp_path):
    a, b = tmp_path / "a.sg", tmp_path / "b.sg"
    run("gen", "six-regular-antibalanced", "5", "3", "-o", a)
    run("gen", "six-regular-antibalanced", "5", "3", "-o", b)
    assert a.read_bytes() == b.read_bytes()


def test_oracle_commands(bouquet_file, capsys):
    assert run("oracle", "flow-number", bouquet_file) == 0
    assert "flow-number: 3" in capsys.readouterr().out
    assert run("oracle", "triply-odd", bouquet_file) == 0
    assert "triply-odd: present" in capsys.readouterr().out
    assert run("oracle", "group-flow", bouquet_file, "--group", "Z3xZ3") == 0
    assert "group-flow: present" in capsys.readouterr().out


def test_oracle_sweep(capsys):
    assert run("oracle", "sweep", "--max-vertices", 2, "--max-edges", 4) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0].startswith("graph-index,edges,parity,classifier-verdict,oracle-verdict")
    assert len(lines) > 1 and all(line.endswith(",pass") for line in lines[1:])


def test_enumerate(capsys):
    assert run("enumerate", "--max-vertices", 1, "--max-edges", 2, "--eulerian") == 0
    assert len(capsys.readouterr().out.splitlines()) == 5


def test_module_entry_point(bouquet_file):
    out = subprocess.run(
        [sys.executable, "-m", "signedflow", "classify", str(bouquet_file)],
        capture_output=True,
        text=True,
        check=True,
    ).stdout
    assert out.startswith("flow-number: 3")
