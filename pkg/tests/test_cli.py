import io
import json
import subprocess
import sys

import pytest

from grundylab.cli import main
from grundylab.constructions import FAMILIES, path
from grundylab.graph import parse_graph6, write_edgelist


@pytest.fixture
def p4(tmp_path):
    f = tmp_path / "p4.g6"
    f.write_text("Ch\n")
    return str(f)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_grundy_text_and_json(capsys, p4):
    code, out, _ = run(capsys, "grundy", p4)
    assert code == 0
    assert out.splitlines() == ["grundy\t3", "classes\t{0,3} {1} {2}"]
    code, out, _ = run(capsys, "grundy", p4, "--json")
    data = json.loads(out)
    assert data["grundy"] == 3 and data["classes"] == [[0, 3], [1], [2]]


def test_chi_omega_greedy(capsys, p4):
    assert run(capsys, "chi", p4)[1].startswith("chi\t2")
    assert run(capsys, "omega", p4)[1] == "omega\t2\n"
    code, out, _ = run(capsys, "greedy", p4, "--order", "0,3,1,2", "--json")
    assert code == 0 and json.loads(out)["colors"] == [1, 2, 3, 1]


def test_edgelist_input(capsys, tmp_path):
    f = tmp_path / "p4.txt"
    f.write_text(write_edgelist(path(4)))
    assert run(capsys, "grundy", str(f), "--format", "edgelist")[1].startswith("grundy\t3")


def test_stdin_input(capsys, monkeypatch):
    monkeypatch.setattr(sys, "stdin", io.StringIO("Ch\n"))
    assert run(capsys, "grundy", "-")[1].startswith("grundy\t3")


def test_product_and_construct(capsys, tmp_path):
    k2 = tmp_path / "k2.g6"
    k2.write_text("A_\n")
    code, out, _ = run(capsys, "product", "--kind", "cart", str(k2), str(k2))
    assert code == 0 and parse_graph6(out).num_edges == 4
    code, out, _ = run(capsys, "product", "--kind", "direct", str(k2), str(k2), "--json")
    assert json.loads(out)["m"] == 2
    assert run(capsys, "construct", "path", "4")[1] == "Ch\n"
    for family, (_, arity) in FAMILIES.items():
        code, out, _ = run(capsys, "construct", family, *["3"] * arity)
        assert code == 0 and parse_graph6(out).n >= 1


def test_verify_and_list(capsys):
    code, out, _ = run(capsys, "verify", "PROP34_HYPERCUBE")
    assert code == 0
    assert out.splitlines()[1].startswith("PROP34_HYPERCUBE\tpass")
    code, out, _ = run(capsys, "verify", "PROP35_KPKP", "--json")
    assert json.loads(out)[0]["status"] == "pass"
    code, out, _ = run(capsys, "verify", "--list")
    assert code == 0 and "CONJ27_CART_LINEAR\tconjecture" in out


def test_sweep_command(capsys):
    code, out, _ = run(capsys, "sweep", "--n", "6", "--count", "5", "--relations", "sandwich,direct_lower", "--json")
    assert code == 0
    rep = json.loads(out)[0]
    assert rep["status"] == "pass" and rep["counts"]["pass"] == 10
    code, first, _ = run(capsys, "sweep", "--conjectures", "--json")
    assert code == 0
    assert run(capsys, "sweep", "--conjectures", "--json")[1] == first


@pytest.mark.parametrize("argv", [
    ["verify", "NOPE"],
    ["sweep", "--relations", "bogus", "--count", "1"],
    ["sweep", "--p", "2", "--count", "1"],
    ["construct", "path"],
    ["grundy", "/no/such/file"],
])
def test_bad_input_exits_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err.startswith("error:")


def test_malformed_graph_exits_2(capsys, tmp_path):
    f = tmp_path / "bad.g6"
    f.write_text("garbage!\n")
    assert run(capsys, "grundy", str(f))[0] == 2
    assert run(capsys, "greedy", str(f), "--order", "0")[0] == 2


def test_bad_order_exits_2(capsys, p4):
    assert run(capsys, "greedy", p4, "--order", "0,1")[0] == 2
    assert run(capsys, "greedy", p4, "--order", "a,b")[0] == 2


def test_solver_cap_exits_3(capsys, p4):
    assert run(capsys, "grundy", p4, "--max-n", "3")[0] == 3


def test_timing_flag_adds_elapsed(capsys):
    code, out, _ = run(capsys, "verify", "PROP34_HYPERCUBE", "--json", "--timing")
    assert "elapsed" in json.loads(out)[0]


def test_module_entry_point(tmp_path):
    f = tmp_path / "p4.g6"
    f.write_text("Ch\n")
    done = subprocess.run([sys.executable, "-m", "grundylab", "grundy", str(f)], capture_output=True, text=True)
    assert done.returncode == 0 and done.stdout.startswith("grundy\t3")
