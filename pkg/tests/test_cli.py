import json
import subprocess
import sys

import pytest

from planecremona.cli import main
from planecremona.corpus import REGISTRY, groups, resolve_selection, run_corpus, summary


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_hudson(capsys):
    code, out, _ = run(["hudson", "5", "3,3,1,1,1,1,1,1"], capsys)
    assert code == 0 and out.strip() == "Improper"
    code, out, _ = run(["hudson", "6", "4,2^4,1^3"], capsys)
    assert out.strip() == "Proper"


def test_enumerate(capsys):
    code, out, _ = run(["enumerate", "5", "--json"], capsys)
    data = json.loads(out)
    assert code == 0 and data["schema"] == "1" and len(data["types"]) == 4
    assert data["field"] == "GF(32003)" and data["seed"] == 42


def test_usage_errors(capsys):
    assert run(["hudson", "5", "3,3"], capsys)[0] == 2
    assert run(["enumerate", "5", "--bogus"], capsys)[0] == 2
    assert run(["frobnicate"], capsys)[0] == 2
    assert run(["analyze", "x : y^2 : z"], capsys)[0] == 2
    assert run(["analyze", "xy : xz : yz", "--field", "12"], capsys)[0] == 2


def test_flags_before_or_after_subcommand(capsys):
    a = json.loads(run(["--seed", "5", "--json", "dejonquieres", "3"], capsys)[1])
    b = json.loads(run(["dejonquieres", "3", "--seed", "5", "--json"], capsys)[1])
    assert a == b and a["seed"] == 5


def test_analyze_json_is_deterministic(capsys):
    argv = ["analyze", "x^3 : x^2*y : y^2*z", "--json"]
    code, out1, _ = run(argv, capsys)
    _, out2, _ = run(argv, capsys)
    assert code == 0 and out1 == out2
    data = json.loads(out1)
    assert data["birational"] and data["characteristic"] == "(3; 2,1^4)"
    assert json.loads(json.dumps(data)) == data


def test_analyze_codim_three(capsys):
    code, out, _ = run(["analyze", "x^2 : y^2 : z^2"], capsys)
    assert code == 0 and "birational: False" in out


def test_monomial(capsys):
    code, out, _ = run(["monomial", "x^4 : x^3*y : y^3*z"], capsys)
    assert code == 0 and "integrally closed: no" in out
    code, _, err = run(["monomial", "x^2*y^2 : x^2*z^2 : y^2*z^2"], capsys)
    assert code == 1 and "NotCremona" in err


def test_fiber_degree(capsys):
    code, out, _ = run(["fiber-degree", "x^2 : y^2 : z^2", "--json"], capsys)
    assert json.loads(out)["fiber_degrees"] == [4, 4, 4]


def test_rees_and_fat(capsys, tmp_path):
    data = json.loads(run(["rees", "4", "--json"], capsys)[1])
    assert data["bidegrees"] == [[1, 1], [3, 1], [2, 2], [1, 3]]
    code, out, _ = run(["fat", "--random", "--mu", "2^6", "--degree", "5", "--json"], capsys)
    data = json.loads(out)
    assert data["e"] == 18 and data["degree_piece"]["dimension"] == 3
    path = tmp_path / "cluster.txt"
    path.write_text("p1 - 1:0:0 1\np2 - 0:1:0 1\np3 - 0:0:1 1\n")
    data = json.loads(run(["fat", str(path), "--json"], capsys)[1])
    assert data["resolution"] == "0→R²(−3)→R³(−2)→R"


def test_corpus_selection(capsys):
    code, out, _ = run(["corpus", "degree5", "--json"], capsys)
    data = json.loads(out)
    assert code == 0 and data["passed"]
    assert [r["entry"] for r in data["reports"]] == sorted(r["entry"] for r in data["reports"])
    assert len(data["reports"]) == 3
    assert all(c["anchor"] for r in data["reports"] for c in r["checks"])
    assert run(["corpus", "nonsense"], capsys)[0] == 2


def test_corpus_is_reproducible(capsys):
    a = run(["corpus", "monomial-non-cremona", "rees", "--json"], capsys)[1]
    b = run(["corpus", "monomial-non-cremona", "rees", "--json"], capsys)[1]
    assert a == b


def test_resolve_selection():
    assert resolve_selection([]) == sorted(REGISTRY)
    assert resolve_selection(["hudson"]) == ["hudson-low-degree", "hudson-verdicts"]
    assert "monomial" in groups()


def test_run_corpus_summary():
    reports = run_corpus(["enumeration"])
    s = summary(reports)
    assert s["entries"] == s["entries_passed"] == 4 and s["errors"] == 0
    assert all(r.elapsed is None for r in reports)


def test_module_entry_point():
    p = subprocess.run([sys.executable, "-m", "planecremona", "hudson", "5", "3,3,1^6"],
                       capture_output=True, text=True)
    assert p.returncode == 0 and p.stdout.strip() == "Improper"
