import json

import pytest

from cyclocat import data_path, fileio
from cyclocat.cli import EXIT_FAIL, EXIT_INPUT, EXIT_OK, main
from cyclocat.modules import Z2, GradingScheme, random_module, simple_module


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_verify_theorem(capsys, tmp_path):
    code, out, _ = run(capsys, "verify-theorem", "--n", "3", "--m", "5", "--report", str(tmp_path / "r.json"))
    assert code == EXIT_OK
    assert out.splitlines()[-1] == "result: PASS"
    assert "  Phi_15 = 1 - q + q^3 - q^4 + q^5 - q^7 + q^8" in out.splitlines()
    assert "x -> q^10, y -> q^6, inverse q -> xy" in out
    assert json.loads((tmp_path / "r.json").read_text())["passed"]
    code, out, _ = run(capsys, "verify-theorem", "--n", "5", "--m", "7", "--json")
    assert code == EXIT_OK and json.loads(out)["n"] == 5


@pytest.mark.parametrize("n,m", [("3", "3"), ("4", "5"), ("2", "3"), ("1", "5")])
def test_verify_theorem_rejects(capsys, n, m):
    code, out, err = run(capsys, "verify-theorem", "--n", n, "--m", m)
    assert code == EXIT_INPUT and err.startswith("error:") and out == ""


def test_module_commands(capsys):
    code, out, _ = run(capsys, "module", "kernels", "--in", data_path("counterexample_3_5.json"))
    assert (code, out) == (EXIT_OK, "ker P0: yes, ker P1: yes, projective: no\n")
    code, out, _ = run(capsys, "module", "class", "--in", data_path("free_3_5.json"))
    assert code == EXIT_OK and out.splitlines()[-1] == "0 in Z[q]/Φ_15"
    assert "class is 0 in K0: yes" in out
    code, out, _ = run(capsys, "module", "class", "--in", data_path("simple_3_5.json"))
    assert out.splitlines()[-1] == "1 in Z[q]/Φ_15"
    code, out, _ = run(capsys, "module", "check", "--in", data_path("free_3_5.json"))
    assert out == "scheme: Z2(n=3, m=5)\ntotal dimension: 15 in 15 degrees\nvalid: yes\n"
    code, out, _ = run(capsys, "module", "decompose", "--in", data_path("free_3_5.json"))
    assert code == EXIT_OK and out.count("ranks reproduced: yes") == 2


def test_class_rejects_cyclic(capsys):
    code, _, err = run(capsys, "module", "class", "--in", data_path("counterexample_3_5.json"))
    assert code == EXIT_INPUT and "Z2" in err


def test_r0_and_eta(capsys, tmp_path):
    out_path = tmp_path / "r0.json"
    X = random_module(GradingScheme(Z2, 3, 5), 8, 4)
    src = tmp_path / "x.json"
    fileio.write_module(X, str(src))
    code, out, _ = run(capsys, "r0", "--in", str(src), "--out", str(out_path))
    assert code == EXIT_OK
    assert out == f"R0(P0 X): dimension {3 * X.total_dim} (= 3 * {X.total_dim})\nvalid: yes\n"
    assert fileio.read_module(str(out_path)).total_dim == 3 * X.total_dim
    code, out, _ = run(capsys, "eta", "--in", str(src))
    assert (code, out) == (EXIT_OK, "injective: yes, commutes: yes\n")


def test_factorize(capsys, tmp_path):
    g_path = tmp_path / "g.json"
    code, out, _ = run(capsys, "factorize", "--f", data_path("factorize_3_5.json"), "--out", str(g_path))
    assert (code, out) == (EXIT_OK, "g found, g∘η = f: exact\n")
    g = fileio.read_morphism(str(g_path))
    f = fileio.read_morphism(data_path("factorize_3_5.json"))
    from cyclocat.stable import eta

    assert g.compose(eta(f.source)) == f
    code, _, err = run(capsys, "factorize", "--f", data_path("factorize_3_5.json"), "--through", "eta1")
    assert code == EXIT_INPUT and "precondition" in err


def test_factorize_rejects_target_outside_kernel(capsys, tmp_path, z35):
    from cyclocat.modules import identity_morphism

    path = tmp_path / "f.json"
    fileio.write_morphism(identity_morphism(simple_module(z35)), str(path))
    code, _, err = run(capsys, "factorize", "--f", str(path))
    assert code == EXIT_INPUT and "ker P1" in err


def test_counterexample(capsys, tmp_path):
    code, out, _ = run(capsys, "counterexample", "--out", str(tmp_path / "c.json"))
    assert (code, out) == (EXIT_OK, "valid: yes\nprojective: no\nker P0: yes, ker P1: yes\n")
    with open(data_path("counterexample_3_5.json"), encoding="utf-8") as fh:
        assert (tmp_path / "c.json").read_text() == fh.read()
    code, _, _ = run(capsys, "counterexample", "--n", "5", "--m", "7")
    assert code == EXIT_INPUT


def test_stable_hom(capsys):
    s, f = data_path("simple_3_5.json"), data_path("free_3_5.json")
    code, out, _ = run(capsys, "stable-hom", "--x", s, "--y", s)
    assert out.splitlines()[-1] == "dim stable Hom: 1"
    code, out, _ = run(capsys, "stable-hom", "--x", f, "--y", s)
    assert out.splitlines()[-1] == "dim stable Hom: 0"
    code, _, _ = run(capsys, "stable-hom", "--x", s, "--y", data_path("counterexample_3_5.json"))
    assert code == EXIT_INPUT


@pytest.mark.parametrize("n", [2, 3, 5, 7])
def test_single_algebra(capsys, n):
    code, out, _ = run(capsys, "single-algebra", "--n", str(n))
    assert code == EXIT_OK and out.splitlines()[0] == f"K0 of H_{n}: Z[x]/([{n}]_x)"
    assert run(capsys, "single-algebra", "--n", "1")[0] == EXIT_INPUT


def test_random_module(capsys, tmp_path):
    code, out, _ = run(capsys, "random-module", "--seed", "3", "--max-dim", "12")
    assert code == EXIT_OK
    M = fileio.module_from_json(out)
    assert M.total_dim <= 12
    code, out2, _ = run(capsys, "random-module", "--seed", "3", "--max-dim", "12")
    assert out2 == out
    code, out, _ = run(capsys, "random-module", "--seed", "1", "--kind", "projective", "--max-dim", "40")
    assert code == EXIT_OK and fileio.module_from_json(out).total_dim % 15 == 0
    assert run(capsys, "random-module", "--seed", "1", "--n", "4", "--m", "6")[0] == EXIT_INPUT
    assert run(capsys, "random-module", "--seed", "1", "--max-dim", "0")[0] == EXIT_INPUT


def test_bad_inputs(capsys, tmp_path):
    missing = str(tmp_path / "nope.json")
    code, _, err = run(capsys, "module", "check", "--in", missing)
    assert code == EXIT_INPUT and "cannot read" in err
    bad = tmp_path / "bad.json"
    bad.write_text("{broken")
    assert run(capsys, "module", "check", "--in", str(bad))[0] == EXIT_INPUT
    d = json.loads(open(data_path("free_3_5.json"), encoding="utf-8").read())
    d["d1"][0]["matrix"] = [["5"]]
    bad.write_text(json.dumps(d))
    code, _, err = run(capsys, "module", "kernels", "--in", str(bad))
    assert code == EXIT_INPUT and "invalid module" in err
    assert run(capsys, "no-such-command")[0] == EXIT_INPUT
    assert run(capsys, "--help")[0] == EXIT_OK


def test_exit_fail_is_distinct():
    assert len({EXIT_OK, EXIT_FAIL, EXIT_INPUT}) == 3
