import json
import subprocess
import sys

import pytest

from cwcode.cli import CodeFile, parse_code_file, run
from cwcode.errors import ParseError, RaggedMatrix, ValueOutOfField

from conftest import TERN13_G, GRIESMER_G

BIN4_TEXT = "q 2\nkind generator\n1 1 0 0\n0 1 1 1\n"
BIN4_PARITY_TEXT = "q 2\nkind parity\n1 1 0 1\n0 0 1 1\n"


def _matrix_text(q, rows, kind="generator"):
    return f"q {q}\nkind {kind}\n" + "\n".join(" ".join(map(str, r)) for r in rows) + "\n"


@pytest.fixture
def files(tmp_path):
    out = {}
    for name, text in {
        "bin4": BIN4_TEXT,
        "bin4p": BIN4_PARITY_TEXT,
        "tern13": _matrix_text(3, TERN13_G),
        "griesmer": _matrix_text(2, GRIESMER_G),
    }.items():
        p = tmp_path / f"{name}.code"
        p.write_text(text)
        out[name] = str(p)
    return out


def test_parse_examples():
    cf = parse_code_file("# bin4\n" + BIN4_TEXT)
    assert cf == CodeFile(2, "generator", ((1, 1, 0, 0), (0, 1, 1, 1)))
    cf = parse_code_file(BIN4_PARITY_TEXT)
    assert cf.kind == "parity"
    assert cf.to_code() == parse_code_file(BIN4_TEXT).to_code()


@pytest.mark.parametrize("text, exc, line", [
    ("q 6\nkind generator\n1 0\n", ParseError, 1),
    ("q 2\nkind foo\n1 0\n", ParseError, 2),
    ("kind generator\nq 2\n", ParseError, 1),
    ("q 2\nkind parity\n1 0 1\n1 1\n", RaggedMatrix, 4),
    ("q 2\nkind parity\n1 x\n", ParseError, 3),
    ("q 2\nkind parity\n", ParseError, None),
])
def test_parse_errors(text, exc, line):
    with pytest.raises(exc) as info:
        parse_code_file(text)
    assert info.value.line == line
    if "q 6" in text:
        assert "NotAPrimePower" in str(info.value)


def test_parse_value_out_of_field():
    with pytest.raises(ValueOutOfField):
        parse_code_file("q 3\nkind generator\n1 3\n")


def test_hierarchy_and_resolution(files, capsys):
    assert run(["hierarchy", files["tern13"]]) == 0
    assert capsys.readouterr().out.strip() == "(9,12,13)"
    assert run(["resolution", files["tern13"]]) == 0
    assert capsys.readouterr().out.strip() == "0 <- R(C) <- S <- S(-9)^13 <- S(-12)^39 <- S(-13)^27 <- 0"


def test_check_cw_griesmer(files, capsys):
    assert run(["check-cw", files["griesmer"], "--method", "all"]) == 0
    out = capsys.readouterr().out
    assert "not constant weight" in out.splitlines()[-2]
    assert "(met)" in out.splitlines()[-1]


def test_check_cw_single_methods(files, capsys):
    for method in ("direct", "prop1", "cor2", "betti1"):
        assert run(["check-cw", files["tern13"], "--method", method, "--json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["result"]["weight"] == 9
        assert payload["result"]["verdicts"] == {method: 9}


def test_betti_gradings(files, capsys):
    run(["betti", files["bin4"], "--grading", "n"])
    assert capsys.readouterr().out.splitlines() == ["beta[1,2] = 1", "beta[1,3] = 2", "beta[2,4] = 2"]
    run(["betti", files["bin4"], "--grading", "total", "--json"])
    payload = json.loads(capsys.readouterr().out)
    assert set(payload) == {"q", "n", "k", "result"}
    assert payload["result"]["entries"] == [{"i": 1, "beta": 3}, {"i": 2, "beta": 2}]
    run(["betti", files["bin4"]])
    assert "beta[2,{1,2,3,4}] = 2" in capsys.readouterr().out
    run(["betti", files["bin4"], "--field", "32003", "--grading", "n"])
    assert capsys.readouterr().out.splitlines()[-1] == "beta[2,4] = 2"


def test_betti_json_independent_of_input_kind(files, capsys):
    run(["betti", files["bin4"], "--json"])
    a = capsys.readouterr().out
    run(["betti", files["bin4p"], "--json"])
    b = capsys.readouterr().out
    assert a == b
    assert json.loads(a)["result"]["entries"][1] == {"beta": 1, "i": 1, "sigma": [1, 2]}


def test_circuits_and_nsets(files, capsys):
    run(["circuits", files["bin4"]])
    assert capsys.readouterr().out.split() == ["{1,2}", "{1,3,4}", "{2,3,4}"]
    run(["nsets", files["bin4"], "--level", "2", "--json"])
    assert json.loads(capsys.readouterr().out)["result"]["sets"] == [[1, 2, 3, 4]]


def test_verify(files, capsys):
    assert run(["verify", files["tern13"]]) == 0
    out = capsys.readouterr().out
    assert "FAIL" not in out and out.strip().endswith("verify: OK")
    assert run(["verify", files["bin4"], "--json"]) == 0
    checks = json.loads(capsys.readouterr().out)["result"]["checks"]
    status = {c["name"]: c["status"] for c in checks}
    assert status["hierarchy_vs_matroid"] == "PASS"
    assert status["cw_resolution_table"] == "SKIP"


def test_verify_reports_failures(files, capsys, monkeypatch):
    import cwcode.srres as srres

    monkeypatch.setattr(srres, "gauss_identity_residual", lambda k, q: 1)
    assert run(["verify", files["tern13"]]) == 1
    assert "FAIL gauss_identity" in capsys.readouterr().out


@pytest.mark.parametrize("q, k, r", [(2, 3, 1), (3, 2, 2), (2, 2, 2), (4, 2, 1)])
def test_gen_round_trip(tmp_path, capsys, q, k, r):
    path = tmp_path / "s.code"
    assert run(["gen", "simplex", "--q", str(q), "--k", str(k), "--replicate", str(r), "-o", str(path)]) == 0
    assert run(["check-cw", str(path), "--method", "all", "--json"]) == 0
    res = json.loads(capsys.readouterr().out)["result"]
    assert res["agree"] and res["weight"] == q ** (k - 1) * r


def test_gen_to_stdout(capsys):
    assert run(["gen", "simplex", "--q", "2", "--k", "2"]) == 0
    assert parse_code_file(capsys.readouterr().out).rows == ((1, 0, 1), (0, 1, 1))


def test_operational_errors(tmp_path, files, capsys):
    bad = tmp_path / "bad.code"
    bad.write_text("q 6\nkind generator\n1 0\n")
    assert run(["hierarchy", str(bad)]) == 2
    assert "NotAPrimePower" in capsys.readouterr().err
    assert run(["hierarchy", str(tmp_path / "missing.code")]) == 2
    assert run(["--max-n", "5", "circuits", files["tern13"]]) == 2
    assert run(["--max-enum", "10", "hierarchy", files["tern13"]]) == 2
    assert run(["gen", "simplex", "--q", "2", "--k", "8"]) == 2


def test_module_entry_point(files):
    proc = subprocess.run([sys.executable, "-m", "cwcode", "hierarchy", files["bin4"]],
                          capture_output=True, text=True, check=True)
    assert proc.stdout.strip() == "(2,4)"
