import io
import json

import pytest

from tgflab.cli import main, run_sweep, sweep_specs


def run(*argv, env=None):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_tgf_both_equal():
    code, text = run("tgf", "--family", "p", "--n", "1", "--x", "1", "--method", "both")
    assert code == 0
    assert text.splitlines()[-1] == "equal"
    code, _ = run("tgf", "--family", "r1", "--x", "0", "--n", "2", "--s", "1,2", "--method", "both")
    assert code == 0


def test_tgf_json():
    code, text = run("tgf", "--family", "P", "--n", "1", "--x", "1", "--out", "json")
    data = json.loads(text)
    assert code == 0
    assert data["spec"] == {"family": "P", "n": 1, "x": 1}
    assert data["enumerate"] == [[-3, "1/2"], [-1, "1/2"], [1, "1/2"], [3, "1/2"]]


def test_invalid_parameters(capsys):
    code, _ = run("tgf", "--family", "r1", "--x", "1", "--s", "2,2")
    assert code == 2
    assert "invalid parameters" in capsys.readouterr().err
    assert run("tgf", "--family", "nope")[0] == 2
    assert run("tgf", "--family", "A", "--x", "one")[0] == 2
    assert run("frobnicate")[0] == 2


def test_volume_scheme_has_no_formula(capsys):
    assert run("tgf", "--family", "A", "--x", "1", "--d", "2", "--l", "2", "--scheme", "wt3")[0] == 0
    code, _ = run("tgf", "--family", "A", "--x", "1", "--d", "2", "--l", "2", "--scheme", "wt3", "--method", "both")
    assert code == 2


def test_formula():
    code, text = run("formula", "--family", "Pprime", "--n", "1", "--x", "1")
    assert code == 0
    assert "formula: 1/2*q^-2 + 1/2 + 1/2*q^2" in text


def test_verify_quartered_csv():
    code, text = run("verify", "--family", "quartered", "--x", "0:3", "--n", "1:3", "--out", "csv")
    rows = text.strip().splitlines()
    assert code == 0
    assert rows[0] == "spec,formula,palindromic,q1,pass"
    assert len(rows) == 1 + 260
    assert all(r.endswith("True") for r in rows[1:])


def test_verify_two_sided():
    code, text = run("verify", "--family", "twosided", "--x", "0:2", "--u", "0:2", "--d", "0:2")
    assert code == 0
    assert text.strip() == "294 cases, 294 passed, 0 failed"


def test_verify_empty_grid():
    code, text = run("verify", "--family", "A", "--x", "1:0")
    assert code == 0
    assert text.strip() == "0 cases, 0 passed, 0 failed"


def test_verify_timings_flag():
    _, text = run("verify", "--family", "P", "--x", "1", "--n", "1", "--out", "json", "--timings")
    assert all("enum_ms" in row for row in json.loads(text))


def test_output_is_deterministic(monkeypatch):
    args = ("verify", "--family", "onesided", "--x", "0:1", "--d", "0:2", "--u", "0:2", "--out", "json")
    _, serial = run(*args)
    monkeypatch.setenv("TGFLAB_THREADS", "4")
    _, threaded = run(*args)
    assert serial == threaded


def test_run_sweep_preserves_order():
    specs = sweep_specs(("R1",), range(0, 2), range(1, 3), range(0), range(0))
    rows = run_sweep(specs, workers=3)
    assert [r["spec"] for r in rows] == [s.label() for s in specs]


def test_verify_reports_failures():
    def broken(spec):
        return {"spec": spec.label(), "pass": False, "enum_ms": 0, "formula_ms": 0}

    specs = sweep_specs(("P",), range(1), range(1), range(0), range(0))
    assert [r["pass"] for r in run_sweep(specs, broken)] == [False]


@pytest.mark.parametrize("pair,x,s", [("1", "1", "1,2"), ("2", "2", "1,3")])
def test_reciprocity(pair, x, s):
    code, text = run("reciprocity", "--pair", pair, "--x", x, "--s", s)
    assert code == 0
    assert "equal" in text


def test_kuo_commands():
    code, text = run("kuo", "--which", "typeS", "--limit", "2")
    assert code == 0 and text.endswith("0 failed\n")
    code, text = run("kuo", "--which", "random", "--count", "4", "--seed", "3")
    assert code == 0 and "4 checks, 0 failed" in text
    code, text = run("kuo", "--which", "corners", "--family", "P", "--n", "2", "--x", "1", "--count", "10")
    assert code == 0 and "10 checks, 0 failed" in text
    code, _ = run("kuo", "--which", "halvedP", "--family", "P", "--n", "2", "--x", "1")
    assert code == 0


def test_kuo_precondition(capsys):
    code, _ = run("kuo", "--which", "halvedP", "--family", "P", "--n", "1", "--x", "1")
    assert code == 2
    assert "precondition violated" in capsys.readouterr().err
    assert run("kuo", "--which", "bogus")[0] == 2


def test_render():
    code, text = run("render", "--family", "R1", "--x", "1", "--s", "1")
    assert code == 0 and "*" in text
    code, text = run("render", "--family", "A")
    assert code == 0 and text == ""
