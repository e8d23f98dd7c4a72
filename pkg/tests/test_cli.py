import io
import json
from fractions import Fraction

import pytest

from mtasep import cli, verify
from mtasep.chain import RNG_ALGORITHM


def run(*argv):
    out = io.StringIO()
    code = cli.main(list(argv), out=out)
    return code, out.getvalue()


def run_json(*argv):
    code, text = run("--format", "json", *argv)
    return code, json.loads(text) if text else None


def test_brackets_type_table():
    code, text = run("brackets", "--type", "1,1,1,1")
    assert code == 0
    lines = text.splitlines()[1:]
    assert lines == ["[1234] = 9", "[1243] = 3", "[1324] = 3", "[1342] = 3", "[1423] = 5", "[1432] = 1"]


def test_brackets_word_and_trivial_type():
    code, text = run("brackets", "--word", "1423")
    assert code == 0 and text.strip() == "[1423] = 5"
    code, d = run_json("brackets", "--type", "3")
    assert d["outputs"]["brackets"] == {"111": 1}


def test_brackets_budget_exit_code(capsys):
    code, _ = run("--budget", "10", "brackets", "--type", "1,1,1,1")
    assert code == 2
    assert "budget" in capsys.readouterr().err


def test_brackets_csv():
    code, text = run("--format", "csv", "brackets", "--type", "1,1")
    assert text.splitlines() == ["word,bracket,cyclic_class", "12,1,12", "21,1,12"]


def test_stationary_methods():
    code, d = run_json("stationary", "--type", "1,1,1,1", "--method", "mlq")
    assert code == 0 and d["outputs"]["entries"]["1234"] == "9/96"
    code, d = run_json("stationary", "--type", "1,1", "--method", "exact")
    assert d["outputs"]["entries"] == {"12": "1/2", "21": "1/2"}
    code, d = run_json("stationary", "--type", "1,1,2")
    assert code == 0 and d["outputs"]["methods_agree"] is True
    assert len(d["outputs"]["entries"]) == 12
    assert all(isinstance(v, str) and "/" in v for v in d["outputs"]["entries"].values())


def test_stationary_cap_exit_code():
    code, _ = run("--cap", "5", "stationary", "--type", "1,1,1", "--method", "exact")
    assert code == 2


def test_stationary_csv():
    code, text = run("--format", "csv", "stationary", "--type", "1,1,1,1", "--method", "exact")
    assert text.splitlines()[0] == "word,probability_num,probability_den"
    assert "1234,9,96" in text.splitlines()


@pytest.mark.parametrize("suite,nmax", [("ferrari-martin", 4), ("binomial", 12), ("cyclic", 2)])
def test_verify_passes(suite, nmax):
    code, d = run_json("verify", "--suite", suite, "--nmax", str(nmax))
    assert code == 0 and d["outputs"]["all_passed"]
    assert d["outputs"]["checks"][0]["statement"] == verify.SUITES[suite][0]


def test_verify_all_small():
    code, text = run("verify", "--nmax", "4")
    assert code == 0
    assert len(text.splitlines()) == len(verify.SUITES)
    assert all(line.startswith("PASS") for line in text.splitlines())


def test_verify_failure_exit_code(monkeypatch):
    def broken(res, nmax, cap):
        res.checks += 1
        raise verify._Fail("planted counterexample")

    monkeypatch.setitem(verify.SUITES, "cyclic", ("planted", broken))
    code, text = run("verify", "--suite", "cyclic", "--nmax", "3")
    assert code == 1
    assert "planted counterexample" in text


def test_simulate_zero_steps():
    code, d = run_json("simulate", "--type", "1,1", "--steps", "0", "--seed", "7")
    assert code == 0 and d["outputs"]["counts"] == {"12": 1}


def test_simulate_byte_identical():
    args = ("--format", "json", "simulate", "--type", "1,1,1,1", "--steps", "20000", "--seed", "3")
    assert run(*args)[1] == run(*args)[1]


def test_simulate_reports_rng_and_tv():
    code, d = run_json("simulate", "--type", "1,1,1", "--steps", "1000", "--seed", "1")
    out = d["outputs"]
    assert out["rng"] == RNG_ALGORITHM
    assert 0 <= Fraction(out["tv_distance"]) < 1


def test_simulate_with_rates():
    code, d = run_json("simulate", "--type", "1,1,1", "--steps", "1000", "--rates", "1,2", "--convention", "jumper")
    assert code == 0
    assert d["outputs"]["sorted_word"]["closed_form"] == "1/4"


def test_simulate_bad_rates():
    assert run("simulate", "--type", "1,1,1", "--steps", "10", "--rates", "1,-2")[0] == 2
    assert run("simulate", "--type", "1,1,1", "--steps", "10", "--rates", "1")[0] == 2
    assert run("simulate", "--type", "1,1", "--steps", "10", "--start", "11")[0] == 2


def test_render():
    code, text = run("render", "--word", "1423")
    assert text.splitlines()[0] == "[1423] = 5"
    assert text.count("[1] [4] [2] [3]") == 5
    code, text = run("render", "--word", "11")
    assert text.count("[1] [1]") == 1
    code, d = run_json("render", "--word", "1432")
    assert d["outputs"]["bracket"] == 1 and len(d["outputs"]["mlqs"]) == 1


def test_render_index_and_json_style():
    code, text = run("render", "--word", "1423", "--index", "4", "--style", "json")
    d = json.loads(text)
    assert len(d["mlqs"]) == 1 and d["mlqs"][0]["labels"][-1] == [1, 4, 2, 3]
    assert run("render", "--word", "1423", "--index", "5")[0] == 2


def test_usage_errors():
    assert run("brackets")[0] == 2
    assert run("nonsense")[0] == 2
    assert run("brackets", "--type", "1,0,1")[0] == 2
