import json

import pytest

from persymrank.cli import main, parse_range, pow2_form


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_census_json(capsys):
    code, out, _ = run(capsys, "census", "--n", "1", "--k", "10", "--no-timing")
    rec = json.loads(out)
    assert code == 0
    assert rec["gamma"] == ["1", "3", "2044"]
    assert (rec["n"], rec["k"]) == (1, 10)
    assert "timing_s" not in rec


def test_census_n0(capsys):
    code, out, _ = run(capsys, "census", "--n", "0", "--k", "5", "--no-timing")
    assert json.loads(out)["gamma"] == ["1"]


def test_census_n2(capsys):
    _, out, _ = run(capsys, "census", "--n", "2", "--k", "10", "--no-timing")
    assert json.loads(out)["gamma"] == ["1", "9", "6174", "42840", "4145280"]


def test_census_csv_and_table(capsys):
    _, out, _ = run(capsys, "census", "--n", "1", "--k", "2", "--format", "csv")
    assert out == "i,gamma\n0,1\n1,3\n2,4\n"
    _, out, _ = run(capsys, "census", "--n", "1", "--k", "2", "--format", "table")
    assert "Gamma_2" in out


def test_output_is_deterministic(capsys):
    a = run(capsys, "census", "--n", "2", "--k", "4", "--no-timing")[1]
    b = run(capsys, "census", "--n", "2", "--k", "4", "--no-timing", "--workers", "2")[1]
    assert json.loads(a)["gamma"] == json.loads(b)["gamma"]
    assert a == run(capsys, "census", "--n", "2", "--k", "4", "--no-timing")[1]


def test_budget_refusal_exit_code(capsys):
    code, out, err = run(capsys, "census", "--n", "4", "--k", "7")
    assert code == 2 and out == "" and "leaves" in err


def test_bad_flags_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["census", "--n", "x", "--k", "3"])
    assert exc.value.code == 1
    capsys.readouterr()


def test_verify_moments(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "moments", "--k", "10", "--n-range", "1..8")
    rec = json.loads(out)
    assert code == 0 and rec["pass"]
    assert len(rec["checks"]) == 8 * 7


def test_verify_rq(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "rq", "--q", "4", "--k", "10", "--n-range", "1..2")
    rec = json.loads(out)
    assert code == 0
    values = {c["value"] for c in rec["checks"]}
    assert values == {"587*2^31", "6361*2^28"}


def test_verify_expsum(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "expsum", "--n", "1", "--k", "3")
    rec = json.loads(out)
    assert code == 0 and rec["checks"][0]["checked"] == 16


@pytest.mark.parametrize("suite", ["fit", "typos"])
def test_verify_other_suites(capsys, suite):
    code, out, _ = run(capsys, "verify", "--suite", suite, "--no-timing")
    assert code == 0 and json.loads(out)["pass"]


def test_verify_census_vs_formula(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "census-vs-formula", "--k", "7", "--n-range", "1..2")
    assert code == 0


def test_verify_failure_exit_code(capsys, monkeypatch):
    from persymrank import identities

    monkeypatch.setattr(identities, "rhs_k10", lambda n: (0, 0, 0))
    code, _, err = run(capsys, "verify", "--suite", "moments", "--k", "10", "--n-range", "1")
    assert code == 3 and "FAIL k10_weighted_sum_1" in err


def test_unsupported_source_is_usage_error(capsys):
    code, _, err = run(capsys, "verify", "--suite", "moments", "--k", "8", "--n-range", "4",
                       "--source", "closedform")
    assert code == 1


def test_parse_range_and_pow2():
    assert parse_range("1..3") == [1, 2, 3]
    assert parse_range("4") == [4]
    assert pow2_form(587 * 2**31) == "587*2^31"
    assert pow2_form(0) == "0"


def test_workers_env_default(monkeypatch):
    from persymrank._parallel import default_workers

    monkeypatch.setenv("PERSYM_WORKERS", "3")
    assert default_workers() == 3
