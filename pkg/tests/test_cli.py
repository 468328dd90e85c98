import json

import pytest
from hypothesis import given, strategies as st

from gl2fix import __version__
from gl2fix.cli import Command, main, parse_command, run


def run_json(capsys, argv):
    status = main(argv + ["--json"])
    return status, json.loads(capsys.readouterr().out)


def test_count_translation(capsys):
    status, doc = run_json(capsys, ["count", "translation", "--p", "2", "--k", "1",
                                    "--subspace", "1", "--degree", "4", "--brute-force"])
    assert status == 0
    assert set(doc) == {"version", "command", "params", "result", "checks"}
    assert doc["version"] == __version__
    assert doc["result"]["formula_count"] == 1
    assert doc["result"]["brute_force_count"] == 1
    assert doc["result"]["match"] is True


def test_pgl_scan(capsys):
    status, doc = run_json(capsys, ["pgl-scan", "--p", "2", "--k", "1", "--max-degree", "8"])
    assert status == 0 and doc["result"]["polynomials"] == ["x^2 + x + 1"]


def test_count_homothety_and_psubgroup(capsys):
    status, doc = run_json(capsys, ["count", "homothety", "--p", "7", "--scalar", "2",
                                    "--degree", "3", "--brute-force"])
    assert status == 0 and doc["result"]["formula_count"] == 4
    assert doc["result"]["auxiliary"]["composition_count"] == 4
    status, doc = run_json(capsys, ["count", "psubgroup", "--p", "2", "--k", "2", "--generators",
                                    "[[1,1],[0,1]];[[1,t],[0,1]]", "--degree", "4",
                                    "--brute-force"])
    assert status == 0 and doc["result"]["formula_count"] == 0 == doc["result"]["brute_force_count"]


def test_enumerate_lists_canonical_order(capsys):
    status, doc = run_json(capsys, ["enumerate", "translation", "--p", "3", "--subspace", "1",
                                    "--degree", "6"])
    assert status == 0 and doc["result"]["count"] == 2
    assert doc["result"]["polynomials"] == ["x^6 + x^4 + x^3 + x^2 + 2*x + 2",
                                            "x^6 + x^4 + 2*x^3 + x^2 + x + 2"]
    status, doc = run_json(capsys, ["enumerate", "homothety", "--p", "5", "--scalar", "4",
                                    "--degree", "2"])
    assert doc["result"]["polynomials"] == ["x^2 + 2", "x^2 + 3"]


def test_decompose(capsys):
    status, doc = run_json(capsys, ["decompose", "translation", "--p", "2", "--subspace", "1",
                                    "--poly", "x^4 + x + 1"])
    assert status == 0 and doc["result"] == {"inner": "x^2 + x", "outer": "x^2 + x + 1"}
    status, doc = run_json(capsys, ["decompose", "homothety", "--p", "5", "--scalar", "4",
                                    "--poly", "x^2 + 3"])
    assert doc["result"]["outer"] == "x + 4"


def test_act_fixed_and_conjugate(capsys):
    status, doc = run_json(capsys, ["act", "--p", "3", "--matrix", "[[0,1],[1,0]]",
                                    "--poly", "x^2 + x + 2"])
    assert doc["result"]["image"] == "2*x^2 + x + 1"
    status, doc = run_json(capsys, ["fixed", "--p", "5", "--matrix", "[[4,0],[0,1]]",
                                    "--poly", "x^2 + 2", "--mode", "strict"])
    assert doc["result"]["fixed"] is True
    status, doc = run_json(capsys, ["psubgroup", "conjugate", "--p", "2",
                                    "--generators", "[[0,1],[1,0]]"])
    assert status == 0 and doc["result"]["subspace"] == "1"


@pytest.mark.parametrize("argv, code", [
    (["act", "--p", "5", "--matrix", "[[1,1],[1,1]]", "--poly", "x"], "singular-matrix"),
    (["act", "--p", "5", "--matrix", "[[1,1],[0,1]]", "--poly", "x^"], "syntax-error"),
    (["count", "translation", "--p", "4", "--subspace", "1", "--degree", "2"], "not-prime"),
    (["count", "translation", "--p", "2", "--degree", "2"], "missing-argument"),
    (["count", "psubgroup", "--p", "3", "--generators", "[[0,1],[1,0]]", "--degree", "2"],
     "not-p-group"),
    (["count", "translation", "--p", "3", "--k", "2", "--subspace", "1", "--degree", "9",
      "--brute-force", "--cap", "1000"], "cap-exceeded"),
])
def test_errors_have_stable_codes(capsys, argv, code):
    status, doc = run_json(capsys, argv)
    assert status == 2 and doc["error"]["code"] == code


def test_table_output(capsys):
    assert main(["pgl-scan", "--p", "2", "--max-degree", "4"]) == 0
    out = capsys.readouterr().out
    assert "x^2 + x + 1" in out and "pgl-scan" in out


def test_failed_check_gives_exit_one(monkeypatch):
    import gl2fix.cli as cli
    from gl2fix.invariant import CountReport

    monkeypatch.setattr(cli, "count_translation_invariant",
                        lambda *a, **k: CountReport({"degree": 2}, 1, 0))
    report, status = run(parse_command(["count", "translation", "--p", "2", "--subspace", "1",
                                        "--degree", "2", "--brute-force"]))
    assert status == 1 and report.checks[0]["passed"] is False


def test_reports_are_byte_stable(capsys):
    argv = ["enumerate", "translation", "--p", "2", "--k", "2", "--subspace", "t", "--degree", "4"]
    main(argv + ["--json"])
    first = capsys.readouterr().out
    main(argv + ["--json"])
    assert capsys.readouterr().out == first


optional_text = st.none() | st.sampled_from(["1", "t", "1,t", "x^2 + x + 1", "[[1,1],[0,1]]"])


@given(
    st.sampled_from([("count", "translation"), ("count", "psubgroup"), ("enumerate", "homothety"),
                     ("act", None), ("pgl-scan", None), ("verify", "all")]),
    st.none() | st.integers(2, 7), st.integers(1, 3), optional_text, optional_text,
    st.none() | st.integers(2, 9), st.booleans(), st.none() | st.integers(1, 10**6),
    st.booleans(), st.sampled_from(["strict", "projective"]),
)
def test_command_round_trip(vt, p, k, subspace, poly, degree, brute, cap, as_json, mode):
    cmd = Command(vt[0], vt[1], p=p, k=k, subspace=subspace, poly=poly, degree=degree,
                  brute_force=brute, cap=cap, json=as_json, mode=mode)
    assert parse_command(cmd.to_argv()) == cmd
