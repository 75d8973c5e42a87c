import os
import subprocess

import pytest

import edsverify

DATA = os.environ.get("EDS_DATA_DIR", os.path.join(os.path.dirname(__file__), "..", "..", "data"))
EDSV = os.environ.get("EDSV")


def data(name):
    return os.path.join(DATA, name)


@pytest.fixture(scope="module")
def gkdv():
    return edsverify.load(data("gkdv.eds"))


@pytest.fixture(scope="module")
def ch():
    return edsverify.load(data("ch.eds"))


def test_system_properties(gkdv):
    assert gkdv.name == "gkdv"
    assert gkdv.coordinates == ["x", "t", "u", "p", "q"]
    assert gkdv.forms == ["alpha1", "alpha2", "alpha3"]
    assert "family" in gkdv.connections
    assert "kdv" in gkdv.tables
    assert gkdv.form("alpha2") == edsverify.parse("system s\ncoord x t p q\nform a = dp /\\ dt - q*dx /\\ dt\n").form("a")


def test_render_round_trip(ch):
    once = ch.render()
    assert edsverify.parse(once).render() == once


def test_close_reports(gkdv):
    r = edsverify.close(gkdv)
    assert r["verdict"] == "verified"
    assert r["exit_code"] == 0
    assert r["schema"] == "edsv-report/1"
    assert len(r["certificates"]) == 3


def test_section_with_assumption(ch):
    r = edsverify.section(ch, assume=["beta = 2"])
    assert r["results"]["pde"] == "3*u*u_x - u*u_xxx + u_t - 2*u_x*u_xx - u_xxt"


def test_prolong_and_audit(gkdv, ch):
    assert edsverify.prolong(ch, "one_generator")["exit_code"] == 0
    audit = edsverify.audit(gkdv, "m_eq_n")
    assert audit["exit_code"] == 1
    assert audit["violations"][0]["triple"] == ["X1", "X2", "X7"]
    amb = edsverify.extract(gkdv, "generic_stated")
    assert amb["verdict"] == "ambiguous"
    assert amb["exit_code"] == 3


def test_backlund_numeric(gkdv):
    r = edsverify.backlund(gkdv, "consistent",
                           numeric={"n": "1", "m": "2", "gamma": "6", "alpha": "0", "kappa": "0", "sigma": "0"})
    assert r["results"]["remainder"] == "0"
    assert r["numeric"]["passed"] is True
    assert r["seed"] == 1


def test_parse_error_is_raised():
    with pytest.raises(edsverify.ParseError):
        edsverify.parse("system s\ncoord x t u\nform a = du /\\ dt + w*dx /\\ dt\n")
    assert issubclass(edsverify.ParseError, edsverify.Error)


def run_cli(*args):
    return subprocess.run([EDSV, *args], capture_output=True, text=True)


@pytest.mark.skipif(EDSV is None, reason="EDSV not set")
@pytest.mark.parametrize("args, code", [
    (["close", data("gkdv.eds")], 0),
    (["prolong", data("ch.eds"), "--connection", "one_generator"], 0),
    (["audit", data("gkdv.eds"), "--table", "m_eq_n"], 1),
    (["prolong", data("gkdv.eds"), "--extract", "--assume-case", "generic_stated"], 3),
    (["close", os.devnull], 2),
    (["frobnicate"], 2),
])
def test_cli_exit_codes(args, code):
    assert run_cli(*args).returncode == code


@pytest.mark.skipif(EDSV is None, reason="EDSV not set")
def test_cli_machine_output_is_deterministic():
    args = ["conserve", data("gkdv.eds"), "--candidate", "theta", "--format", "machine"]
    assert run_cli(*args).stdout == run_cli(*args).stdout
