"""Smoke tests for the python bindings; the heavy verification lives in the
C++ unit and acceptance suites."""

import os

import pytest

import reldom

FIXTURES = os.environ.get("RELDOM_FIXTURE_DIR")

pytestmark = pytest.mark.skipif(FIXTURES is None, reason="RELDOM_FIXTURE_DIR not set")


def fx(name):
    return os.path.join(FIXTURES, name)


def test_analyze_semisimple_point():
    rep = reldom.analyze(fx("ss.alg"))
    assert rep["schema"] == 1
    assert rep["algebra"]["dimension"] == 1
    assert rep["report"]["gldim"] == 0


def test_square_pair_and_domdim():
    rep = reldom.pair(fx("sq.alg"), wrt="Q")
    assert rep["report"]["classification"] == "relative Auslander pair"
    assert rep["report"]["n_min"] == 2
    assert rep["report"]["n_max"] == 2
    assert rep["report"]["faithful_dimension"] == 2

    dom = reldom.domdim(fx("sq.alg"), module="P4", wrt="Q")
    assert dom["report"]["relative_dominant_dimension"] == 2

    inf = reldom.domdim(fx("sq.alg"), module="P1+P2+P3", wrt="Q")
    assert inf["report"]["relative_dominant_dimension"] == "inf"


def test_canonical_tilt_summands():
    rep = reldom.tilt(fx("sq.alg"), wrt="Q", d=1)
    assert rep["report"]["tilting"]["tilting"] == "yes"
    assert rep["report"]["tilting"]["cotilting"] == "yes"
    assert rep["report"]["tilting"]["tilting_parameter"] == 1
    dims = sorted(tuple(s["dim_vector"]) for s in rep["report"]["summands"])
    assert dims == [(1, 0, 1, 0), (1, 1, 0, 0), (1, 1, 1, 0), (1, 1, 1, 1)]


def test_field_override_matches_rationals():
    qq = reldom.pair(fx("sq.alg"), wrt="Q")
    gf = reldom.pair(fx("sq.alg"), wrt="Q", field="GF:7")
    assert qq["report"] == gf["report"]


def test_errors_surface_as_exceptions():
    with pytest.raises(reldom.ReldomError):
        reldom.analyze(fx("missing.alg"))
    with pytest.raises(reldom.Undetermined):
        reldom.domdim(fx("loops.alg"), module="S1", wrt="I1", cap=2)


def test_raw_run_escape_hatch():
    code, out, err = reldom.run(["analyze", fx("a2.alg")])
    assert code == 0
    assert "gldim 1" in out


def test_reproduce_reports_every_check():
    rep = reldom.reproduce(fixtures=FIXTURES)
    assert rep["schema"] == 1
    assert rep["total"] >= 45
    failing = [c for c in rep["checks"] if not c["pass"]]
    # the one expected red check is the documented double-centralizer clause
    assert [c["name"] for c in failing] == ["double centralizer on (T_Q, Q) over the square"]
    assert rep["passed"] == rep["total"] - 1
    assert rep["all_checks_pass"] is False
