"""Smoke tests for the python bindings (run against the build tree)."""

import json
import math
import os
import sys

import pytest


def _load_core():
    ext_dir = os.environ.get("BLASIUS_EXT_DIR")
    if ext_dir:
        sys.path.insert(0, ext_dir)
    try:
        import _core  # built extension, in-tree layout

        return _core
    except ImportError:
        pass
    blasiuscert = pytest.importorskip("blasiuscert")
    return blasiuscert._core


core = _load_core()


def test_version():
    assert core.__version__ == "0.1.0"


def test_erfc_enclosure_brackets_reference():
    lo, hi = core.erfc_enclosure("1.5")
    ref = 0.0338948535246892729330237383540521413185895207
    assert float(lo) <= ref <= float(hi)
    assert float(hi) - float(lo) < 1e-12


def test_erfc_rejects_small_arguments():
    with pytest.raises(Exception):
        core.erfc_enclosure("0.5")


def test_range_bound_contains_samples():
    # p(x) = 1 - 2x + x^3 on [-1, 2]
    lo, hi = core.range_bound(["1", "-2", "0", "1"], "-1", "2")
    for k in range(51):
        x = -1 + 3 * k / 50
        v = 1 - 2 * x + x**3
        assert float(lo) - 1e-12 <= v <= float(hi) + 1e-12


def test_eval_point_inner():
    r = core.eval_point("0", "F''")
    assert r["form"] == "inner"
    assert r["value"] == 1.0
    r = core.eval_point("1.25", "F")
    assert 0.0 < r["value"] < 2.0
    assert r["error_bound"] == 4e-6


def test_eval_point_farfield():
    r = core.eval_point("10", "F'")
    assert r["form"] == "farfield"
    assert abs(r["value"] - 1.6551904561) < 1e-9
    assert r["error_bound"] < 1e-60  # e^{-3t} with t ~ 68


def test_shooting_matches_c2():
    s = core.shooting(1e-18)
    a, b, c = core.c2_triple()
    assert abs(a - 1.6551904561499) < 1e-11
    assert abs(s["a"] - a) < 5e-7
    assert abs(s["fpp0"] - 0.469600) < 2.2e-5
    # weighted distance to the nominal center
    da = s["a"] - 3221 / 1946
    db = s["b"] + 2763 / 1765
    dc = s["c"] - 377 / 1613
    assert math.sqrt(da * da + db * db / 4 + dc * dc / 4) <= 5e-5


def test_certificate_passes_and_has_wall_stress():
    cert = json.loads(core.certify_json())
    assert cert["overall"] == "pass"
    names = [s["name"] for s in cert["sections"]]
    assert names[0] == "inner-remainder"
    assert "wall-stress" in names
    ws = next(s for s in cert["sections"] if s["name"] == "wall-stress")
    fpp0 = next(i for i in ws["items"] if i["name"] == "fpp0")
    lo, hi = float(fpp0["computed"]["lo"]), float(fpp0["computed"]["hi"])
    assert 0.469578 <= lo <= hi <= 0.469622


def test_certificate_failure_path():
    cert = json.loads(core.certify_json(rho0="1e-7"))
    assert cert["overall"] == "fail"
