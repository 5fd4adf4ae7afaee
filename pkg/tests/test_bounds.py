from __future__ import annotations

import json

import pytest

from agtrellis import bounds as B
from agtrellis.errors import HypothesisViolated
from agtrellis.gonality import gs_hyperelliptic, gs_plane_curve
from agtrellis.hermitian import ag_params_abstract, hermitian_code


def test_simple_bounds():
    assert B.wolf_bound(27, 12) == 12
    assert B.clifford_bound(27, 3) == 10
    assert B.goppa_like_bound(27, 12, 3) == 9
    assert B.gamma2_bound(27, 12, 3, 3) == 10
    assert B.fso_delta_bound(8, 3, 4) == 2
    with pytest.raises(HypothesisViolated):
        B.wolf_bound(3, 4)
    with pytest.raises(HypothesisViolated):
        B.fso_delta_bound(8, 3, 5)
    with pytest.raises(HypothesisViolated):
        B.gamma2_bound(27, 14, 3, 3)


def test_equality_region():
    assert B.equality_region(27, 12, 3)
    assert not B.equality_region(27, 13, 3)
    assert not B.equality_region(27, 18, 3)
    assert B.equality_region(27, 19, 3)
    assert B.middle_region(27, 14, 3)


def test_gonality_bound_hermitian_q3():
    b = B.gonality_bound(gs_plane_curve(3), 27, 14, 12)
    # 2m - n = 1 and split_min(1) = 1 for <3, 4>
    assert (b.value, b.argument, b.equality_region) == (11, 1, False)
    assert b.chained == 12 - 2
    low = B.gonality_bound(gs_plane_curve(3), 27, 5, 3)
    assert low.equality_region and low.value == 3


def test_hyperelliptic_bound_matches_gamma2_bound():
    gs = gs_hyperelliptic(4)
    for m in range(0, 12):
        k = min(m + 1, 6)
        n = 20
        if 2 * k <= n:
            b = B.gonality_bound(gs, n, m, k)
            assert b.value >= B.gamma2_bound(n, k, 4, 2)


def test_report_for_code():
    h = hermitian_code(3, 14)
    r = B.bound_report(h.ag, h.code, search_budget=50, seed=1)
    assert r.exact_s == 12 and r.gonality == 11 and r.searched_s >= 11
    assert r.violations() == []
    assert json.loads(r.to_json())["gonality"] == 11
    assert r.to_json() == B.bound_report(h.ag, h.code, search_budget=50, seed=1).to_json()
    assert "gonality" in r.to_text()


def test_report_fso_applicability():
    h = hermitian_code(2, 4)
    r = B.bound_report(h.ag, h.code, distance=4)
    assert r.applicability["fso_bound"].applicable and r.fso_bound == B.fso_delta_bound(8, h.code.k, 4)
    r = B.bound_report(h.ag, h.code)
    assert not r.applicability["fso_bound"].applicable


def test_report_abstract_large_k():
    p = ag_params_abstract(64, 40, gs_plane_curve(4))
    r = B.bound_report(p)
    assert r.gonality is None and not r.applicability["gonality"].applicable
    assert r.goppa_like == B.goppa_like_bound(64, p.k, 6)


def test_report_rejects_mismatched_code():
    h = hermitian_code(2, 3)
    with pytest.raises(HypothesisViolated):
        B.bound_report(ag_params_abstract(8, 4, gs_plane_curve(2)), h.code)
