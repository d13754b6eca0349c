import json
from fractions import Fraction

import pytest

import cuboidchar as cc


def test_qpq_coefficients():
    assert cc.build_qpq(2, 1) == [-1024, 0, -5760, 0, -3620, 0, -535, 0, -30, 0, 1]
    assert cc.half_polynomial(1, 2) == [-1024, 1920, 2140, 905, 90, 1]
    assert cc.build_characteristic(1, 1, 1) == [1, 0, 2, 0, -1, 0, -4, 0, -1, 0, 2, 0, 1]


def test_big_integers_round_trip():
    p, q = 10**30 + 1, 7
    coeffs = cc.build_qpq(p, q)
    assert coeffs[0] == -(p**10) * q**10
    assert cc.integer_sqrt_floor(10**60 + 5) == 10**30


def test_identities():
    assert cc.verify_factorization(3, 2, "second")
    assert cc.verify_reversion(2, 1)
    report = cc.run_identities(10, 10)
    assert report["ok"] and report["pairs_checked"] > 0


def test_isolation_returns_fractions():
    roots = cc.isolate_roots([-2, 0, 1], Fraction(0), Fraction(2), Fraction(1, 1024))
    assert len(roots) == 1
    lo, hi = roots[0]
    assert isinstance(lo, Fraction)
    assert lo * lo < 2 <= hi * hi


def test_certification_at_59_1():
    roots = cc.certify_roots(59, 1, Fraction(1, 2**20))
    assert [r["label"] for r in roots] == ["t1", "t2", "t3", "t4", "t5"]
    assert 3597 <= roots[2]["lo"] and roots[2]["hi"] <= 3597 + Fraction(9, 59)
    assert [r["contained"] for r in roots] == [True, True, True, False, True]
    with pytest.raises(cc.ContainmentFailure):
        cc.certify_roots(59, 1, Fraction(1, 2**20), require_containment=True)
    assert cc.verify_correspondence(59, 1, Fraction(1, 2**20))


def test_intervals_and_regions():
    fwd = cc.forward_intervals(59, 1)
    assert fwd[2]["lo"] == "3597/1"
    assert cc.classify_region(2, 1) == "linear"
    assert cc.classify_region(178, 3) == "nonlinear"
    assert cc.classify_region(59, 1) == "no_cuboid"
    with pytest.raises(cc.HypothesisNotMet):
        cc.forward_intervals(58, 1)
    with pytest.raises(cc.InvalidSeed):
        cc.classify_region(177, 3)


def test_filter_predicates():
    assert cc.admissible(2, 1, 5)
    assert not cc.admissible(2, 1, 9)
    assert cc.upper_bound_floor(2, 1) == 7
    assert cc.upper_bound_holds(2, 1, 7) and not cc.upper_bound_holds(2, 1, 8)


def test_sign_checks():
    report = cc.sign_checks(60, 1)
    verdicts = [entry["sign_change"] for entry in report["labels"]]
    assert verdicts == ["PASS", "PASS", "PASS", "FAIL", "PASS"]


def test_search_and_resume(tmp_path):
    rec = cc.search_seed(178, 3)
    assert rec["integer_points_tested"] == ["32735"]
    report = tmp_path / "r.jsonl"
    ckpt = tmp_path / "r.ckpt"
    first = cc.run_search(2, 60, str(report), resume=str(ckpt), stop_after_rows=1)
    assert first["rows_written"] == 1 and not first["complete"]
    second = cc.run_search(2, 60, str(report), resume=str(ckpt), workers=2)
    assert second["resumed"] and second["complete"]
    lines = [json.loads(line) for line in report.read_text().splitlines()]
    assert [(r["q"], r["p"]) for r in lines] == sorted(((r["q"], r["p"]) for r in lines), key=lambda k: (int(k[0]), int(k[1])))
    with pytest.raises(cc.CheckpointMismatch):
        cc.run_search(2, 61, str(report), resume=str(ckpt))
