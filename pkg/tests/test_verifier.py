"""Verifier tests: exhaustive scans at small scale, pair certificates, and
interval containment plumbing."""

import pytest

from tcore import exact
from tcore.asymptotics import HypothesisError
from tcore.verifier import (
    certify_interval_containment,
    certify_pair,
    verify_exact,
)


def test_exhaustive_small_range():
    report = verify_exact(300, workers=1)
    assert report.violations == []
    assert report.equalities == [(5, 10)]
    # pairs: all (t, n) with 4 <= t, t+2 <= n <= 300
    assert report.pairs_checked == sum(300 - (t + 2) + 1 for t in range(4, 299))


def test_exhaustive_tiny_range_clean():
    report = verify_exact(9, workers=1)
    assert report.violations == []
    assert report.equalities == []


def test_exhaustive_max_t_restriction():
    report = verify_exact(100, max_t=6, workers=1)
    assert report.violations == []
    assert report.equalities == [(5, 10)]
    assert report.pairs_checked == sum(100 - (t + 2) + 1 for t in (4, 5, 6))


def test_top_edge_pair_excluded():
    # c_9(10) = 33 > c_10(10) = 32, but t = n-1 is excluded from comparison
    assert exact.tcore_count(9, 10) == 33
    assert exact.tcore_count(10, 10) == 32
    report = verify_exact(12, workers=1)
    assert report.violations == []
    assert all(t < n - 1 for t, n in report.equalities)


def test_fault_injection_detected():
    report = verify_exact(60, workers=1, _corrupt=(7, 30))
    assert report.violations == [(7, 30)]


def test_resource_cap():
    with pytest.raises(ValueError):
        verify_exact(20_000)


def test_deterministic_reports():
    a = verify_exact(150, workers=2)
    b = verify_exact(150, workers=1)
    assert a.violations == b.violations
    assert a.equalities == b.equalities
    assert a.pairs_checked == b.pairs_checked


def test_certify_pair_exact_equality():
    cert = certify_pair(5, 10)
    assert cert.method == "exact"
    assert cert.ok
    assert cert.equality
    assert cert.margin == 0.0


def test_certify_pair_exact_strict():
    cert = certify_pair(7, 100)
    assert cert.method == "exact"
    assert cert.ok and not cert.equality
    assert cert.margin > 0.0


def test_certify_pair_ratio_route():
    cert = certify_pair(50, 100_000)
    assert cert.method == "ratio"
    assert cert.ok
    assert cert.margin > 0.0


def test_certify_pair_inconclusive():
    # beyond the exact cap with no certified regime available
    cert = certify_pair(4, 50_000)
    assert cert.method == "inconclusive"
    assert not cert.ok


def test_containment_hypothesis_error():
    with pytest.raises(HypothesisError):
        certify_interval_containment(8, 50, "small_t")
    with pytest.raises(ValueError):
        certify_interval_containment(8, 50, "bogus")


def test_report_roundtrip():
    report = verify_exact(60, workers=1)
    d = report.to_dict()
    assert d["equalities"] == [[5, 10]]
    assert d["violations"] == []
    assert d["pairs_checked"] == report.pairs_checked
