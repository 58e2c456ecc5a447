"""Verification of the adjacent-t monotonicity c_t(N) <= c_{t+1}(N).

Two legs: an exhaustive exact scan over a desk-scale (t, N) box, and
per-pair certificates at large parameters that combine exact counts with the
certified estimators.  The scan streams two adjacent t-series at a time and
parallelizes over t-blocks; results are deterministic and ordered by (t, N).
"""

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from . import exact
from .asymptotics import (
    HypothesisError,
    estimate_difference,
    estimate_main,
    estimate_small_t,
    log_interval,
    small_t_hypotheses,
)
from .backend import kernels

MAX_N_CAP = 10_000  # default resource cap for the exhaustive scan
EXACT_PAIR_CAP = 20_000  # n up to which certify_pair just compares exact counts


@dataclass
class VerificationReport:
    max_n: int
    max_t: Optional[int]
    violations: list  # (t, n) with c_t(n) > c_{t+1}(n)
    equalities: list  # (t, n) with c_t(n) = c_{t+1}(n), 4 <= t < n-1
    certified_pairs: list = field(default_factory=list)
    pairs_checked: int = 0
    workers: int = 1
    elapsed_s: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "max_n": self.max_n,
            "max_t": self.max_t,
            "violations": [list(v) for v in self.violations],
            "equalities": [list(e) for e in self.equalities],
            "certified_pairs": list(self.certified_pairs),
            "pairs_checked": self.pairs_checked,
            "workers": self.workers,
            "elapsed_s": self.elapsed_s,
        }


def _series_values(t: int, limit: int, p: list) -> list:
    inner = exact.core_inner_factor(t, limit // t)
    return kernels.core_series_from_inner(inner, t, p, limit)


def _scan_block(args) -> tuple:
    """Compare pairs (t, t+1) for t in [t_lo, t_hi] over t+2 <= n <= max_n."""
    t_lo, t_hi, max_n, corrupt = args
    p = kernels.partition_series(max_n)
    violations, equalities = [], []
    pairs = 0
    prev = _series_values(t_lo, max_n, p)
    for t in range(t_lo, t_hi + 1):
        nxt = _series_values(t + 1, max_n, p)
        for n in range(t + 2, max_n + 1):
            a = prev[n]
            b = nxt[n]
            if corrupt is not None and corrupt[0] == t and corrupt[1] == n:
                a = b + 1
            pairs += 1
            if a > b:
                violations.append((t, n))
            elif a == b:
                equalities.append((t, n))
        prev = nxt
    return violations, equalities, pairs


def default_workers() -> int:
    env = os.environ.get("TCORE_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def _balanced_blocks(t_lo: int, t_hi: int, parts: int) -> list:
    """Contiguous t-blocks with roughly equal sum of 1/t (the per-t cost)."""
    weights = [1.0 / t for t in range(t_lo, t_hi + 1)]
    total = sum(weights)
    target = total / parts
    blocks = []
    start = t_lo
    acc = 0.0
    for t, w in zip(range(t_lo, t_hi + 1), weights):
        acc += w
        if acc >= target and t < t_hi:
            blocks.append((start, t))
            start = t + 1
            acc = 0.0
    blocks.append((start, t_hi))
    return blocks


def verify_exact(
    max_n: int,
    max_t: Optional[int] = None,
    workers: Optional[int] = None,
    resource_cap: int = MAX_N_CAP,
    _corrupt: Optional[tuple] = None,
) -> VerificationReport:
    """Exhaustive exact comparison over 4 <= t < n-1, n <= max_n
    (and t <= max_t when given).  Big-integer comparisons only."""
    if max_n < 0:
        raise ValueError("max_n must be nonnegative")
    if max_n > resource_cap:
        raise ValueError(f"max_n {max_n} exceeds resource cap {resource_cap}")
    started = time.monotonic()
    t_hi = max_n - 2
    if max_t is not None:
        t_hi = min(t_hi, max_t)
    if t_hi < 4:
        return VerificationReport(
            max_n=max_n, max_t=max_t, violations=[], equalities=[], workers=1,
            elapsed_s=time.monotonic() - started,
        )
    workers = workers or default_workers()
    workers = max(1, min(workers, t_hi - 3))
    blocks = _balanced_blocks(4, t_hi, workers * 4)
    tasks = [(lo, hi, max_n, _corrupt) for lo, hi in blocks]
    violations, equalities = [], []
    pairs = 0
    if workers == 1:
        results = map(_scan_block, tasks)
        for v, e, c in results:
            violations.extend(v)
            equalities.extend(e)
            pairs += c
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for v, e, c in pool.map(_scan_block, tasks):
                violations.extend(v)
                equalities.extend(e)
                pairs += c
    return VerificationReport(
        max_n=max_n,
        max_t=max_t,
        violations=sorted(violations),
        equalities=sorted(equalities),
        pairs_checked=pairs,
        workers=workers,
        elapsed_s=time.monotonic() - started,
    )


@dataclass(frozen=True)
class PairCertificate:
    t: int
    n: int
    method: str  # exact | difference | ratio | inconclusive
    ok: bool
    equality: bool
    margin: float
    detail: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "t": self.t,
            "n": self.n,
            "method": self.method,
            "ok": self.ok,
            "equality": self.equality,
            "margin": self.margin,
            "detail": dict(self.detail),
        }


def _certified_point_estimate(t: int, n: int):
    """A certified single-point estimate, small-t regime first."""
    if t >= 8 and small_t_hypotheses(t, n):
        return estimate_small_t(t, n)
    try:
        est = estimate_main(t, n)
    except Exception:
        return None
    return est if est.hypotheses_ok else None


def certify_pair(t: int, n: int, exact_cap: int = EXACT_PAIR_CAP) -> PairCertificate:
    """Establish c_t(n) <= c_{t+1}(n) by, in order: exact comparison when
    affordable, the difference certificate, or separated ratio intervals.
    margin is the worst-case slack of the winning method (log units for the
    ratio route, multiplier units for the difference route)."""
    if t < 1 or n < 0:
        raise ValueError("requires t >= 1 and n >= 0")
    if n <= exact_cap:
        a = exact.tcore_count(t, n)
        b = exact.tcore_count(t + 1, n)
        margin = 0.0
        if a > 0 and b > 0:
            margin = exact.log_of_integer(b) - exact.log_of_integer(a)
        return PairCertificate(
            t=t, n=n, method="exact", ok=a <= b, equality=a == b, margin=margin,
            detail={"c_t": str(a), "c_t1": str(b)},
        )
    if t >= 6 and n > t:
        est = estimate_difference(t, n - t)
        lower = (
            est.diagnostics["multiplier_center"] - est.diagnostics["multiplier_halfwidth"]
        )
        if est.hypotheses_ok and lower > 0.0:
            return PairCertificate(
                t=t, n=n, method="difference", ok=True, equality=False, margin=lower,
                detail={
                    "y": est.diagnostics["y"],
                    "multiplier_center": est.diagnostics["multiplier_center"],
                    "multiplier_halfwidth": est.diagnostics["multiplier_halfwidth"],
                },
            )
    est_lo = _certified_point_estimate(t, n)
    est_hi = _certified_point_estimate(t + 1, n)
    if est_lo is not None and est_hi is not None:
        _, upper_t = log_interval(est_lo)
        lower_t1, _ = log_interval(est_hi)
        margin = lower_t1 - upper_t
        if margin > 0.0:
            return PairCertificate(
                t=t, n=n, method="ratio", ok=True, equality=False, margin=margin,
                detail={"regimes": (est_lo.regime, est_hi.regime)},
            )
    return PairCertificate(
        t=t, n=n, method="inconclusive", ok=False, equality=False, margin=0.0,
    )


def certify_interval_containment(t: int, n: int, regime: str) -> tuple:
    """Check that the exact count lies inside the certified interval of the
    given regime ('main' or 'small_t'), or - for 'difference' - that the exact
    adjacent difference lies in the certified multiplier interval times the
    exact base count.  Returns (contained, margin); margin is the distance to
    the nearer endpoint (log units, multiplier units for 'difference')."""
    if regime == "main":
        est = estimate_main(t, n)
    elif regime == "small_t":
        est = estimate_small_t(t, n)
    elif regime == "difference":
        return _difference_containment(t, n)
    else:
        raise ValueError(f"unsupported regime {regime!r}")
    if not est.hypotheses_ok:
        raise HypothesisError(f"hypotheses of regime {regime} fail at ({t}, {n})")
    lo, hi = log_interval(est)
    lg = exact.log_of_integer(exact.tcore_count(t, n))
    return (lo <= lg <= hi), min(lg - lo, hi - lg)


def _difference_containment(t: int, n: int) -> tuple:
    est = estimate_difference(t, n)
    if not est.hypotheses_ok:
        raise HypothesisError(f"difference hypotheses fail at ({t}, {n})")
    base = exact.tcore_count(t, n)
    diff = exact.tcore_count(t + 1, n + t) - exact.tcore_count(t, n + t)
    center = est.diagnostics["multiplier_center"]
    halfwidth = est.diagnostics["multiplier_halfwidth"]
    ratio = Fraction(diff, base)  # exact; comparisons against floats are exact too
    lo = center - halfwidth
    hi = center + halfwidth
    contained = lo <= ratio <= hi
    margin = float(min(ratio - Fraction(lo), Fraction(hi) - ratio))
    return contained, margin
