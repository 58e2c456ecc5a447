"""Built-in property suites.

Each check pins one of the analytic facts the certified estimators lean on
(monotonicity bands, dual-expansion agreement, functional equations, the
Gaussian-integral bounds, the adjacent-t step bounds) at fixed numeric
instantiations.  'quick' runs everything that finishes in seconds; 'full'
adds the exact-count interval containments, which cost minutes.
"""

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

from . import exact
from .asymptotics import (
    central_arc_ratio,
    curvature_on_axis,
    gaussian_integral_check,
    minor_arc_ratio,
)
from .modular import (
    e_of,
    eta_log,
    eta_log_deriv,
    eta_log_deriv_prime,
    eta_quotient_log,
    expansion_polynomials,
    quotient_step_log,
)
from .saddle import (
    kappa_constants,
    saddle_bracket,
    saddle_residual,
    scale_residual,
    solve_saddle,
    solve_scaled_saddle,
)


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str


def _logspace(lo: float, hi: float, num: int) -> list:
    step = (math.log(hi) - math.log(lo)) / (num - 1)
    return [math.exp(math.log(lo) + i * step) for i in range(num)]


# --- individual checks ----------------------------------------------------------

def check_polynomial_tables() -> CheckResult:
    """Recurrence tables match the closed rows, and the derivative-side
    polynomial equals r^2 (F_k - F_k') exactly, through k = 8."""
    t2 = expansion_polynomials(2)
    t4 = expansion_polynomials(4)
    rows_ok = (
        t2.fn_low == 0
        and t2.fn_coeffs == (Fraction(-2), Fraction(1))
        and t4.deriv_coeffs == (0, 0, -60, 60, -15, 1)
    )
    identity_ok = True
    for k in range(0, 9):
        tab = expansion_polynomials(k)
        f = dict(enumerate(tab.fn_coeffs, start=tab.fn_low))
        # r^2 (F - F'): F term at e -> e+2; F' term at e -> e+1 scaled by e
        lhs = {}
        for e, c in f.items():
            lhs[e + 2] = lhs.get(e + 2, Fraction(0)) + c
            lhs[e + 1] = lhs.get(e + 1, Fraction(0)) - e * c
        lhs = {e: c for e, c in lhs.items() if c}
        g = {e: Fraction(c) for e, c in enumerate(tab.deriv_coeffs) if c}
        if lhs != g:
            identity_ok = False
    ok = rows_ok and identity_ok
    return CheckResult("polynomial-table-identity", ok, f"rows={rows_ok} identity={identity_ok}")


def check_dual_expansion() -> CheckResult:
    """Both expansions of D_k and D_k' agree to 1e-10 relative in the
    overlap band y in {0.9, 1.0, 1.1}, on and slightly off the axis."""
    worst = 0.0
    points = [complex(0.0, y) for y in (0.9, 1.0, 1.1)] + [complex(0.25, 0.95)]
    for z in points:
        for k in range(5):
            for fn in (eta_log_deriv, eta_log_deriv_prime):
                a = fn(k, z, branch="q")
                b = fn(k, z, branch="inverted")
                worst = max(worst, abs(a - b) / max(abs(a), 1e-30))
    return CheckResult("dual-expansion-agreement", worst < 1e-10, f"worst rel diff {worst:.2e}")


def check_eta_functional_equation() -> CheckResult:
    """log eta(iy) = -log(y)/2 + log eta(i/y) at y = 2, residual < 1e-12."""
    y = 2.0
    lhs = eta_log(complex(0.0, y))
    rhs = -0.5 * math.log(y) + eta_log(complex(0.0, 1.0 / y))
    resid = abs(lhs - rhs)
    return CheckResult("eta-functional-equation", resid < 1e-12, f"residual {resid:.2e}")


def check_deriv2_functional_equation() -> CheckResult:
    """D_2'(z) + D_2'(-1/z) = -1/(4 pi i) at z = 0.1 + 0.7i, residual < 1e-10."""
    z = complex(0.1, 0.7)
    value = eta_log_deriv_prime(2, z) + eta_log_deriv_prime(2, -1.0 / z)
    resid = abs(value - (-1.0 / (4j * math.pi)))
    return CheckResult("deriv2-functional-equation", resid < 1e-10, f"residual {resid:.2e}")


def check_d2_monotone() -> CheckResult:
    """y -> D_2(iy) strictly decreasing on [1e-3, 1e3] with values in (0, 1/12).

    Above y ~ 118 the true value e^(-2 pi y)-ish underflows double precision
    to exact 0.0; strictness is asserted until that floor."""
    grid = _logspace(1e-3, 1e3, 41)
    vals = [eta_log_deriv(2, complex(0.0, y)).real for y in grid]
    decreasing = all(
        a > b or (a == 0.0 and b == 0.0) for a, b in zip(vals, vals[1:])
    )
    in_range = all(0.0 <= v < 1.0 / 12.0 for v in vals) and vals[0] > 0.0
    return CheckResult(
        "d2-monotone-band", decreasing and in_range,
        f"decreasing={decreasing} range={in_range}",
    )


def check_d2_slope_band() -> CheckResult:
    """For y <= 1/10 and ty <= 1: (D_2(iy) - D_2(ity))/(ty - y) in (1/8pi, 1/4pi).

    The gap below 1/4pi scales like e^(-2 pi / ty), so the grid keeps
    ty >= 0.2 where doubles still resolve the strict inequality."""
    ok = True
    worst = ""
    for y in (1e-3, 1e-2, 0.05, 0.1):
        for ty in (0.2, 0.3, 0.5, 0.7, 0.9, 1.0):
            t = ty / y
            if t <= 1:
                continue
            slope = (
                eta_log_deriv(2, complex(0.0, y)).real
                - eta_log_deriv(2, complex(0.0, ty)).real
            ) / (ty - y)
            if not (1.0 / (8.0 * math.pi) < slope < 1.0 / (4.0 * math.pi)):
                ok = False
                worst = f"slope {slope:.8f} at y={y}, ty={ty}"
    return CheckResult("d2-slope-band", ok, worst or "all slopes inside (1/8pi, 1/4pi)")


def check_d2_diff_band() -> CheckResult:
    """For y <= 1/10, ty >= 1: D_2(iy) - D_2(ity) in (1/16, 1/12); and the
    anchor value D_2(i/10) - D_2(i) = 0.0635 +- 0.0005."""
    ok = True
    for y in (1e-3, 1e-2, 0.1):
        for ty in (1.0, 2.0, 10.0):
            diff = (
                eta_log_deriv(2, complex(0.0, y)).real
                - eta_log_deriv(2, complex(0.0, ty)).real
            )
            if not (1.0 / 16.0 < diff < 1.0 / 12.0):
                ok = False
    anchor = (
        eta_log_deriv(2, complex(0.0, 0.1)).real - eta_log_deriv(2, complex(0.0, 1.0)).real
    )
    anchor_ok = abs(anchor - 0.0635) <= 0.0005
    return CheckResult(
        "d2-difference-band", ok and anchor_ok, f"anchor {anchor:.5f} (want 0.0635+-0.0005)"
    )


def check_d3_bounds() -> CheckResult:
    """D_3(iy) increasing with range (-1/4, 0), and the third-to-second
    difference ratio stays below 6 for y <= 1/10."""
    grid = _logspace(1e-3, 1e2, 25)
    vals = [eta_log_deriv(3, complex(0.0, y)).real for y in grid]
    increasing = all(a < b for a, b in zip(vals, vals[1:]))
    in_range = all(-0.25 < v < 0.0 for v in vals)
    ratio_ok = True
    worst = 0.0
    for y in (1e-3, 1e-2, 0.1):
        for t in (1.5, 2, 5, 20, 100, 1000):
            num = (
                eta_log_deriv(3, complex(0.0, y)).real
                - eta_log_deriv(3, complex(0.0, t * y)).real
            )
            den = (
                eta_log_deriv(2, complex(0.0, y)).real
                - eta_log_deriv(2, complex(0.0, t * y)).real
            )
            r = abs(num / den)
            worst = max(worst, r)
            if r >= 6.0:
                ratio_ok = False
    return CheckResult(
        "d3-bounds", increasing and in_range and ratio_ok,
        f"monotone={increasing} range={in_range} worst ratio {worst:.3f} (< 6)",
    )


def check_d4_ratio() -> CheckResult:
    """|D_4(z) - D_4(tz)| / (D_2(iy) - D_2(ity)) < 36 for |x| < y/3, y <= 1/10."""
    ok = True
    worst = 0.0
    for y in (1e-3, 1e-2, 0.1):
        for xfrac in (0.0, 0.15, 0.3):
            x = xfrac * y
            z = complex(x, y)
            for t in (1.5, 2, 5, 20, 100, 1000):
                num = abs(eta_log_deriv(4, z) - eta_log_deriv(4, t * z))
                den = (
                    eta_log_deriv(2, complex(0.0, y)).real
                    - eta_log_deriv(2, complex(0.0, t * y)).real
                )
                r = num / den
                worst = max(worst, r)
                if r >= 36.0:
                    ok = False
    return CheckResult("d4-ratio", ok, f"worst ratio {worst:.3f} (< 36)")


def check_gaussian_sweep() -> CheckResult:
    """Gaussian-integral bounds hold across the hypothesis box corners."""
    ok = True
    base = gaussian_integral_check(39.0, 0.0, 0.0, 0.0)
    if not base.bounds_ok or abs(base.i_value.imag) > 1e-12 or abs(base.j_value) > 1e-12:
        ok = False
    count = 1
    for a in (39.0, 100.0, 1000.0):
        for b in (-0.079, 0.079):
            for s in (-0.9, 0.9):
                for err in (1.0, -1.0, 1j, -1j):
                    res = gaussian_integral_check(a, b, s, err)
                    count += 1
                    if not res.bounds_ok:
                        ok = False
    return CheckResult("gaussian-integral-sweep", ok, f"{count} instantiations checked")


def check_step_log_bounds() -> CheckResult:
    """Adjacent-t step bounds at (t, y) = (1000, 0.001):
    |L| <= 7.5 |tz| e^(-2 pi t y) and
    |L + e(tz)(2 pi i t z + 1)| <= (40|z| + 22 e^(-2 pi t y)) |tz| e^(-2 pi t y)."""
    t, y = 1000, 0.001
    z = complex(0.0, y)
    step = quotient_step_log(z, t)
    tz = t * z
    damp = abs(tz) * math.exp(-2.0 * math.pi * t * y)
    ok1 = abs(step) <= 7.5 * damp
    second = step + e_of(tz) * (2j * math.pi * tz + 1.0)
    bound2 = (40.0 * abs(z) + 22.0 * math.exp(-2.0 * math.pi * t * y)) * damp
    ok2 = abs(second) <= bound2
    direct = (
        eta_quotient_log(z, t + 1)
        - eta_quotient_log(z, t)
        - 2j * math.pi * (2 * t + 1) * z / 24.0
    )
    ok3 = abs(step - direct) < 1e-10
    return CheckResult(
        "step-log-bounds", ok1 and ok2 and ok3,
        f"|L|={abs(step):.3e} (<= {7.5 * damp:.3e}), refined ok={ok2}, consistency ok={ok3}",
    )


def check_quotient_series_consistency() -> CheckResult:
    """exp(log quotient) * e((1 - t^2) z / 24) matches the exact t-core
    series at z = 0.35i, t = 5, to 1e-8."""
    t = 5
    z = complex(0.0, 0.35)
    lhs = e_of((1 - t * t) * z / 24.0) * cmath.exp(eta_quotient_log(z, t))
    series = exact.tcore_counts(t, 30)
    rhs = sum(series.values[n] * e_of(n * z) for n in range(31))
    diff = abs(lhs - rhs)
    return CheckResult("quotient-series-consistency", diff < 1e-8, f"diff {diff:.2e}")


def check_quotient_d0_identity() -> CheckResult:
    """log quotient on the axis equals (2 pi / y)(D_0(iy) - D_0(ity)) to 1e-10
    at (t, y) = (100, 0.01)."""
    t, y = 100, 0.01
    lhs = eta_quotient_log(complex(0.0, y), t).real
    rhs = (
        2.0
        * math.pi
        / y
        * (eta_log_deriv(0, complex(0.0, y)).real - eta_log_deriv(0, complex(0.0, t * y)).real)
    )
    diff = abs(lhs - rhs) / max(abs(lhs), 1.0)
    return CheckResult("quotient-d0-identity", diff < 1e-10, f"rel diff {diff:.2e}")


def check_saddle_grid() -> CheckResult:
    """Bracket signs (up to the endpoint noise floor), residual monotonicity
    and the curvature band, on a (t, n) grid."""
    ok = True
    details = []
    for t in (6, 50, 1000):
        for n in (100, 10_000, 100_000):
            lo, hi = saddle_bracket(t, n)
            noise = 1e-9 * (n + (t * t - 1) / 24.0)
            g_lo = saddle_residual(t, n, lo)
            g_hi = saddle_residual(t, n, hi)
            if not (g_lo > -noise and g_hi < 0.0):
                ok = False
                details.append(f"bracket sign fails at ({t},{n})")
                continue
            pts = _logspace(lo * (1 + 1e-12), hi, 20)
            vals = [saddle_residual(t, n, y) for y in pts]
            # strictly decreasing, modulo the same noise floor at the flat end
            if not all(a > b - noise for a, b in zip(vals, vals[1:])):
                ok = False
                details.append(f"residual not decreasing at ({t},{n})")
            res = solve_saddle(t, n)
            if not (lo < res.y < hi):
                ok = False
                details.append(f"solution outside bracket at ({t},{n})")
            if abs(res.residual) > noise:
                ok = False
                details.append(f"residual above noise floor at ({t},{n})")
            if res.y <= 0.1:
                band = res.curvature / min(t, 1.0 / res.y)
                if not (1.0 / 26.0 <= band <= 1.0 / 12.0):
                    ok = False
                    details.append(f"curvature band fails at ({t},{n}): {band:.4f}")
    return CheckResult("saddle-grid", ok, "; ".join(details) or "9 grid points clean")


def check_scale_solver() -> CheckResult:
    """Residual contract and monotonicity of the rescaled saddle."""
    ok = True
    details = []
    for kappa in (1.0, 24.0, 1000.0):
        v = solve_scaled_saddle(kappa)
        r = scale_residual(kappa, v)
        if abs(r) > 1e-10:
            ok = False
            details.append(f"residual {r:.2e} at kappa={kappa}")
    vs = [solve_scaled_saddle(k) for k in (1.0, 10.0, 100.0, 1e3, 1e6)]
    if not all(a < b for a, b in zip(vs, vs[1:])):
        ok = False
        details.append("v not increasing in kappa")
    return CheckResult("scale-solver", ok, "; ".join(details) or "contract holds")


def check_constants_limits() -> CheckResult:
    """A(kappa) -> 1/6 and B(kappa) -> 4 sqrt(3) as kappa grows."""
    consts = kappa_constants(1e6)
    ok_a = abs(consts.A - 1.0 / 6.0) < 1e-2
    ok_b = abs(consts.B - 4.0 * math.sqrt(3.0)) < 1e-1
    return CheckResult(
        "constants-limits", ok_a and ok_b,
        f"A={consts.A:.6f} (1/6={1/6:.6f}), B={consts.B:.6f} (4rt3={4*math.sqrt(3):.6f})",
    )


def check_minor_arc() -> CheckResult:
    """Minor-arc suppression at (t, y) = (100, 0.05) and the central-arc
    mass bound sqrt(3/(2 curvature))."""
    ratio = minor_arc_ratio(100, 0.05)
    bound = math.exp(-min(100.0, 20.0) / 70.0)
    ok1 = 0.0 < ratio <= bound
    alpha = curvature_on_axis(100, 0.05)
    central = central_arc_ratio(100, 0.05)
    ok2 = central <= math.sqrt(3.0 / (2.0 * alpha))
    return CheckResult(
        "minor-arc-bounds", ok1 and ok2,
        f"minor ratio {ratio:.4f} (<= {bound:.4f}), central {central:.4f} "
        f"(<= {math.sqrt(3.0/(2.0*alpha)):.4f})",
    )


def _containment(name: str, t: int, n: int, regime: str) -> CheckResult:
    from .verifier import certify_interval_containment

    contained, margin = certify_interval_containment(t, n, regime)
    return CheckResult(name, contained, f"margin {margin:.4f}")


QUICK_CHECKS = (
    check_polynomial_tables,
    check_dual_expansion,
    check_eta_functional_equation,
    check_deriv2_functional_equation,
    check_d2_monotone,
    check_d2_slope_band,
    check_d2_diff_band,
    check_d3_bounds,
    check_d4_ratio,
    check_gaussian_sweep,
    check_step_log_bounds,
    check_quotient_series_consistency,
    check_quotient_d0_identity,
    check_saddle_grid,
    check_scale_solver,
    check_constants_limits,
    check_minor_arc,
)


def run_checks(level: str = "quick") -> list:
    """Run the property suite; 'full' adds exact interval containments."""
    if level not in ("quick", "full"):
        raise ValueError("level must be 'quick' or 'full'")
    results = [fn() for fn in QUICK_CHECKS]
    if level == "full":
        results.append(_containment("containment-main", 1000, 60_000, "main"))
        results.append(_containment("containment-small-t", 50, 100_000, "small_t"))
        results.append(_containment("containment-difference", 1000, 100_000, "difference"))
    return results
