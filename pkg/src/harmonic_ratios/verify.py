"""Floating-point verification of analytic properties of harmonic ratios.

Every check returns a ``VerificationReport`` recording the measured extremes,
the sample counts, and the tolerance the pass/fail decision used.  Functions
``u`` and ``v`` are vectorized callables ``f(*coords) -> array`` (catalog
entries qualify).

The ratio u/v is evaluated directly where |v| is safely away from zero and
through a precomputed ratio series inside a guard band around the zero set
(the ratio extends real-analytically across shared zeros, but the quotient of
floats does not).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional, Sequence, Tuple

import numpy as np

from .division import series_ratio
from .polynomial import Polynomial
from .regions import Region
from .reports import VerificationReport
from .series import TruncatedSeries

Func = Callable[..., np.ndarray]


class RatioVanishes(ArithmeticError):
    """|u/v| dropped below the detection floor: the inputs do not share a
    nodal set (or the floor is set too high)."""


class DegenerateRegion(ValueError):
    pass


@dataclass
class RatioEvaluator:
    """Evaluate f = u/v with a series fallback near zeros of v.

    Inside the guard band (|v| below ``guard`` times the local scale of v) the
    direct quotient is noise; there the ratio series centered at a common zero
    is used instead, within its trust radius.  Points that are in the band and
    out of the series' reach are reported invalid rather than guessed at.
    """

    u: Func
    v: Func
    guard: float = 1e-9
    ratio_series: Optional[TruncatedSeries] = None
    trust_radius: float = 0.25

    @staticmethod
    def for_pair(pair, series_degree: int = 12) -> "RatioEvaluator":
        """Build from a SharedZeroPair, with a ratio series at the origin
        whenever both members expose exact Taylor data."""
        series = None
        try:
            dim = pair.u.dimension
            k = None
            v_t = pair.v.taylor((0,) * dim, series_degree + 4)
            k = v_t.leading_degree()
            u_t = pair.u.taylor((0,) * dim, series_degree + k)
            v_t = pair.v.taylor((0,) * dim, series_degree + k)
            series = series_ratio(u_t, v_t, series_degree).quotient
        except (ValueError, ArithmeticError):
            series = None
        return RatioEvaluator(u=pair.u, v=pair.v, ratio_series=series)

    def __call__(self, points: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        """Return (values, valid mask) for an (m, dim) array of points."""
        pts = np.atleast_2d(np.asarray(points, dtype=float))
        coords = [pts[:, i] for i in range(pts.shape[1])]
        uv = self.u(*coords)
        vv = self.v(*coords)
        scale = float(np.max(np.abs(vv))) if len(vv) else 1.0
        scale = max(scale, 1e-300)
        safe = np.abs(vv) >= self.guard * scale
        out = np.full(len(pts), np.nan)
        out[safe] = uv[safe] / vv[safe]
        valid = safe.copy()
        near = ~safe
        if self.ratio_series is not None and np.any(near):
            center = np.array([float(c) for c in self.ratio_series.center])
            dist = np.linalg.norm(pts[near] - center, axis=1)
            reachable = dist <= self.trust_radius
            idx = np.flatnonzero(near)[reachable]
            for i in idx:
                out[i] = self.ratio_series.evaluate_float(pts[i])
                valid[i] = True
        return out, valid


def _ratio(u, v, ratio_series=None, guard=1e-9) -> RatioEvaluator:
    if isinstance(u, RatioEvaluator):
        return u
    return RatioEvaluator(u=u, v=v, ratio_series=ratio_series, guard=guard)


def max_principle_check(
    u: Func,
    v: Func,
    region: Region,
    boundary_samples: int,
    interior_samples: int,
    tol: float = 1e-9,
    seed: int = 0,
    ratio_series: Optional[TruncatedSeries] = None,
) -> VerificationReport:
    """Interior extremes of f = u/v must not exceed the boundary extremes."""
    if boundary_samples < 4 or interior_samples < 1:
        raise DegenerateRegion("need at least 4 boundary and 1 interior samples")
    evaluator = _ratio(u, v, ratio_series)
    rng = np.random.default_rng(seed)
    bd = region.sample_boundary(boundary_samples)
    it = region.sample_interior(interior_samples, rng)
    f_bd, ok_bd = evaluator(bd)
    f_it, ok_it = evaluator(it)
    if not np.any(ok_bd) or not np.any(ok_it):
        raise DegenerateRegion("no valid ratio samples in the region")
    bmax, bmin = float(np.max(f_bd[ok_bd])), float(np.min(f_bd[ok_bd]))
    imax, imin = float(np.max(f_it[ok_it])), float(np.min(f_it[ok_it]))
    scale = max(abs(bmax), abs(bmin), abs(imax), abs(imin), 1e-300)
    passed = imax <= bmax + tol * scale and imin >= bmin - tol * scale
    return VerificationReport(
        name="max_principle",
        passed=passed,
        extremes={
            "boundary_max": bmax,
            "boundary_min": bmin,
            "interior_max": imax,
            "interior_min": imin,
        },
        samples={
            "boundary": int(np.sum(ok_bd)),
            "interior": int(np.sum(ok_it)),
            "skipped": int(np.sum(~ok_bd) + np.sum(~ok_it)),
        },
        tolerance=tol,
        notes="relative tolerance against the largest observed |f|",
    )


def harnack_constant(
    u: Func,
    v: Func,
    region: Region,
    samples: int,
    floor: float = 1e-9,
    ratio_series: Optional[TruncatedSeries] = None,
) -> VerificationReport:
    """Empirical Harnack constant C* = sup|f| / inf|f| over the compact set.

    Samples are a deterministic grid including the region's extreme points,
    so monotone ratios attain their true extremes up to grid resolution.
    Finiteness is the claim being verified; the value itself is reported.
    """
    evaluator = _ratio(u, v, ratio_series)
    dim = region.dim
    per_axis = max(int(round(samples ** (1.0 / dim))), 1)
    lo, hi = region.bounding_box()
    axes = [np.linspace(lo[i], hi[i], per_axis) for i in range(dim)]
    mesh = np.meshgrid(*axes, indexing="ij")
    pts = np.column_stack([m.ravel() for m in mesh])
    if region.kind != "box":
        pts = pts[region.contains(pts)]
    f, ok = evaluator(pts)
    vals = np.abs(f[ok])
    if len(vals) == 0:
        raise DegenerateRegion("no valid ratio samples in the region")
    sup, inf = float(np.max(vals)), float(np.min(vals))
    if inf < floor * sup:
        raise RatioVanishes(
            f"|f| reaches {inf:.3e} against sup {sup:.3e}; zero sets differ"
        )
    c_star = sup / inf if inf > 0 else float("inf")
    return VerificationReport(
        name="harnack_constant",
        passed=bool(np.isfinite(c_star)),
        extremes={"sup_abs_f": sup, "inf_abs_f": inf, "C_star": c_star},
        samples={"grid_points": len(vals), "skipped": int(np.sum(~ok))},
        tolerance=floor,
        notes="empirical constant over a deterministic grid",
    )


def sphere_orthogonality(
    q: Polynomial,
    q2: Polynomial,
    r: float,
    quad_points: int,
    tol: float = 1e-10,
) -> VerificationReport:
    """Surface integral of q2 * q over the sphere of radius r; expects ~0.

    q must be homogeneous harmonic and deg q2 < deg q.  Dimension 2 uses the
    trapezoid rule on uniform angles (spectrally exact for trigonometric
    polynomials); dimension 3 uses a Gauss-Legendre x uniform-phi product
    rule, exact for polynomial integrands at this point count.
    """
    if q.dim != q2.dim:
        raise ValueError("dimension mismatch")
    if not q.is_homogeneous() or not q.laplacian().is_zero():
        raise ValueError("q must be a homogeneous harmonic polynomial")
    if q2.total_degree() >= q.total_degree():
        raise ValueError("q2 must have strictly smaller degree than q")
    if q.dim == 2:
        theta = np.linspace(0.0, 2 * np.pi, quad_points, endpoint=False)
        x, y = r * np.cos(theta), r * np.sin(theta)
        integrand = q.evaluate_array([x, y]) * q2.evaluate_array([x, y])
        weight = r * 2 * np.pi / quad_points
        integral = float(np.sum(integrand) * weight)
        abs_integral = float(np.sum(np.abs(integrand)) * weight)
        n_used = quad_points
    elif q.dim == 3:
        n_theta = max(int(np.sqrt(quad_points)), 2)
        n_phi = 2 * n_theta
        nodes, weights = np.polynomial.legendre.leggauss(n_theta)
        phi = np.linspace(0.0, 2 * np.pi, n_phi, endpoint=False)
        ct, pg = np.meshgrid(nodes, phi, indexing="ij")
        st = np.sqrt(1.0 - ct**2)
        x, y, z = r * st * np.cos(pg), r * st * np.sin(pg), r * ct
        integrand = q.evaluate_array([x, y, z]) * q2.evaluate_array([x, y, z])
        w = weights[:, None] * (2 * np.pi / n_phi) * r**2
        integral = float(np.sum(integrand * w))
        abs_integral = float(np.sum(np.abs(integrand) * w))
        n_used = n_theta * n_phi
    else:
        raise ValueError("sphere quadrature implemented for dim 2 and 3")
    scale = max(abs_integral, 1.0)
    passed = abs(integral) <= tol * scale
    return VerificationReport(
        name="sphere_orthogonality",
        passed=passed,
        extremes={"integral": integral, "integrand_scale": abs_integral},
        samples={"quad_points": n_used},
        tolerance=tol,
        notes=f"surface integral over the sphere of radius {r}",
    )


def sign_change_check(
    q1: Polynomial, region: Region, samples: int, seed: int = 0
) -> VerificationReport:
    """Does q1 take both signs on the region?  (A non-constant divisor of a
    homogeneous harmonic polynomial must.)"""
    if q1.total_degree() < 1:
        raise ValueError("q1 must be non-constant")
    rng = np.random.default_rng(seed)
    pts = region.sample_interior(samples, rng)
    vals = q1.evaluate_array([pts[:, i] for i in range(q1.dim)])
    pos, neg = bool(np.any(vals > 0)), bool(np.any(vals < 0))
    return VerificationReport(
        name="sign_change",
        passed=pos and neg,
        extremes={"max": float(np.max(vals)), "min": float(np.min(vals))},
        samples={"points": samples},
        tolerance=0.0,
        notes="both signs observed" if pos and neg else "only one sign observed",
    )


def _divergence_form_residual(
    evaluator: RatioEvaluator, v: Func, pts: np.ndarray, h: float
) -> np.ndarray:
    """Conservative central-difference estimate of div(v^2 grad f) at pts."""
    dim = pts.shape[1]
    res = np.zeros(len(pts))

    def f_at(shift: np.ndarray) -> np.ndarray:
        vals, ok = evaluator(pts + shift)
        if not np.all(ok):
            raise DegenerateRegion("stencil point fell in an unevaluable zone")
        return vals

    def w_at(shift: np.ndarray) -> np.ndarray:
        coords = [(pts + shift)[:, i] for i in range(dim)]
        return v(*coords) ** 2

    f0 = f_at(np.zeros(dim))
    for i in range(dim):
        e = np.zeros(dim)
        e[i] = 1.0
        f_plus = f_at(h * e)
        f_minus = f_at(-h * e)
        w_plus = w_at(0.5 * h * e)
        w_minus = w_at(-0.5 * h * e)
        res += (w_plus * (f_plus - f0) - w_minus * (f0 - f_minus)) / h**2
    return res


def elliptic_residual(
    u: Func,
    v: Func,
    region: Region,
    h: float,
    samples: int,
    seed: int = 0,
    guard: float = 1e-3,
) -> VerificationReport:
    """Finite-difference residual of the degenerate equation div(v^2 grad f)=0.

    Sample points (and their whole stencils) are kept where |v| is at least
    ``guard`` times its scale over the region, so the direct quotient is
    accurate; the residual of the analytic ratio is zero and the measured
    values decay at second order in h.
    """
    rng = np.random.default_rng(seed)
    raw = region.sample_interior(samples * 4, rng)
    coords = [raw[:, i] for i in range(raw.shape[1])]
    vv = np.abs(v(*coords))
    scale = float(np.max(vv))
    keep = vv >= guard * scale
    # the full stencil must stay clear of the zero set and inside the domain
    for i in range(raw.shape[1]):
        for sgn in (1.0, -1.0):
            shifted = raw.copy()
            shifted[:, i] += sgn * h
            vv_s = np.abs(v(*[shifted[:, j] for j in range(raw.shape[1])]))
            keep &= vv_s >= guard * scale
    pts = raw[keep][:samples]
    if len(pts) == 0:
        raise DegenerateRegion("no sample point clears the guard band")
    evaluator = RatioEvaluator(u=u, v=v, guard=0.0)
    res = _divergence_form_residual(evaluator, v, pts, h)
    max_res = float(np.max(np.abs(res)))
    return VerificationReport(
        name="elliptic_residual",
        passed=True,
        extremes={"max_abs_residual": max_res, "h": h},
        samples={"points": len(pts)},
        tolerance=0.0,
        notes="residual magnitude is reported; convergence is judged across h",
    )


def residual_convergence(
    u: Func,
    v: Func,
    region: Region,
    h0: float,
    halvings: int,
    samples: int,
    seed: int = 0,
    guard: float = 1e-3,
    min_order: float = 1.9,
) -> VerificationReport:
    """Halve h repeatedly and fit the decay order of the residual."""
    rng = np.random.default_rng(seed)
    raw = region.sample_interior(samples * 4, rng)
    coords = [raw[:, i] for i in range(raw.shape[1])]
    vv = np.abs(v(*coords))
    scale = float(np.max(vv))
    keep = vv >= guard * scale
    for i in range(raw.shape[1]):
        for sgn in (1.0, -1.0):
            shifted = raw.copy()
            shifted[:, i] += sgn * h0
            vv_s = np.abs(v(*[shifted[:, j] for j in range(raw.shape[1])]))
            keep &= vv_s >= guard * scale
    pts = raw[keep][:samples]
    if len(pts) == 0:
        raise DegenerateRegion("no sample point clears the guard band")
    evaluator = RatioEvaluator(u=u, v=v, guard=0.0)
    hs, residuals = [], []
    h = h0
    for _ in range(halvings + 1):
        res = _divergence_form_residual(evaluator, v, pts, h)
        hs.append(h)
        residuals.append(float(np.max(np.abs(res))))
        h *= 0.5
    orders = [
        float(np.log2(residuals[i] / residuals[i + 1]))
        for i in range(len(residuals) - 1)
    ]
    passed = all(o >= min_order for o in orders)
    return VerificationReport(
        name="elliptic_residual_convergence",
        passed=passed,
        extremes={"h": hs, "max_abs_residual": residuals, "orders": orders},
        samples={"points": len(pts), "halvings": halvings},
        tolerance=min_order,
        notes="decay order of max |div(v^2 grad f)| under halving h",
    )


def leading_zero_inclusion(
    u: TruncatedSeries,
    v: TruncatedSeries,
    samples: int,
    tol: float = 1e-8,
    seed: int = 0,
) -> VerificationReport:
    """Zeros of the leading part of v must be zeros of the leading part of u.

    Zeros of v's leading part are located on the unit sphere by bisecting
    sign changes along circles (the full circle in 2D, random great circles
    in 3D), then |u_k| is required to be below tol relative to its scale.
    """
    u_lead = u.homogeneous_part(u.leading_degree())
    v_lead = v.homogeneous_part(v.leading_degree())
    dim = u.dim

    def circle(a: np.ndarray, b: np.ndarray, n: int) -> np.ndarray:
        theta = np.linspace(0.0, 2 * np.pi, n, endpoint=False)
        return np.outer(np.cos(theta), a) + np.outer(np.sin(theta), b)

    rng = np.random.default_rng(seed)
    circles = []
    if dim == 2:
        circles.append((np.array([1.0, 0.0]), np.array([0.0, 1.0])))
    else:
        for _ in range(max(samples // 64, 8)):
            m = rng.normal(size=(dim, 2))
            qmat, _ = np.linalg.qr(m)
            circles.append((qmat[:, 0], qmat[:, 1]))

    def eval_on(pts: np.ndarray, poly: Polynomial) -> np.ndarray:
        return poly.evaluate_array([pts[:, i] for i in range(dim)])

    u_scale = 0.0
    zeros = []
    for a, b in circles:
        pts = circle(a, b, max(samples, 16))
        vals = eval_on(pts, v_lead)
        u_scale = max(u_scale, float(np.max(np.abs(eval_on(pts, u_lead)))))
        theta = np.linspace(0.0, 2 * np.pi, len(pts), endpoint=False)
        for i in range(len(pts)):
            j = (i + 1) % len(pts)
            if vals[i] == 0.0:
                zeros.append(pts[i])
                continue
            if vals[i] * vals[j] < 0:
                t0, t1 = theta[i], theta[i] + (theta[1] - theta[0])
                f0 = vals[i]
                for _ in range(80):
                    tm = 0.5 * (t0 + t1)
                    pm = np.cos(tm) * a + np.sin(tm) * b
                    fm = float(eval_on(pm[None, :], v_lead)[0])
                    if fm == 0.0:
                        break
                    if f0 * fm < 0:
                        t1 = tm
                    else:
                        t0, f0 = tm, fm
                tm = 0.5 * (t0 + t1)
                zeros.append(np.cos(tm) * a + np.sin(tm) * b)
    u_scale = max(u_scale, 1e-300)
    worst = 0.0
    for z in zeros:
        val = abs(float(eval_on(np.array(z)[None, :], u_lead)[0]))
        worst = max(worst, val / u_scale)
    passed = worst <= tol
    return VerificationReport(
        name="leading_zero_inclusion",
        passed=passed,
        extremes={"worst_relative_u": worst, "zeros_found": len(zeros)},
        samples={"circle_points": max(samples, 16), "circles": len(circles)},
        tolerance=tol,
        notes="zeros of the divisor's leading part, checked against the numerator's",
    )
