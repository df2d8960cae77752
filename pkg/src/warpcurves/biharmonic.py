"""Bitension field of curves and the biharmonicity verdict.

The bitension field tau2 = nabla_T^3 T + R~(nabla_T T, T) T is evaluated two
independent ways: directly from iterated covariant derivatives, and through
its expansion in the Frenet frame (coefficients on T, E2, E3, E4 plus a
d/dt term). The verdict compares the sup of |tau2| over a grid against a
tolerance and records the residual of each equation of the equivalent
curvature system together with the disjunctive compatibility condition
(warp term B vanishing along the curve, or eta(E2) = 0, or d/dt inside the
span of the frame).
"""

import math
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from . import jets
from .curves import EPS_RANK, classify
from .errors import DomainError
from .frenet import CurveFrame
from .geometry import TangentVector

DEFAULT_TOL = 1e-7


@dataclass(frozen=True)
class Tau2Coefficients:
    """Frenet-basis expansion of tau2; dt is the extra d/dt coefficient."""

    T: float
    E2: float
    E3: float
    E4: float
    dt: float

    def as_tuple(self):
        return (self.T, self.E2, self.E3, self.E4, self.dt)


@dataclass(frozen=True)
class BiharmonicSample:
    s: float
    t: float
    theta: float
    r: int
    k: Tuple[float, ...]
    eta_E: Tuple[float, float, float, float]
    warp_A: float
    warp_B: float
    tau2: Tuple[float, ...]
    tau2_norm: float
    coeffs: Tau2Coefficients
    cross_check: float
    span_residual: float
    res_T: float
    res_E2: float
    res_E3: float
    res_E4: float
    res_dt: float


@dataclass(frozen=True)
class BiharmonicReport:
    samples: Tuple[BiharmonicSample, ...]
    grid: Tuple[float, ...]
    tol: float
    verdict: bool
    sup_tau2: float
    cross_check_max: float
    residual_max: dict
    case_tags: Tuple[str, ...]
    classification: object
    k_stats: dict


def _frame_context(curve, s, eps_rank=EPS_RANK):
    return CurveFrame(curve, s, eps_rank=eps_rank)


def tau2_direct(curve, s, _cf=None):
    """nabla_T^3 T + R~(nabla_T T, T) T at s, in coordinates."""
    cf = _cf or _frame_context(curve, s)
    n1 = cf.nabla(cf.T)
    n3 = cf.nabla(cf.nabla(n1))
    t_vec = cf.vector(cf.T)
    r_term = cf.wp.curvature(cf.vector(n1), t_vec, t_vec)
    comps = tuple(jets.value(v) + r for v, r in zip(n3, r_term.components))
    return TangentVector(cf.point, comps)


def tau2_frenet(curve, s, fd=None, _cf=None):
    """Frenet-frame coefficients of tau2 from curvature jets."""
    cf = _cf or _frame_context(curve, s)
    if fd is None:
        fd = cf.frenet()
    a, b = cf.wp.curvature_coefficients(cf.point[0])
    if fd.r < 2:
        return Tau2Coefficients(0.0, 0.0, 0.0, 0.0, 0.0)
    k1j = fd.k_jets[0]
    k1, k1p, k1pp = k1j.d0, k1j.d1, k1j.d2
    if fd.r >= 3:
        k2, k2p = fd.k_jets[1].d0, fd.k_jets[1].d1
    else:
        k2 = k2p = 0.0
    k3 = fd.k_jets[2].d0 if fd.r >= 4 else 0.0
    eta_t = fd.eta_E[0]
    eta_e2 = fd.eta_E[1]
    return Tau2Coefficients(
        T=-3.0 * k1 * k1p + k1 * b * eta_t * eta_e2,
        E2=k1pp - k1 ** 3 - k1 * k2 * k2 + k1 * (-a - b * eta_t * eta_t),
        E3=2.0 * k1p * k2 + k1 * k2p,
        E4=k1 * k2 * k3,
        dt=-k1 * b * eta_e2,
    )


def assemble_frenet(coeffs, fd, point):
    """Coordinate vector of the Frenet-basis expansion."""
    dim = len(point)
    comps = [0.0] * dim
    weights = (coeffs.T, coeffs.E2, coeffs.E3, coeffs.E4)
    for w, e_vec in zip(weights, fd.E):
        for i in range(dim):
            comps[i] += w * e_vec.components[i]
    comps[0] += coeffs.dt
    return TangentVector(point, tuple(comps))


def span_residual(wp, fd):
    """|d/dt - sum eta(E_i) E_i| at the sample point."""
    dim = len(fd.E[0].components)
    rem = [0.0] * dim
    rem[0] = 1.0
    for i, e_vec in enumerate(fd.E):
        w = fd.eta_E[i]
        for k in range(dim):
            rem[k] -= w * e_vec.components[k]
    return wp.norm(TangentVector(fd.E[0].point, tuple(rem)))


def analyze_sample(curve, s, eps_rank=EPS_RANK):
    """All pointwise biharmonicity data at parameter s."""
    cf = _frame_context(curve, s, eps_rank)
    fd = cf.frenet()
    a, b = cf.wp.curvature_coefficients(cf.point[0])
    direct = tau2_direct(curve, s, _cf=cf)
    coeffs = tau2_frenet(curve, s, fd=fd, _cf=cf)
    assembled = assemble_frenet(coeffs, fd, cf.point)
    diff = TangentVector(cf.point, tuple(
        d - e for d, e in zip(direct.components, assembled.components)))
    norm = cf.wp.norm(direct)
    cross = cf.wp.norm(diff)
    span = span_residual(cf.wp, fd)

    eta_t, eta_e2, eta_e3, eta_e4 = fd.eta_E
    if fd.r >= 2:
        k1j = fd.k_jets[0]
        res_t = abs(3.0 * k1j.d0 * k1j.d1)
        k2, k2p = (fd.k_jets[1].d0, fd.k_jets[1].d1) if fd.r >= 3 else (0.0, 0.0)
        k3 = fd.k_jets[2].d0 if fd.r >= 4 else 0.0
        res_e2 = abs(k1j.d0 ** 2 + k2 * k2
                     - (-a - b * (eta_t * eta_t + eta_e2 * eta_e2)))
        res_e3 = abs(k2p - b * eta_e2 * eta_e3) if fd.r >= 3 else 0.0
        res_e4 = abs(k2 * k3 - b * eta_e2 * eta_e4) if fd.r >= 4 else 0.0
    else:
        res_t = res_e2 = res_e3 = res_e4 = 0.0
    res_dt = abs(b * eta_e2) * span

    theta = math.acos(max(-1.0, min(1.0, eta_t)))
    return BiharmonicSample(
        s=float(s), t=cf.point[0], theta=theta, r=fd.r,
        k=fd.k, eta_E=fd.eta_E, warp_A=a, warp_B=b,
        tau2=direct.components, tau2_norm=norm, coeffs=coeffs,
        cross_check=cross, span_residual=span,
        res_T=res_t, res_E2=res_e2, res_E3=res_e3, res_E4=res_e4, res_dt=res_dt,
    )


def verdict(curve, grid=None, tol=DEFAULT_TOL, eps_rank=EPS_RANK):
    """Grid-wide biharmonicity report: verdict, residuals, and case tags."""
    if grid is None:
        grid = curve.grid()
    rows = tuple(analyze_sample(curve, s, eps_rank) for s in grid)
    sup_tau2 = max(r.tau2_norm for r in rows)
    cross_max = max(r.cross_check for r in rows)
    residual_max = {
        "res_T": max(r.res_T for r in rows),
        "res_E2": max(r.res_E2 for r in rows),
        "res_E3": max(r.res_E3 for r in rows),
        "res_E4": max(r.res_E4 for r in rows),
        "res_dt": max(r.res_dt for r in rows),
    }
    max_abs_b = max(abs(r.warp_B) for r in rows)
    eta2 = [r.eta_E[1] for r in rows]
    tags = []
    if max_abs_b < tol:
        tags.append("I")
    if max(abs(v) for v in eta2) < tol:
        tags.append("II")
    if min(abs(v) for v in eta2) > 1.0 - tol:
        tags.append("III")
    if not tags and max(r.span_residual for r in rows) < tol:
        tags.append("IV")

    k_stats = {}
    for idx, name in enumerate(("k1", "k2", "k3")):
        vals = [r.k[idx] if len(r.k) > idx else 0.0 for r in rows]
        k_stats[name] = {"mean": float(np.mean(vals)),
                         "min": float(np.min(vals)),
                         "max": float(np.max(vals))}

    return BiharmonicReport(
        samples=rows,
        grid=tuple(float(s) for s in grid),
        tol=tol,
        verdict=bool(sup_tau2 < tol),
        sup_tau2=sup_tau2,
        cross_check_max=cross_max,
        residual_max=residual_max,
        case_tags=tuple(tags),
        classification=classify(curve, grid),
        k_stats=k_stats,
    )


def theorem_consistent(report):
    """True when the equation residuals and compatibility term are all below tol."""
    return bool(all(v < report.tol for v in report.residual_max.values()))


def theta_evolution_residual(curve, s, eps_rank=EPS_RANK):
    """Residual of d/ds eta(T) = k1 eta(E2) + (f'/f) (1 - eta(T)^2) at s."""
    cf = _frame_context(curve, s, eps_rank)
    fd = cf.frenet()
    d_eta_t = cf.pos[0].d2
    k1_eta = fd.k[0] * fd.eta_E[1] if fd.r >= 2 else 0.0
    w = cf.wp.warp_jet(cf.point[0])
    eta_t = fd.eta_E[0]
    return abs(d_eta_t - k1_eta - (w.d1 / w.d0) * (1.0 - eta_t * eta_t))


def lemma_csc_check(curve, grid=None, eps=1e-7):
    """Deviation of f(gamma_0) sin(theta) from constancy over the grid.

    Near-zero output certifies compatibility with the eta(E2) = 0 case for
    non-Legendre, non-geodesic curves; those degenerate inputs are rejected.
    """
    if grid is None:
        grid = curve.grid()
    cls = classify(curve, grid, eps)
    if cls.kind in ("legendre", "geodesic-axis"):
        raise DomainError(f"lemma check needs cos(theta) != 0 and sin(theta) != 0, "
                          f"got a {cls.kind} curve")
    vals = []
    for s in grid:
        cf = _frame_context(curve, s)
        eta_t = jets.value(cf.T[0])
        f_val = jets.value(cf.f)
        vals.append(f_val * math.sin(math.acos(max(-1.0, min(1.0, eta_t)))))
    vals = np.asarray(vals)
    return float(np.max(np.abs(vals - vals.mean())))


def slant_invariant(curve, grid=None, eps=1e-7):
    """Residual of the slant balance k1 eta(E2) + (f'/f) gamma_0' sin^2/cos = 0.

    Returns the larger of the pointwise residual and the deviation from
    constancy of its integrated form (cumulative trapezoid of k1 eta(E2)
    plus (sin^2 theta / cos theta) log |f|).
    """
    if grid is None:
        grid = curve.grid()
    cls = classify(curve, grid, eps)
    if not cls.is_slant() or cls.kind == "legendre":
        raise DomainError(f"slant invariant needs a non-Legendre slant curve, "
                          f"got {cls.kind}")
    theta = cls.theta
    ratio = math.sin(theta) ** 2 / math.cos(theta)
    pointwise = []
    k1_eta = []
    log_f = []
    for s in grid:
        cf = _frame_context(curve, s)
        fd = cf.frenet()
        ke = fd.k[0] * fd.eta_E[1] if fd.r >= 2 else 0.0
        w = cf.wp.warp_jet(cf.point[0])
        g0p = jets.value(cf.T[0])
        pointwise.append(abs(ke + (w.d1 / w.d0) * g0p * ratio))
        k1_eta.append(ke)
        log_f.append(math.log(abs(w.d0)))
    integral = _cumtrapz(np.asarray(k1_eta), np.asarray(grid, dtype=float))
    invariant = integral + ratio * np.asarray(log_f)
    drift = float(np.max(np.abs(invariant - invariant.mean())))
    return max(max(pointwise), drift)


def _cumtrapz(y, x):
    out = np.zeros_like(y)
    out[1:] = np.cumsum(0.5 * (y[1:] + y[:-1]) * np.diff(x))
    return out


@dataclass(frozen=True)
class FrameAngles:
    """Angles locating d/dt relative to the Frenet frame (order-4 split)."""

    theta: Optional[float]
    w1: Optional[float]
    w2: Optional[float]
    sign: float
    span_residual: float


def case4_angles(fd, wp, eps_rank=EPS_RANK):
    """theta, w1, w2 with resolved sign, plus the span membership residual."""
    span = span_residual(wp, fd)
    eta_t = fd.eta_E[0]
    theta = math.acos(max(-1.0, min(1.0, eta_t)))
    sin_theta = math.sin(theta)
    if sin_theta < eps_rank:
        return FrameAngles(None, None, None, 1.0, span)
    eta_e2, eta_e3, eta_e4 = fd.eta_E[1], fd.eta_E[2], fd.eta_E[3]
    sign = -1.0 if eta_e2 < 0.0 else 1.0
    w2 = math.atan2(sign * eta_e3, sign * eta_e2)
    w1 = math.asin(max(-1.0, min(1.0, sign * eta_e4 / sin_theta)))
    return FrameAngles(theta, w1, w2, sign, span)
