"""Inverse problems for the biharmonicity cases.

Case I: warping functions that make every circle/helix with prescribed
curvatures biharmonic, from the pair of ODEs f'' + K f = 0 and
f f'' - (f')^2 + c = 0 with K = k1^2 + k2^2. A common global solution
exists only for c > 0.

Case II: the curvature level K forced on non-Legendre slant circles and
helices when f is constant along the curve.

Case III: parameter values t0 where a Legendre circle at height t0 is
biharmonic, i.e. roots of h(t) = f f'' + (f')^2 with -f''/f > 0.
"""

import math
from dataclasses import dataclass, replace
from typing import Optional, Tuple

import numpy as np

from .errors import DomainError, WarpcurvesError
from .expressions import Expr, eval_jet, parse


class NoSolution(WarpcurvesError):
    """A well-posed query whose answer is that no solution exists."""


@dataclass(frozen=True)
class WarpingSolution:
    """Family f(t) = amplitude * sin(sqrt(K) t + c0), free phase c0."""

    K: float
    c: float
    amplitude: float
    c0: Optional[float] = None

    @property
    def form(self):
        amp = f"{self.amplitude:g}"
        rk = f"{math.sqrt(self.K):g}"
        phase = "c0" if self.c0 is None else f"{self.c0:g}"
        return f"f(t) = {amp}*sin({rk}*t + {phase})"

    def source(self, c0=None):
        c0 = self.c0 if c0 is None else c0
        if c0 is None:
            c0 = 0.0
        return f"{self.amplitude!r}*sin({math.sqrt(self.K)!r}*t + {c0!r})"

    def expr(self, c0=None):
        return parse(self.source(c0), var="t")

    def pin_phase(self, t_star, value):
        """Fix c0 by the interpolation condition f(t_star) = value."""
        ratio = value / self.amplitude
        if abs(ratio) > 1.0:
            raise NoSolution(
                f"|f(t*)| = {abs(value):g} exceeds the amplitude {self.amplitude:g}")
        return replace(self, c0=math.asin(ratio) - math.sqrt(self.K) * t_star)


def solve_case1_warping(k1, k2, c):
    """Warping family making helices with curvatures (k1, k2) biharmonic.

    Returns None for c <= 0: the two ODEs have no common global solution
    there (the product of squared amplitude and K would have to equal c).
    """
    big_k = k1 * k1 + k2 * k2
    if big_k <= 0.0:
        raise DomainError("k1^2 + k2^2 must be positive (geodesics are excluded)")
    if c <= 0.0:
        return None
    return WarpingSolution(K=big_k, c=c, amplitude=math.sqrt(c / big_k))


def compatibility_residual(f, big_k, c, grid):
    """Sup-norm residuals of f'' + K f and f f'' - (f')^2 + c on the grid."""
    res1 = 0.0
    res2 = 0.0
    for t in grid:
        w = eval_jet(f, float(t))
        res1 = max(res1, abs(w.d2 + big_k * w.d0))
        res2 = max(res2, abs(w.d0 * w.d2 - w.d1 * w.d1 + c))
    return res1, res2


def slant_curvature_target(c, c1, theta):
    """K = (c/c1^2) sin^4(theta) for non-Legendre slant circles/helices."""
    if c1 <= 0.0:
        raise DomainError("the level constant c1 must be positive")
    s, co = math.sin(theta), math.cos(theta)
    if abs(s) < 1e-12 or abs(co) < 1e-12:
        raise DomainError("theta must avoid 0, pi/2 and pi (non-Legendre slant)")
    if c <= 0.0:
        raise NoSolution("no solution (biharmonic slant case requires c > 0)")
    return (c / (c1 * c1)) * s ** 4


@dataclass(frozen=True)
class Case3Root:
    t0: float
    k1: float
    eps: int


@dataclass(frozen=True)
class Case3Locus:
    interval: Tuple[float, float]
    roots: Tuple[Case3Root, ...]
    identically_satisfied: bool


def _bisect(fn, a, b, fa, fb, xtol=1e-12):
    while b - a > xtol:
        m = 0.5 * (a + b)
        fm = fn(m)
        if fm == 0.0:
            return m
        if (fa < 0.0) != (fm < 0.0):
            b, fb = m, fm
        else:
            a, fa = m, fm
    return 0.5 * (a + b)


def find_case3_locus(f, interval, scan_points=1024, xtol=1e-12, flat_tol=1e-10):
    """Roots of h(t) = f f'' + (f')^2 with -f''/f > 0 on the interval.

    Sign-change bracketing on a uniform scan grid, then bisection. When
    sup |h| stays below flat_tol on the whole grid the equation holds
    identically (e.g. f = c2 sqrt(2t + c1)) and no isolated roots are
    reported.
    """
    a, b = float(interval[0]), float(interval[1])
    if not a < b:
        raise DomainError(f"empty interval {interval}")

    def h(t):
        w = eval_jet(f, t)
        if w.d0 == 0.0:
            raise DomainError(f"warping function vanishes at t={t!r}")
        return w.d0 * w.d2 + w.d1 * w.d1

    ts = np.linspace(a, b, scan_points)
    hs = np.array([h(float(t)) for t in ts])
    if np.max(np.abs(hs)) < flat_tol:
        return Case3Locus((a, b), (), True)

    roots = []
    for i in range(scan_points - 1):
        lo, hi = float(ts[i]), float(ts[i + 1])
        flo, fhi = float(hs[i]), float(hs[i + 1])
        if flo == 0.0:
            root = lo
        elif (flo < 0.0) != (fhi < 0.0):
            root = _bisect(h, lo, hi, flo, fhi, xtol)
        else:
            continue
        if roots and abs(root - roots[-1]) < 10.0 * xtol:
            continue
        w = eval_jet(f, root)
        if -w.d2 / w.d0 <= 0.0:
            continue
        lam = w.d1 / w.d0
        roots.append(root)
        yield_root = Case3Root(t0=root, k1=abs(lam), eps=-1 if lam > 0.0 else 1)
        roots[-1] = root
        if "out" not in dir():
            pass
        try:
            out.append(yield_root)
        except NameError:
            out = [yield_root]
    return Case3Locus((a, b), tuple(out) if roots else (), False)


def eq1_residual(k1, k2, theta, wp, t0):
    """Residual of K = c/f^2 - (f'/f)^2 - B cos^2(theta) at t0."""
    w = wp.warp_jet(t0)
    _, b_coef = wp.curvature_coefficients(t0)
    lam = w.d1 / w.d0
    rhs = wp.fiber.c / (w.d0 * w.d0) - lam * lam - b_coef * math.cos(theta) ** 2
    return abs(k1 * k1 + k2 * k2 - rhs)
