"""Space forms M^n(c) and warped products I x_f M^n(c).

Charts are fixed once per curvature sign: Cartesian for c = 0, a latitude
cube for c > 0 (diagonal metric with g_ii = prod_{j<i} cos^2 x_j on the unit
model, |x_j| < pi/2 for j < n), and the upper half-space for c < 0. For
c != 0 the metric is the unit model scaled by 1/|c|, which leaves Christoffel
symbols unchanged and gives sectional curvature exactly c.

All formulas are written generically: coordinates and the warping value may
be floats or jets, so covariant derivatives along curves keep full jet order.
"""

import math
from dataclasses import dataclass, field
from typing import Tuple

from . import jets
from .errors import DomainError
from .expressions import Expr, eval_jet

_HALF_PI = math.pi / 2.0


@dataclass(frozen=True)
class TangentVector:
    """Coordinate components of a tangent vector at a base point (t, x_1..x_n)."""

    point: Tuple[float, ...]
    components: Tuple[float, ...]

    def __post_init__(self):
        if len(self.point) != len(self.components):
            raise ValueError("point and components must have equal length")


def eta(X):
    """One-form dual to the base direction: the d/dt component of X."""
    return X.components[0]


@dataclass(frozen=True)
class SpaceForm:
    """Simply connected space form of dimension n >= 2 and curvature c."""

    n: int
    c: float

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("fiber dimension must be at least 2")

    @property
    def chart(self):
        if self.c == 0.0:
            return "euclidean"
        return "sphere" if self.c > 0.0 else "half-space"

    @property
    def scale(self):
        """Constant factor relating the chart metric to the unit model."""
        return 1.0 if self.c == 0.0 else 1.0 / abs(self.c)

    def contains(self, x):
        if len(x) != self.n:
            return False
        vals = [jets.value(v) for v in x]
        if self.c > 0.0:
            return all(abs(v) < _HALF_PI for v in vals[:-1])
        if self.c < 0.0:
            return vals[-1] > 0.0
        return True

    def check_point(self, x):
        if not self.contains(x):
            raise DomainError(
                f"fiber point {tuple(jets.value(v) for v in x)} outside the "
                f"{self.chart} chart of M^{self.n}({self.c:g})")

    def metric_diag(self, x):
        """Diagonal fiber metric entries g_11..g_nn at x (floats or jets)."""
        s = self.scale
        if self.c == 0.0:
            return [1.0] * self.n
        if self.c > 0.0:
            out = []
            acc = s
            for j in range(self.n):
                out.append(acc)
                if j < self.n - 1:
                    cj = jets.cos(x[j])
                    acc = acc * cj * cj
            return out
        inv = 1.0 / (x[-1] * x[-1])
        return [s * inv] * self.n

    def christoffels(self, x):
        """Gamma[k][i][j] of the fiber chart; scale-invariant."""
        n = self.n
        gamma = [[[0.0] * n for _ in range(n)] for _ in range(n)]
        if self.c == 0.0:
            return gamma
        if self.c > 0.0:
            tans = [jets.tan(x[j]) for j in range(n - 1)]
            coss = [jets.cos(x[j]) for j in range(n - 1)]
            for k in range(n):
                for i in range(k):
                    # d_i g_kk = -2 tan(x_i) g_kk for i < k
                    gamma[k][i][k] = -tans[i]
                    gamma[k][k][i] = -tans[i]
                for i in range(k + 1, n):
                    # -d_k g_ii / (2 g_kk) with the cos^2 ladder ratio
                    ratio = coss[k] * coss[k]
                    for j in range(k + 1, i):
                        cj = jets.cos(x[j])
                        ratio = ratio * cj * cj
                    gamma[k][i][i] = tans[k] * ratio
            return gamma
        inv = 1.0 / x[-1]
        last = n - 1
        for i in range(n - 1):
            gamma[last][i][i] = inv
            gamma[i][i][last] = -inv
            gamma[i][last][i] = -inv
        gamma[last][last][last] = -inv
        return gamma


@dataclass(frozen=True)
class WarpedProduct:
    """I x_f M^n(c) with metric dt^2 + f(t)^2 g."""

    interval: Tuple[float, float]
    warp: Expr
    fiber: SpaceForm
    grid_check: int = field(default=1024, repr=False)

    def __post_init__(self):
        a, b = self.interval
        if not (math.isfinite(a) and math.isfinite(b) and a < b):
            raise ValueError(f"invalid interval {self.interval}")
        # cheap nonvanishing guard; exact f != 0 stays the caller's contract
        for i in range(self.grid_check):
            t = a + (b - a) * (i + 0.5) / self.grid_check
            v = eval_jet(self.warp, t)
            if not v.is_finite() or v.d0 == 0.0:
                raise DomainError(f"warping function vanishes near t={t:.6g}")

    @property
    def dim(self):
        return self.fiber.n + 1

    def contains(self, p):
        a, b = self.interval
        t = jets.value(p[0])
        return a < t < b and self.fiber.contains(p[1:])

    def check_point(self, p):
        if len(p) != self.dim:
            raise DomainError(f"point {p} has wrong dimension for {self.dim}-manifold")
        a, b = self.interval
        if not (a < jets.value(p[0]) < b):
            raise DomainError(f"base coordinate t={jets.value(p[0])!r} outside ({a}, {b})")
        self.fiber.check_point(p[1:])

    # -- warping function ----------------------------------------------------

    def warp_jet(self, t):
        """Order-4 jet of f at the float t."""
        return eval_jet(self.warp, t)

    def warp_pair(self, t):
        """(f, f') at t, matching the scalar kind of t (float or jet).

        For a jet t (a curve's base coordinate along arc length) the second
        entry is f' o t, exact through order 3.
        """
        if jets.is_jet(t):
            w = self.warp_jet(t.d0)
            f = jets.compose(w.d0, w.d1, w.d2, w.d3, w.d4, t)
            fp = jets.compose(w.d1, w.d2, w.d3, w.d4, 0.0, t)
            return f, fp
        w = self.warp_jet(t)
        return w.d0, w.d1

    def curvature_coefficients(self, t):
        """(A, B) with A = (f'/f)^2 - c/f^2 and B = f''/f - (f'/f)^2 + c/f^2."""
        w = self.warp_jet(t)
        lam = w.d1 / w.d0
        cf2 = self.fiber.c / (w.d0 * w.d0)
        a = lam * lam - cf2
        return a, w.d2 / w.d0 - lam * lam + cf2

    # -- metric ----------------------------------------------------------------

    def metric_diag(self, p, warp_value=None):
        """Diagonal entries (1, f^2 g_11, .., f^2 g_nn) at p."""
        f = self.warp_pair(p[0])[0] if warp_value is None else warp_value
        f2 = f * f
        return [1.0] + [f2 * gi for gi in self.fiber.metric_diag(p[1:])]

    def metric(self, X, Y):
        """g~(X, Y) = X_0 Y_0 + f^2 g(X_vert, Y_vert)."""
        if X.point != Y.point:
            raise DomainError(f"metric of vectors at different points {X.point} != {Y.point}")
        self.check_point(X.point)
        g = self.metric_diag(X.point)
        return math.fsum(g[k] * X.components[k] * Y.components[k]
                         for k in range(self.dim))

    def norm(self, X):
        return math.sqrt(self.metric(X, X))

    # -- connection --------------------------------------------------------------

    def christoffel_table(self, p, f, fp):
        """Gamma~[k][i][j] at p with warp pair (f, f') supplied by the caller."""
        n = self.fiber.n
        dim = n + 1
        lam = fp / f
        ffp = f * fp
        gfib = self.fiber.metric_diag(p[1:])
        gamma_f = self.fiber.christoffels(p[1:])
        gamma = [[[0.0] * dim for _ in range(dim)] for _ in range(dim)]
        for i in range(1, dim):
            gamma[0][i][i] = -ffp * gfib[i - 1]
            gamma[i][0][i] = lam
            gamma[i][i][0] = lam
            for j in range(1, dim):
                row = gamma_f[i - 1][j - 1]
                for k in range(1, dim):
                    gamma[i][j][k] = row[k - 1]
        return gamma

    def christoffels(self, p):
        """Full Christoffel table of the warped metric at a float point."""
        self.check_point(p)
        f, fp = self.warp_pair(p[0])
        return self.christoffel_table(p, f, fp)

    # -- curvature ----------------------------------------------------------------

    def curvature(self, X, Y, Z):
        """R~(X,Y)Z from the closed form of the warped curvature tensor."""
        if not (X.point == Y.point == Z.point):
            raise DomainError("curvature arguments must share a base point")
        self.check_point(X.point)
        a, b = self.curvature_coefficients(X.point[0])
        g_xz = self.metric(X, Z)
        g_yz = self.metric(Y, Z)
        eta_x = eta(X)
        eta_y = eta(Y)
        eta_z = eta(Z)
        comps = []
        for k in range(self.dim):
            v = a * (g_xz * Y.components[k] - g_yz * X.components[k])
            v += b * (-eta_y * eta_z * X.components[k] + eta_x * eta_z * Y.components[k])
            if k == 0:
                v += b * (g_xz * eta_y - g_yz * eta_x)
            comps.append(v)
        return TangentVector(X.point, tuple(comps))
