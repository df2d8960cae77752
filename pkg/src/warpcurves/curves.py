"""Curves gamma(s) = (gamma_0(s), .., gamma_n(s)) in a warped product.

Components are closed-form expressions of the arc-length parameter s.
Curves that are not unit-speed are rejected by downstream consumers, not
reparametrized.
"""

import math
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from . import jets
from .errors import DomainError
from .expressions import Expr, eval_jet, parse
from .geometry import TangentVector, WarpedProduct, eta

EPS_RANK = 1e-9


@dataclass(frozen=True)
class Curve:
    components: Tuple[Expr, ...]
    domain: Tuple[float, float]
    ambient: WarpedProduct

    def __post_init__(self):
        if len(self.components) != self.ambient.dim:
            raise ValueError(
                f"curve has {len(self.components)} components, ambient "
                f"dimension is {self.ambient.dim}")
        s0, s1 = self.domain
        if not (math.isfinite(s0) and math.isfinite(s1) and s0 < s1):
            raise ValueError(f"invalid curve domain {self.domain}")

    def grid(self, n=257, shrink=0.01):
        """n uniform samples of the domain, endpoints pulled in by `shrink`."""
        s0, s1 = self.domain
        pad = (s1 - s0) * shrink
        return np.linspace(s0 + pad, s1 - pad, n)

    def position_jets(self, s):
        """Order-4 jets of every coordinate component at s."""
        s0, s1 = self.domain
        if not (s0 <= s <= s1):
            raise DomainError(f"parameter s={s!r} outside curve domain ({s0}, {s1})")
        return [eval_jet(comp, s) for comp in self.components]


def curve_from_strings(components, domain, ambient, var="s"):
    return Curve(tuple(parse(src, var=var) for src in components), tuple(domain), ambient)


@dataclass(frozen=True)
class CurveState:
    """Pointwise kinematics of a curve: tangent, speed, structural angle."""

    s: float
    position: Tuple[float, ...]
    T: TangentVector
    speed: float
    theta: float
    theta_prime: Optional[float]
    W: TangentVector


def eval_state(curve, s, eps_rank=EPS_RANK):
    """Position, tangent, and structural-angle data at parameter s."""
    pj = curve.position_jets(s)
    position = tuple(j.d0 for j in pj)
    curve.ambient.check_point(position)
    comps = tuple(j.d1 for j in pj)
    T = TangentVector(position, comps)
    speed = curve.ambient.norm(T)
    cos_theta = max(-1.0, min(1.0, eta(T) / speed))
    theta = math.acos(cos_theta)
    sin_theta = math.sin(theta)
    # theta' = -(d/ds eta(T)) / sin(theta), undefined at the poles
    theta_prime = -pj[0].d2 / sin_theta if sin_theta > eps_rank else None
    W = TangentVector(position, (0.0,) + comps[1:])
    return CurveState(s, position, T, speed, theta, theta_prime, W)


def unit_speed_residual(curve, grid=None):
    """max |speed - 1| over the sample grid."""
    if grid is None:
        grid = curve.grid()
    return max(abs(eval_state(curve, s).speed - 1.0) for s in grid)


@dataclass(frozen=True)
class Classification:
    kind: str  # geodesic-axis | legendre | slant | general
    theta: Optional[float] = None

    def is_slant(self):
        return self.kind in ("legendre", "slant")


def classify(curve, grid=None, eps=1e-7):
    """Structural-angle classification over a grid of samples.

    Requires a unit-speed curve (residual below eps). A slant verdict also
    checks the linear law gamma_0(s) = s cos(theta) + c0 that constant theta
    forces for unit-speed curves.
    """
    if grid is None:
        grid = curve.grid()
    states = [eval_state(curve, s) for s in grid]
    worst_speed = max(abs(st.speed - 1.0) for st in states)
    if worst_speed >= eps:
        raise DomainError(
            f"classification requires a unit-speed curve (residual {worst_speed:.3g})")
    thetas = np.array([st.theta for st in states])
    mean_theta = float(thetas.mean())
    cos_mean = math.cos(mean_theta)
    if abs(cos_mean) > 1.0 - eps:
        return Classification("geodesic-axis", mean_theta)
    if np.max(np.abs(thetas - mean_theta)) < eps:
        t0 = [st.position[0] for st in states]
        c0 = t0[0] - grid[0] * cos_mean
        linear_dev = max(abs(t - (s * cos_mean + c0)) for s, t in zip(grid, t0))
        if linear_dev < eps:
            if abs(cos_mean) < eps:
                return Classification("legendre", mean_theta)
            return Classification("slant", mean_theta)
    return Classification("general")
