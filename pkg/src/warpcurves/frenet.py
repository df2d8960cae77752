"""Covariant derivatives along curves and the Frenet apparatus.

Everything at a sample s is carried as order-4 jets: position components
hold orders 0..4, the tangent orders 0..3, and each covariant derivative
costs one order. That is exactly enough for three nested derivatives of the
tangent plus curvature jets k1 (through k1''), k2 (through k2') and k3.

Frames are computed pointwise per sample; there is no ODE propagation, so
isolated curvature zeros only drop the osculating order locally.
"""

import math
from dataclasses import dataclass
from typing import Optional, Tuple

from . import jets
from .curves import EPS_RANK
from .errors import UnitSpeedError
from .geometry import TangentVector

UNIT_SPEED_TOL = 1e-7


@dataclass(frozen=True)
class FrenetData:
    """Frame vectors E_1..E_r, curvatures, and their base-direction components.

    eta_E is padded with zeros beyond the osculating order so that the
    "replace k_m = 0" convention of the biharmonicity equations is direct.
    k_jets[i] carries derivatives of k_{i+1} through order 2 - i.
    """

    s: float
    r: int
    E: Tuple[TangentVector, ...]
    k: Tuple[float, ...]
    k_jets: tuple
    eta_E: Tuple[float, float, float, float]
    marginal: Tuple[bool, ...]
    closure_residual: Optional[float]


class CurveFrame:
    """Jet context of one curve at one parameter value."""

    def __init__(self, curve, s, eps_rank=EPS_RANK):
        self.curve = curve
        self.s = float(s)
        self.eps_rank = eps_rank
        wp = curve.ambient
        self.wp = wp
        self.pos = curve.position_jets(s)
        self.point = tuple(j.d0 for j in self.pos)
        wp.check_point(self.point)
        self.f, self.fp = wp.warp_pair(self.pos[0])
        self.gdiag = wp.metric_diag(self.pos, warp_value=self.f)
        self.gamma = wp.christoffel_table(self.pos, self.f, self.fp)
        self.T = [p.derivative() for p in self.pos]
        self.dim = wp.dim
        self._frenet = None

    def nabla(self, V):
        """Covariant derivative along the curve of jet components V."""
        V = [v if jets.is_jet(v) else jets.Jet4(v) for v in V]
        dim = self.dim
        out = []
        for k in range(dim):
            acc = V[k].derivative()
            row_k = self.gamma[k]
            for i in range(dim):
                ti = self.T[i]
                row = row_k[i]
                for j in range(dim):
                    g = row[j]
                    if isinstance(g, float):
                        if g == 0.0:
                            continue
                    acc = acc + g * ti * V[j]
            out.append(acc)
        return out

    def metric_jet(self, V, W):
        acc = self.gdiag[0] * V[0] * W[0]
        for k in range(1, self.dim):
            acc = acc + self.gdiag[k] * V[k] * W[k]
        return acc

    def vector(self, V):
        """Value parts of jet components as a TangentVector."""
        return TangentVector(self.point, tuple(jets.value(v) for v in V))

    def speed(self):
        sq = self.metric_jet(self.T, self.T)
        return math.sqrt(max(sq.d0, 0.0))

    def frenet(self, unit_speed_tol=UNIT_SPEED_TOL):
        if self._frenet is None:
            self._frenet = self._build_frenet(unit_speed_tol)
        return self._frenet

    def _build_frenet(self, unit_speed_tol):
        speed = self.speed()
        if abs(speed - 1.0) > unit_speed_tol:
            raise UnitSpeedError(
                f"|speed - 1| = {abs(speed - 1.0):.3g} at s={self.s!r} exceeds "
                f"{unit_speed_tol:g}; reparametrize by arc length first")
        eps = self.eps_rank
        r_max = min(self.dim, 4)

        frames = [self.T]
        k_vals = []
        k_jets = []
        marginal = []
        closure = None

        nxt = self.nabla(self.T)  # k1 E2
        while True:
            sq = self.metric_jet(nxt, nxt)
            k_val = math.sqrt(max(jets.value(sq), 0.0))
            if k_val <= eps or len(frames) >= r_max:
                # order drops here; k_val is the numeric closure residual
                closure = k_val
                break
            k_jets.append(sq.sqrt())
            k_vals.append(k_val)
            marginal.append(k_val < 10.0 * eps)
            frames.append([v / k_jets[-1] for v in nxt])
            if len(frames) == 4:
                break  # jet orders exhausted; no closure residual at r = 4
            # Frenet step: k_m E_{m+1} = nabla_T E_m + k_{m-1} E_{m-1}
            nab = self.nabla(frames[-1])
            nxt = [nab[i] + k_jets[-1] * frames[-2][i] for i in range(self.dim)]

        r = len(frames)
        eta_e = [0.0, 0.0, 0.0, 0.0]
        for i, fr in enumerate(frames[:4]):
            eta_e[i] = jets.value(fr[0])
        return FrenetData(
            s=self.s,
            r=r,
            E=tuple(self.vector(fr) for fr in frames),
            k=tuple(k_vals),
            k_jets=tuple(k_jets),
            eta_E=tuple(eta_e),
            marginal=tuple(marginal),
            closure_residual=closure,
        )


def covariant_derivative_along(curve, V, s):
    """(nabla_T V)^k = dV^k/ds + Gamma^k_ij T^i V^j as jets, one order lower."""
    return CurveFrame(curve, s).nabla(V)


def frenet_apparatus(curve, s, eps_rank=EPS_RANK, unit_speed_tol=UNIT_SPEED_TOL):
    """Frenet frame, curvatures, and eta-components at parameter s."""
    return CurveFrame(curve, s, eps_rank=eps_rank).frenet(unit_speed_tol)
