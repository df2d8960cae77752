"""Pure-Python backend for order-4 truncated Taylor jets.

A jet stores the value and the first four derivatives of a scalar function
with respect to one real parameter.  Arithmetic is graded: entry k of any
result depends only on entries 0..k of the operands, so jets whose top
entries are unknown stay correct in every order that was meaningful.

This module is the reference implementation; ``_jets_cy`` mirrors it.
"""

import math

from .errors import JetDomainError

_SIN_CYCLE = (math.sin, math.cos, lambda u: -math.sin(u), lambda u: -math.cos(u))


class Jet4:
    """Value plus derivatives of order 1..4 at a point."""

    __slots__ = ("d0", "d1", "d2", "d3", "d4")

    def __init__(self, d0, d1=0.0, d2=0.0, d3=0.0, d4=0.0):
        self.d0 = float(d0)
        self.d1 = float(d1)
        self.d2 = float(d2)
        self.d3 = float(d3)
        self.d4 = float(d4)

    # -- structure ---------------------------------------------------------

    def as_tuple(self):
        return (self.d0, self.d1, self.d2, self.d3, self.d4)

    def is_finite(self):
        return all(map(math.isfinite, self.as_tuple()))

    def derivative(self):
        """Shift down one order; the top entry of the result is unknown."""
        return Jet4(self.d1, self.d2, self.d3, self.d4, 0.0)

    def __repr__(self):
        return "Jet4" + repr(self.as_tuple())

    def __eq__(self, other):
        if isinstance(other, Jet4):
            return self.as_tuple() == other.as_tuple()
        return NotImplemented

    def __hash__(self):
        return hash(self.as_tuple())

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        if isinstance(other, Jet4):
            return Jet4(self.d0 + other.d0, self.d1 + other.d1,
                        self.d2 + other.d2, self.d3 + other.d3,
                        self.d4 + other.d4)
        return Jet4(self.d0 + other, self.d1, self.d2, self.d3, self.d4)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, Jet4):
            return Jet4(self.d0 - other.d0, self.d1 - other.d1,
                        self.d2 - other.d2, self.d3 - other.d3,
                        self.d4 - other.d4)
        return Jet4(self.d0 - other, self.d1, self.d2, self.d3, self.d4)

    def __rsub__(self, other):
        return Jet4(other - self.d0, -self.d1, -self.d2, -self.d3, -self.d4)

    def __neg__(self):
        return Jet4(-self.d0, -self.d1, -self.d2, -self.d3, -self.d4)

    def __mul__(self, other):
        if isinstance(other, Jet4):
            a0, a1, a2, a3, a4 = self.d0, self.d1, self.d2, self.d3, self.d4
            b0, b1, b2, b3, b4 = other.d0, other.d1, other.d2, other.d3, other.d4
            return Jet4(
                a0 * b0,
                a1 * b0 + a0 * b1,
                a2 * b0 + 2.0 * a1 * b1 + a0 * b2,
                a3 * b0 + 3.0 * a2 * b1 + 3.0 * a1 * b2 + a0 * b3,
                a4 * b0 + 4.0 * a3 * b1 + 6.0 * a2 * b2 + 4.0 * a1 * b3 + a0 * b4,
            )
        return Jet4(self.d0 * other, self.d1 * other, self.d2 * other,
                    self.d3 * other, self.d4 * other)

    __rmul__ = __mul__

    def reciprocal(self):
        u = self.d0
        if u == 0.0:
            raise JetDomainError("reciprocal of jet with zero value")
        r = 1.0 / u
        r2 = r * r
        return compose(r, -r2, 2.0 * r2 * r, -6.0 * r2 * r2, 24.0 * r2 * r2 * r, self)

    def __truediv__(self, other):
        if isinstance(other, Jet4):
            return self * other.reciprocal()
        return Jet4(self.d0 / other, self.d1 / other, self.d2 / other,
                    self.d3 / other, self.d4 / other)

    def __rtruediv__(self, other):
        return self.reciprocal() * other

    def __pow__(self, p):
        if isinstance(p, Jet4):
            raise TypeError("jet exponents must be constant; rewrite as exp(p*log(b))")
        if float(p).is_integer() and abs(p) <= 16:
            n = int(p)
            if n == 0:
                return Jet4(1.0)
            out = self
            for _ in range(abs(n) - 1):
                out = out * self
            return out.reciprocal() if n < 0 else out
        u = self.d0
        if u <= 0.0:
            raise JetDomainError(
                f"jet power base must be positive for exponent {p}, got {u}")
        h0 = u ** p
        h1 = p * u ** (p - 1.0)
        h2 = p * (p - 1.0) * u ** (p - 2.0)
        h3 = p * (p - 1.0) * (p - 2.0) * u ** (p - 3.0)
        h4 = p * (p - 1.0) * (p - 2.0) * (p - 3.0) * u ** (p - 4.0)
        return compose(h0, h1, h2, h3, h4, self)

    # -- analytic functions -------------------------------------------------

    def exp(self):
        e = math.exp(self.d0)
        return compose(e, e, e, e, e, self)

    def log(self):
        u = self.d0
        if u <= 0.0:
            raise JetDomainError(f"log of non-positive jet value {u}")
        r = 1.0 / u
        r2 = r * r
        return compose(math.log(u), r, -r2, 2.0 * r2 * r, -6.0 * r2 * r2, self)

    def sqrt(self):
        u = self.d0
        if u <= 0.0:
            raise JetDomainError(f"sqrt of non-positive jet value {u}")
        v = math.sqrt(u)
        return compose(v, 0.5 / v, -0.25 / (v * u), 0.375 / (v * u * u),
                       -0.9375 / (v * u * u * u), self)

    def sin(self):
        s = math.sin(self.d0)
        c = math.cos(self.d0)
        return compose(s, c, -s, -c, s, self)

    def cos(self):
        s = math.sin(self.d0)
        c = math.cos(self.d0)
        return compose(c, -s, -c, s, c, self)

    def tan(self):
        return self.sin() / self.cos()

    def sinh(self):
        sh = math.sinh(self.d0)
        ch = math.cosh(self.d0)
        return compose(sh, ch, sh, ch, sh, self)

    def cosh(self):
        sh = math.sinh(self.d0)
        ch = math.cosh(self.d0)
        return compose(ch, sh, ch, sh, ch, self)

    def tanh(self):
        return self.sinh() / self.cosh()

    def asin(self):
        u = self.d0
        if abs(u) >= 1.0:
            raise JetDomainError(f"asin of jet value {u} outside (-1, 1)")
        w = 1.0 - u * u
        r = 1.0 / math.sqrt(w)
        return compose(math.asin(u), r, u * r / w,
                       (2.0 * u * u + 1.0) * r / (w * w),
                       3.0 * u * (2.0 * u * u + 3.0) * r / (w * w * w), self)

    def acos(self):
        u = self.d0
        if abs(u) >= 1.0:
            raise JetDomainError(f"acos of jet value {u} outside (-1, 1)")
        w = 1.0 - u * u
        r = 1.0 / math.sqrt(w)
        return compose(math.acos(u), -r, -u * r / w,
                       -(2.0 * u * u + 1.0) * r / (w * w),
                       -3.0 * u * (2.0 * u * u + 3.0) * r / (w * w * w), self)

    def atan(self):
        u = self.d0
        q = 1.0 / (1.0 + u * u)
        q2 = q * q
        return compose(math.atan(u), q, -2.0 * u * q2,
                       (6.0 * u * u - 2.0) * q2 * q,
                       24.0 * u * (1.0 - u * u) * q2 * q2, self)


def variable(x):
    """Jet of the identity map at x."""
    return Jet4(x, 1.0, 0.0, 0.0, 0.0)


def constant(x):
    return Jet4(x)


def compose(h0, h1, h2, h3, h4, g):
    """Chain rule to order 4: outer derivatives h0..h4 taken at g.d0."""
    g1, g2, g3, g4 = g.d1, g.d2, g.d3, g.d4
    return Jet4(
        h0,
        h1 * g1,
        h2 * g1 * g1 + h1 * g2,
        h3 * g1 * g1 * g1 + 3.0 * h2 * g1 * g2 + h1 * g3,
        h4 * g1 * g1 * g1 * g1 + 6.0 * h3 * g1 * g1 * g2
        + h2 * (3.0 * g2 * g2 + 4.0 * g1 * g3) + h1 * g4,
    )
