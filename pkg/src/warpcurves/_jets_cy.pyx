# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled backend for order-4 truncated Taylor jets.

Mirrors ``_jets_py`` exactly; see that module for semantics. Selected at
import time by ``warpcurves.jets`` when the extension is built.
"""

from libc cimport math as cmath

from .errors import JetDomainError


cdef inline Jet4 _new(double d0, double d1, double d2, double d3, double d4):
    cdef Jet4 j = Jet4.__new__(Jet4)
    j.d0 = d0
    j.d1 = d1
    j.d2 = d2
    j.d3 = d3
    j.d4 = d4
    return j


cdef inline Jet4 _compose(double h0, double h1, double h2, double h3, double h4,
                          Jet4 g):
    cdef double g1 = g.d1, g2 = g.d2, g3 = g.d3, g4 = g.d4
    return _new(
        h0,
        h1 * g1,
        h2 * g1 * g1 + h1 * g2,
        h3 * g1 * g1 * g1 + 3.0 * h2 * g1 * g2 + h1 * g3,
        h4 * g1 * g1 * g1 * g1 + 6.0 * h3 * g1 * g1 * g2
        + h2 * (3.0 * g2 * g2 + 4.0 * g1 * g3) + h1 * g4,
    )


cdef inline Jet4 _mul(Jet4 a, Jet4 b):
    return _new(
        a.d0 * b.d0,
        a.d1 * b.d0 + a.d0 * b.d1,
        a.d2 * b.d0 + 2.0 * a.d1 * b.d1 + a.d0 * b.d2,
        a.d3 * b.d0 + 3.0 * a.d2 * b.d1 + 3.0 * a.d1 * b.d2 + a.d0 * b.d3,
        a.d4 * b.d0 + 4.0 * a.d3 * b.d1 + 6.0 * a.d2 * b.d2
        + 4.0 * a.d1 * b.d3 + a.d0 * b.d4,
    )


cdef class Jet4:
    """Value plus derivatives of order 1..4 at a point."""

    cdef public double d0, d1, d2, d3, d4

    def __init__(self, d0, d1=0.0, d2=0.0, d3=0.0, d4=0.0):
        self.d0 = d0
        self.d1 = d1
        self.d2 = d2
        self.d3 = d3
        self.d4 = d4

    def as_tuple(self):
        return (self.d0, self.d1, self.d2, self.d3, self.d4)

    def is_finite(self):
        return (cmath.isfinite(self.d0) and cmath.isfinite(self.d1)
                and cmath.isfinite(self.d2) and cmath.isfinite(self.d3)
                and cmath.isfinite(self.d4))

    def derivative(self):
        """Shift down one order; the top entry of the result is unknown."""
        return _new(self.d1, self.d2, self.d3, self.d4, 0.0)

    def __repr__(self):
        return "Jet4" + repr(self.as_tuple())

    def __eq__(self, other):
        if isinstance(other, Jet4):
            return self.as_tuple() == (<Jet4>other).as_tuple()
        return NotImplemented

    def __hash__(self):
        return hash(self.as_tuple())

    def __add__(self, other):
        cdef Jet4 b
        if isinstance(other, Jet4):
            b = <Jet4>other
            return _new(self.d0 + b.d0, self.d1 + b.d1, self.d2 + b.d2,
                        self.d3 + b.d3, self.d4 + b.d4)
        return _new(self.d0 + <double>other, self.d1, self.d2, self.d3, self.d4)

    def __radd__(self, other):
        return _new(self.d0 + <double>other, self.d1, self.d2, self.d3, self.d4)

    def __sub__(self, other):
        cdef Jet4 b
        if isinstance(other, Jet4):
            b = <Jet4>other
            return _new(self.d0 - b.d0, self.d1 - b.d1, self.d2 - b.d2,
                        self.d3 - b.d3, self.d4 - b.d4)
        return _new(self.d0 - <double>other, self.d1, self.d2, self.d3, self.d4)

    def __rsub__(self, other):
        return _new(<double>other - self.d0, -self.d1, -self.d2, -self.d3, -self.d4)

    def __neg__(self):
        return _new(-self.d0, -self.d1, -self.d2, -self.d3, -self.d4)

    def __mul__(self, other):
        cdef double c
        if isinstance(other, Jet4):
            return _mul(self, <Jet4>other)
        c = <double>other
        return _new(self.d0 * c, self.d1 * c, self.d2 * c, self.d3 * c, self.d4 * c)

    def __rmul__(self, other):
        cdef double c = <double>other
        return _new(self.d0 * c, self.d1 * c, self.d2 * c, self.d3 * c, self.d4 * c)

    cpdef Jet4 reciprocal(self):
        cdef double u = self.d0, r, r2
        if u == 0.0:
            raise JetDomainError("reciprocal of jet with zero value")
        r = 1.0 / u
        r2 = r * r
        return _compose(r, -r2, 2.0 * r2 * r, -6.0 * r2 * r2, 24.0 * r2 * r2 * r, self)

    def __truediv__(self, other):
        cdef double c
        if isinstance(other, Jet4):
            return _mul(self, (<Jet4>other).reciprocal())
        c = <double>other
        return _new(self.d0 / c, self.d1 / c, self.d2 / c, self.d3 / c, self.d4 / c)

    def __rtruediv__(self, other):
        return self.reciprocal() * other

    def __pow__(self, p, modulo):
        cdef double pd, u, h0, h1, h2, h3, h4
        cdef int n, i
        cdef Jet4 out
        if isinstance(p, Jet4):
            raise TypeError("jet exponents must be constant; rewrite as exp(p*log(b))")
        pd = <double>p
        if pd == cmath.floor(pd) and cmath.fabs(pd) <= 16.0:
            n = <int>pd
            if n == 0:
                return _new(1.0, 0.0, 0.0, 0.0, 0.0)
            out = self
            for i in range(abs(n) - 1):
                out = _mul(out, self)
            return out.reciprocal() if n < 0 else out
        u = self.d0
        if u <= 0.0:
            raise JetDomainError(
                f"jet power base must be positive for exponent {p}, got {u}")
        h0 = u ** pd
        h1 = pd * u ** (pd - 1.0)
        h2 = pd * (pd - 1.0) * u ** (pd - 2.0)
        h3 = pd * (pd - 1.0) * (pd - 2.0) * u ** (pd - 3.0)
        h4 = pd * (pd - 1.0) * (pd - 2.0) * (pd - 3.0) * u ** (pd - 4.0)
        return _compose(h0, h1, h2, h3, h4, self)

    cpdef Jet4 exp(self):
        cdef double e = cmath.exp(self.d0)
        return _compose(e, e, e, e, e, self)

    cpdef Jet4 log(self):
        cdef double u = self.d0, r, r2
        if u <= 0.0:
            raise JetDomainError(f"log of non-positive jet value {u}")
        r = 1.0 / u
        r2 = r * r
        return _compose(cmath.log(u), r, -r2, 2.0 * r2 * r, -6.0 * r2 * r2, self)

    cpdef Jet4 sqrt(self):
        cdef double u = self.d0, v
        if u <= 0.0:
            raise JetDomainError(f"sqrt of non-positive jet value {u}")
        v = cmath.sqrt(u)
        return _compose(v, 0.5 / v, -0.25 / (v * u), 0.375 / (v * u * u),
                        -0.9375 / (v * u * u * u), self)

    cpdef Jet4 sin(self):
        cdef double s = cmath.sin(self.d0), c = cmath.cos(self.d0)
        return _compose(s, c, -s, -c, s, self)

    cpdef Jet4 cos(self):
        cdef double s = cmath.sin(self.d0), c = cmath.cos(self.d0)
        return _compose(c, -s, -c, s, c, self)

    cpdef Jet4 tan(self):
        return _mul(self.sin(), self.cos().reciprocal())

    cpdef Jet4 sinh(self):
        cdef double sh = cmath.sinh(self.d0), ch = cmath.cosh(self.d0)
        return _compose(sh, ch, sh, ch, sh, self)

    cpdef Jet4 cosh(self):
        cdef double sh = cmath.sinh(self.d0), ch = cmath.cosh(self.d0)
        return _compose(ch, sh, ch, sh, ch, self)

    cpdef Jet4 tanh(self):
        return _mul(self.sinh(), self.cosh().reciprocal())

    cpdef Jet4 asin(self):
        cdef double u = self.d0, w, r
        if cmath.fabs(u) >= 1.0:
            raise JetDomainError(f"asin of jet value {u} outside (-1, 1)")
        w = 1.0 - u * u
        r = 1.0 / cmath.sqrt(w)
        return _compose(cmath.asin(u), r, u * r / w,
                        (2.0 * u * u + 1.0) * r / (w * w),
                        3.0 * u * (2.0 * u * u + 3.0) * r / (w * w * w), self)

    cpdef Jet4 acos(self):
        cdef double u = self.d0, w, r
        if cmath.fabs(u) >= 1.0:
            raise JetDomainError(f"acos of jet value {u} outside (-1, 1)")
        w = 1.0 - u * u
        r = 1.0 / cmath.sqrt(w)
        return _compose(cmath.acos(u), -r, -u * r / w,
                        -(2.0 * u * u + 1.0) * r / (w * w),
                        -3.0 * u * (2.0 * u * u + 3.0) * r / (w * w * w), self)

    cpdef Jet4 atan(self):
        cdef double u = self.d0
        cdef double q = 1.0 / (1.0 + u * u)
        cdef double q2 = q * q
        return _compose(cmath.atan(u), q, -2.0 * u * q2,
                        (6.0 * u * u - 2.0) * q2 * q,
                        24.0 * u * (1.0 - u * u) * q2 * q2, self)


def variable(double x):
    """Jet of the identity map at x."""
    return _new(x, 1.0, 0.0, 0.0, 0.0)


def constant(double x):
    return _new(x, 0.0, 0.0, 0.0, 0.0)


def compose(double h0, double h1, double h2, double h3, double h4, Jet4 g):
    """Chain rule to order 4: outer derivatives h0..h4 taken at g.d0."""
    return _compose(h0, h1, h2, h3, h4, g)
