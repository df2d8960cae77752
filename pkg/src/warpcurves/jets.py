"""Jet backend selection and scalar-generic math.

The compiled backend is used when built; set WARPCURVES_JETS=pure to force
the pure-Python one (e.g. for benchmarking). The generic functions below
accept plain floats or jets of either backend, so geometric formulas can be
written once and evaluated pointwise or along curves.
"""

import math
import os

from . import _jets_py


def _select_backend():
    choice = os.environ.get("WARPCURVES_JETS", "auto").strip().lower()
    if choice in ("pure", "py", "python"):
        return _jets_py, "pure"
    try:
        from . import _jets_cy
    except ImportError:
        if choice in ("compiled", "cy"):
            raise ImportError(
                "WARPCURVES_JETS requested the compiled jet backend "
                "but the extension is not built") from None
        return _jets_py, "pure"
    return _jets_cy, "compiled"


_backend, BACKEND = _select_backend()

Jet4 = _backend.Jet4
variable = _backend.variable
constant = _backend.constant
compose = _backend.compose

_jet_classes = [_jets_py.Jet4]
if _backend is not _jets_py:
    _jet_classes.append(_backend.Jet4)
JET_TYPES = tuple(_jet_classes)


def backends():
    """Importable backends, name -> module (for tests and benchmarks)."""
    out = {"pure": _jets_py}
    if _backend is not _jets_py:
        out["compiled"] = _backend
    else:
        try:
            from . import _jets_cy
            out["compiled"] = _jets_cy
        except ImportError:
            pass
    return out


def is_jet(x):
    return isinstance(x, JET_TYPES)


def value(x):
    """Value part of a jet, or the float itself."""
    return x.d0 if isinstance(x, JET_TYPES) else x


def sin(x):
    return x.sin() if isinstance(x, JET_TYPES) else math.sin(x)


def cos(x):
    return x.cos() if isinstance(x, JET_TYPES) else math.cos(x)


def tan(x):
    return x.tan() if isinstance(x, JET_TYPES) else math.tan(x)


def exp(x):
    return x.exp() if isinstance(x, JET_TYPES) else math.exp(x)


def log(x):
    return x.log() if isinstance(x, JET_TYPES) else math.log(x)


def sqrt(x):
    return x.sqrt() if isinstance(x, JET_TYPES) else math.sqrt(x)


def sinh(x):
    return x.sinh() if isinstance(x, JET_TYPES) else math.sinh(x)


def cosh(x):
    return x.cosh() if isinstance(x, JET_TYPES) else math.cosh(x)


def tanh(x):
    return x.tanh() if isinstance(x, JET_TYPES) else math.tanh(x)


def asin(x):
    return x.asin() if isinstance(x, JET_TYPES) else math.asin(x)


def acos(x):
    return x.acos() if isinstance(x, JET_TYPES) else math.acos(x)


def atan(x):
    return x.atan() if isinstance(x, JET_TYPES) else math.atan(x)
