"""Closed-form scalar expressions of one variable.

Grammar (binary ops left-associative, highest precedence first):

    ^                       constant real exponent, else rewritten below
    unary -
    * /
    + -
    atoms: numbers, the free variable, pi, e, f(expr) for f in FUNCTIONS

A power whose exponent contains the variable is rewritten at parse time as
exp(exponent * log(base)). Expressions are immutable after parsing and
evaluation is pure, on floats or on jets (order-4 Taylor arithmetic).
"""

import math
import re
from dataclasses import dataclass
from typing import Union

from . import jets
from .errors import ExprDomainError, ExprSyntaxError, JetDomainError, NumericalFailure

FUNCTIONS = ("sin", "cos", "tan", "sinh", "cosh", "tanh",
             "exp", "log", "sqrt", "asin", "acos", "atan")
CONSTANTS = {"pi": math.pi, "e": math.e}


@dataclass(frozen=True)
class Num:
    value: float
    offset: int = 0


@dataclass(frozen=True)
class Var:
    offset: int = 0


@dataclass(frozen=True)
class Const:
    name: str
    value: float
    offset: int = 0


@dataclass(frozen=True)
class Neg:
    arg: "Expr"
    offset: int = 0


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Expr"
    right: "Expr"
    offset: int = 0


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exponent: float
    offset: int = 0


@dataclass(frozen=True)
class Func:
    name: str
    arg: "Expr"
    offset: int = 0


Expr = Union[Num, Var, Const, Neg, BinOp, Pow, Func]

_TOKEN_RE = re.compile(r"""
    (?P<num>\d+(?:\.\d*)?(?:[eE][+-]?\d+)?|\.\d+(?:[eE][+-]?\d+)?)
  | (?P<ident>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<op>[-+*/^()])
  | (?P<ws>\s+)
""", re.VERBOSE)


def _tokenize(source):
    tokens = []
    pos = 0
    while pos < len(source):
        m = _TOKEN_RE.match(source, pos)
        if m is None:
            raise ExprSyntaxError(f"unexpected character {source[pos]!r}", pos)
        if m.lastgroup == "num":
            tokens.append(("num", float(m.group()), pos))
        elif m.lastgroup == "ident":
            tokens.append(("ident", m.group(), pos))
        elif m.lastgroup == "op":
            tokens.append((m.group(), m.group(), pos))
        pos = m.end()
    tokens.append(("end", "", len(source)))
    return tokens


class _Parser:
    def __init__(self, source, var):
        if not source or source.isspace():
            raise ExprSyntaxError("empty expression", 0)
        self.source = source
        self.var = var
        self.tokens = _tokenize(source)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def advance(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, kind, what):
        tok = self.peek()
        if tok[0] != kind:
            raise ExprSyntaxError(f"expected {what}", tok[2])
        return self.advance()

    def parse(self):
        node = self.addsub()
        tok = self.peek()
        if tok[0] != "end":
            raise ExprSyntaxError(f"unexpected token {tok[1]!r}", tok[2])
        return node

    def addsub(self):
        node = self.muldiv()
        while self.peek()[0] in ("+", "-"):
            op, _, offset = self.advance()
            node = BinOp(op, node, self.muldiv(), offset)
        return node

    def muldiv(self):
        node = self.unary()
        while self.peek()[0] in ("*", "/"):
            op, _, offset = self.advance()
            node = BinOp(op, node, self.unary(), offset)
        return node

    def unary(self):
        if self.peek()[0] == "-":
            _, _, offset = self.advance()
            return Neg(self.unary(), offset)
        return self.power()

    def power(self):
        node = self.primary()
        while self.peek()[0] == "^":
            _, _, offset = self.advance()
            node = _make_power(node, self.exponent(), offset)
        return node

    def exponent(self):
        if self.peek()[0] == "-":
            _, _, offset = self.advance()
            return Neg(self.exponent(), offset)
        return self.primary()

    def primary(self):
        kind, val, offset = self.advance()
        if kind == "num":
            return Num(val, offset)
        if kind == "ident":
            if val == self.var:
                return Var(offset)
            if val in CONSTANTS:
                return Const(val, CONSTANTS[val], offset)
            if val in FUNCTIONS:
                self.expect("(", "'(' after function name")
                arg = self.addsub()
                self.expect(")", "closing parenthesis")
                return Func(val, arg, offset)
            raise ExprSyntaxError(f"unknown identifier {val!r}", offset)
        if kind == "(":
            node = self.addsub()
            self.expect(")", "closing parenthesis")
            return node
        if kind == "end":
            raise ExprSyntaxError("unexpected end of input", offset)
        raise ExprSyntaxError(f"unexpected token {val!r}", offset)


def _is_constant(node):
    if isinstance(node, (Num, Const)):
        return True
    if isinstance(node, Var):
        return False
    if isinstance(node, Neg):
        return _is_constant(node.arg)
    if isinstance(node, BinOp):
        return _is_constant(node.left) and _is_constant(node.right)
    if isinstance(node, Pow):
        return _is_constant(node.base)
    if isinstance(node, Func):
        return _is_constant(node.arg)
    raise TypeError(node)


def _make_power(base, exponent, offset):
    if _is_constant(exponent):
        return Pow(base, evaluate(exponent, 0.0), offset)
    # variable exponent: single-valued rewrite, domain base > 0
    return Func("exp", BinOp("*", exponent, Func("log", base, offset), offset), offset)


def parse(source, var="t"):
    """Parse source text into an Expr whose free variable is named `var`."""
    return _Parser(source, var).parse()


def evaluate(node, x):
    """Evaluate an Expr at x, which may be a float or a jet."""
    if isinstance(node, Num):
        return node.value
    if isinstance(node, Const):
        return node.value
    if isinstance(node, Var):
        return x
    if isinstance(node, Neg):
        return -evaluate(node.arg, x)
    if isinstance(node, BinOp):
        lhs = evaluate(node.left, x)
        rhs = evaluate(node.right, x)
        if node.op == "+":
            return lhs + rhs
        if node.op == "-":
            return lhs - rhs
        if node.op == "*":
            return lhs * rhs
        try:
            return lhs / rhs
        except (ZeroDivisionError, JetDomainError):
            raise ExprDomainError("division", jets.value(rhs), node.offset) from None
    if isinstance(node, Pow):
        base = evaluate(node.base, x)
        p = node.exponent
        try:
            if jets.is_jet(base):
                return base ** p
            if base < 0.0 and not float(p).is_integer():
                raise JetDomainError("negative base, fractional exponent")
            return base ** p
        except (JetDomainError, ZeroDivisionError, OverflowError):
            raise ExprDomainError(f"power ^{p:g}", jets.value(base), node.offset) from None
    if isinstance(node, Func):
        arg = evaluate(node.arg, x)
        try:
            return getattr(jets, node.name)(arg)
        except (JetDomainError, ValueError, ZeroDivisionError):
            raise ExprDomainError(node.name, jets.value(arg), node.offset) from None
        except OverflowError:
            raise NumericalFailure(
                f"overflow in {node.name} at argument {jets.value(arg)!r}") from None
    raise TypeError(node)


def eval_jet(node, x):
    """Order-4 jet of the expression at the float x."""
    out = evaluate(node, jets.variable(x))
    if not jets.is_jet(out):
        out = jets.Jet4(out)  # constant expression
    if not out.is_finite():
        raise NumericalFailure(f"non-finite jet {out!r} at x={x!r}")
    return out
