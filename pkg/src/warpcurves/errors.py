"""Exception hierarchy shared across the package."""


class WarpcurvesError(Exception):
    """Base class for all errors raised by this package."""


class JetDomainError(WarpcurvesError):
    """A jet operation left the domain of the underlying function."""


class ExprSyntaxError(WarpcurvesError):
    """Expression source failed to parse; carries the byte offset."""

    def __init__(self, message, offset):
        super().__init__(f"{message} (offset {offset})")
        self.offset = offset


class ExprDomainError(WarpcurvesError):
    """Evaluation hit a domain violation at a specific AST node."""

    def __init__(self, node_name, value, offset=None):
        at = f" (offset {offset})" if offset is not None else ""
        super().__init__(f"domain error in {node_name} at argument {value!r}{at}")
        self.node_name = node_name
        self.value = value
        self.offset = offset


class NumericalFailure(WarpcurvesError):
    """A computation overflowed to a non-finite value."""


class DomainError(WarpcurvesError):
    """A point or parameter left the valid region of a chart or interval."""


class UnitSpeedError(WarpcurvesError):
    """Curve is not parametrized by arc length where that is required."""
