# src/qopolars/utils/errors.py
from typing import Optional


class QOError(Exception):
    """Base class for every failure raised by qopolars."""

    exit_code = 1


class InputSyntaxError(QOError):
    def __init__(self, message: str, line: int = 0, column: int = 0):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


class InputSemanticError(QOError):
    pass


class ConfigError(QOError):
    pass


class IndeterminateError(QOError):
    """A value cannot be decided at the available precision."""

    exit_code = 3


class HypothesisViolated(QOError):
    """A prediction was requested for an input outside its theorem's hypothesis."""

    exit_code = 2


class NotQuasiOrdinaryError(QOError):
    def __init__(self, message: str, pair: Optional[tuple] = None):
        self.pair = pair
        super().__init__(message)


class UnrepresentableError(QOError):
    """A constant lies outside the cyclotomic tower."""


class PolytopeError(QOError):
    pass


class IncompatibleError(QOError):
    def __init__(self, message: str, ball: object = None):
        self.ball = ball
        super().__init__(message)


class OracleMismatch(QOError):
    """An oracle contradicted a theorem-backed prediction."""
