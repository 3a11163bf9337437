from qopolars.utils.errors import (
    QOError,
    InputSyntaxError,
    InputSemanticError,
    ConfigError,
    IndeterminateError,
    HypothesisViolated,
    NotQuasiOrdinaryError,
    UnrepresentableError,
    PolytopeError,
    IncompatibleError,
    OracleMismatch,
)
