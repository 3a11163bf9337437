# src/qopolars/polar/derivative.py
from qopolars.series.ypoly import SeriesYPoly


def normalized_derivative(f: SeriesYPoly, k: int) -> SeriesYPoly:
    """The k-th polar ((n-k)!/n!)·d^k f/dy^k, monic of degree n - k."""
    n = f.degree
    if not 1 <= k < n:
        raise ValueError(f"k must satisfy 1 <= k < {n}, got {k}")
    if not f.is_monic:
        raise ValueError("normalized derivatives are taken of monic polynomials")
    return f.derivative(k, normalized=True)
