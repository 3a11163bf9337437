"""Exact arithmetic for quasi-ordinary polynomials and their higher polars."""
