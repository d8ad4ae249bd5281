"""Exact tools for representations by generalized polygonal numbers."""

from .exactnum import DomainError, binomial, divisors, sigma
from .polygonal import PolygonalSpec, polygonal_number, theta_series, triple_product_series
from .repcount import build_table, rep_count, rep_count_bruteforce
from .series import TruncatedSeries

__all__ = [
    "DomainError",
    "PolygonalSpec",
    "TruncatedSeries",
    "binomial",
    "build_table",
    "divisors",
    "polygonal_number",
    "rep_count",
    "rep_count_bruteforce",
    "sigma",
    "theta_series",
    "triple_product_series",
]
