"""Séries truncadas exatas e o resolvedor de sistemas próprios"""
from .truncated import TruncatedSeries, series_sum, substitute_x_squared
from .solver import aggregate, parameter_series, solve

__all__ = [
    "TruncatedSeries",
    "substitute_x_squared",
    "series_sum",
    "solve",
    "parameter_series",
    "aggregate",
]
