"""Construtores curtos usados pelos testes"""
from src.classes import ClassSpec
from src.series import TruncatedSeries


def spec(basis, properties=(), **extra) -> ClassSpec:
    return ClassSpec(basis=list(basis), properties=list(properties), **extra)


def x_series(order: int) -> TruncatedSeries:
    return TruncatedSeries.monomial(1, order)


def poly_series(coefs, order: int) -> TruncatedSeries:
    """Polinômio em x (coeficientes a partir de x^0) como série"""
    valores = list(coefs) + [0] * (order + 1 - len(coefs))
    return TruncatedSeries(tuple(valores[:order + 1]))
