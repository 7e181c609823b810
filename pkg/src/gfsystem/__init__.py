"""Sistemas algébricos de funções geradoras (plain e de involuções)"""
from .system import (
    INVOLUTION,
    PLAIN,
    AlgebraicSystem,
    Monomial,
    Polynomial,
    TargetQuery,
)
from .builder import (
    build_involution_system,
    build_system,
    properness_check,
    symmetric_simples,
)

__all__ = [
    # Tipos
    "AlgebraicSystem",
    "TargetQuery",
    "Monomial",
    "Polynomial",
    "PLAIN",
    "INVOLUTION",

    # Construção
    "build_system",
    "build_involution_system",
    "symmetric_simples",
    "properness_check",
]
