"""Motor de classes: especificação, oráculo, simples e fecho por coroa"""
from .spec import ClassCaps, ClassSpec, SideConditions, parse_condition
from .oracle import Oracle, in_base_class, in_wreath_closure, oracle_count, satisfies_conditions
from .simples import (
    SimpleSet,
    enumerate_simples,
    is_wreath_closed,
    simples_avoiding,
    wreath_closure_basis,
)

__all__ = [
    # Especificação
    "ClassSpec",
    "ClassCaps",
    "SideConditions",
    "parse_condition",

    # Oráculo
    "Oracle",
    "oracle_count",
    "in_base_class",
    "in_wreath_closure",
    "satisfies_conditions",

    # Simples
    "SimpleSet",
    "enumerate_simples",
    "simples_avoiding",
    "is_wreath_closed",
    "wreath_closure_basis",
]
