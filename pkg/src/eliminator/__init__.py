"""Eliminação: polinômio anulador Phi(x, f) certificado pela série"""
from .annihilator import AnnihilatorPoly, evaluate_poly, format_annihilator, verify_annihilator
from .resultants import eliminate

__all__ = [
    "AnnihilatorPoly",
    "eliminate",
    "verify_annihilator",
    "format_annihilator",
    "evaluate_poly",
]
