"""
Polinômios anuladores Phi(x, f) e sua certificação por substituição
de séries.
"""
from typing import Dict, List, Mapping, Optional

import sympy
from sympy.parsing.sympy_parser import parse_expr

from ..config import settings
from ..errors import EliminationError
from ..series import TruncatedSeries

X, F = sympy.symbols("x f")


def evaluate_poly(
    poly: sympy.Poly,
    valores: Mapping[sympy.Symbol, TruncatedSeries],
    order: int,
) -> TruncatedSeries:
    """Substitui cada gerador do polinômio por sua série, truncando em x^order"""
    potencias: Dict[sympy.Symbol, List[TruncatedSeries]] = {}

    def potencia(simbolo: sympy.Symbol, k: int) -> TruncatedSeries:
        lista = potencias.setdefault(simbolo, [TruncatedSeries.constant(1, order)])
        base = valores[simbolo].truncate(order)
        while len(lista) <= k:
            lista.append(lista[-1] * base)
        return lista[k]

    total = TruncatedSeries.zero(order)
    for expoentes, coef in poly.terms():
        termo = TruncatedSeries.constant(int(coef), order)
        for simbolo, k in zip(poly.gens, expoentes):
            if k:
                termo = termo * potencia(simbolo, k)
            if termo.is_zero():
                break
        total = total + termo
    return total


def normalize(poly: sympy.Poly) -> sympy.Poly:
    """Primitivo (conteúdo 1) com coeficiente líder positivo em grlex sobre (f, x)"""
    poly = sympy.Poly(poly.as_expr(), F, X)
    if poly.is_zero:
        raise EliminationError("Polinômio anulador identicamente nulo")
    _, primitivo = poly.primitive()
    if primitivo.LC(order="grlex") < 0:
        primitivo = -primitivo
    return primitivo


def _x_text(coef_expr) -> str:
    """Polinômio em x em potências decrescentes: "x^2 - 5*x + 4" """
    p = sympy.Poly(coef_expr, X)
    partes = []
    for (k,), c in sorted(p.terms(), key=lambda t: -t[0][0]):
        c = int(c)
        if k == 0:
            corpo = str(abs(c))
        else:
            potencia = "x" if k == 1 else f"x^{k}"
            corpo = potencia if abs(c) == 1 else f"{abs(c)}*{potencia}"
        if not partes:
            partes.append(corpo if c > 0 else f"-{corpo}")
        else:
            partes.append(f"+ {corpo}" if c > 0 else f"- {corpo}")
    return " ".join(partes)


def format_annihilator(poly: sympy.Poly) -> str:
    """Potências decrescentes de f: "f^2 + (x - 1)*f + x" """
    por_f = sympy.Poly(poly.as_expr(), F)
    partes = []
    for (k,), coef in sorted(por_f.terms(), key=lambda t: -t[0][0]):
        coef_x = sympy.Poly(coef, X)
        negativo = coef_x.LC() < 0
        if negativo:
            coef_x = -coef_x
        texto = _x_text(coef_x.as_expr())
        potencia = "" if k == 0 else ("f" if k == 1 else f"f^{k}")
        if not potencia:
            corpo = f"({texto})" if negativo and partes and len(coef_x.terms()) > 1 else texto
        elif texto == "1":
            corpo = potencia
        elif len(coef_x.terms()) > 1:
            corpo = f"({texto})*{potencia}"
        else:
            corpo = f"{texto}*{potencia}"
        if not partes:
            partes.append(f"-{corpo}" if negativo else corpo)
        else:
            partes.append(f"- {corpo}" if negativo else f"+ {corpo}")
    return " ".join(partes)


class AnnihilatorPoly:
    """Phi(x, f) com coeficientes inteiros, primitivo e com sinal normalizado"""

    def __init__(self, poly):
        if not isinstance(poly, sympy.Poly):
            poly = sympy.Poly(poly, F, X)
        self.poly = normalize(poly)

    @classmethod
    def parse(cls, texto: str) -> "AnnihilatorPoly":
        """Aceita a notação impressa ("f^2 + (x - 1)*f + x"), com ou sem "= 0" """
        bruto = texto.split("=")[0].replace("^", "**")
        expr = parse_expr(bruto, local_dict={"x": X, "f": F})
        return cls(sympy.Poly(sympy.expand(expr), F, X))

    @property
    def degree_f(self) -> int:
        return self.poly.degree(F)

    @property
    def total_degree(self) -> int:
        return self.poly.total_degree()

    def evaluate(self, f: TruncatedSeries, order: int) -> TruncatedSeries:
        """Phi(x, f(x)) truncado em x^order"""
        return evaluate_poly(self.poly, {X: TruncatedSeries.monomial(1, order), F: f}, order)

    def __eq__(self, other) -> bool:
        return isinstance(other, AnnihilatorPoly) and self.poly == other.poly

    def __hash__(self) -> int:
        return hash(self.poly.as_expr())

    def __str__(self) -> str:
        return format_annihilator(self.poly)

    def __repr__(self) -> str:
        return f"AnnihilatorPoly('{self}')"


def verify_annihilator(
    phi: AnnihilatorPoly,
    f: TruncatedSeries,
    order: int,
    margin: Optional[int] = None,
) -> bool:
    """Phi(x, f) se anula até x^order? Recusa ordens pequenas demais para o grau"""
    margem = settings.ANNIHILATOR_MARGIN if margin is None else margin
    if order < phi.degree_f + margem:
        raise EliminationError(
            f"Ordem {order} pequena demais para certificar grau {phi.degree_f} "
            f"(mínimo: {phi.degree_f + margem})"
        )
    if f.order < order:
        raise EliminationError(f"Série de ordem {f.order} não alcança a ordem pedida {order}")
    return phi.evaluate(f, order).is_zero()
