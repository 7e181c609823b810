"""
Eliminação por resultantes sucessivos.

Ao ideal do sistema soma-se F - sum_{R ⊇ Q} g_R; cada incógnita é
eliminada por resultantes contra o pivô de menor grau nela. Depois de
cada passo o polinômio é fatorado e só ficam os fatores que se anulam
na solução em séries já calculada, o que mantém os graus sob controle.
"""
from typing import Dict, List, Optional, Sequence

import sympy

from ..config import console, settings
from ..errors import EliminationError
from ..gfsystem import INVOLUTION, AlgebraicSystem, Polynomial, TargetQuery
from ..series import TruncatedSeries, aggregate, solve, substitute_x_squared
from .annihilator import F, X, AnnihilatorPoly, evaluate_poly

# ordem das séries usadas para escolher fatores durante a eliminação
_ORDEM_FILTRO = 40


class _Retry(Exception):
    """Ordem de eliminação ruim (resultante nulo ou grau acima do limite)"""


def _rhs_expr(
    eq: Polynomial,
    incognitas: Sequence[sympy.Symbol],
    parametros: Sequence[sympy.Symbol],
    x,
) -> sympy.Expr:
    total = sympy.Integer(0)
    for (e, incs, params), c in eq.items():
        termo = sympy.Integer(c) * x ** e
        for j in params:
            termo *= parametros[j]
        for i in incs:
            termo *= incognitas[i]
        total += termo
    return total


def _keep_vanishing(
    poly: sympy.Poly,
    series: Dict[sympy.Symbol, TruncatedSeries],
    ordem: int,
) -> sympy.Poly:
    """Conteúdo removido; fica o fator irredutível que se anula nas séries"""
    if poly.is_zero:
        raise _Retry("resultante nulo")
    _, poly = poly.primitive()
    _, fatores = sympy.factor_list(poly)
    if len(fatores) == 1 and fatores[0][1] == 1:
        return fatores[0][0]
    for fator, _ in sorted(fatores, key=lambda fm: (fm[0].total_degree(), len(fm[0].terms()))):
        if fator.free_symbols and evaluate_poly(fator, series, ordem).is_zero():
            return fator
    raise EliminationError(
        "Nenhum fator se anula na solução em séries (inconsistência interna)"
    )


def _eliminate_chain(
    polinomios: List[sympy.Poly],
    ordem_eliminacao: Sequence[sympy.Symbol],
    series: Dict[sympy.Symbol, TruncatedSeries],
    degree_cap: int,
) -> sympy.Poly:
    atuais = list(polinomios)
    for var in ordem_eliminacao:
        com = [p for p in atuais if p.degree(var) > 0]
        sem = [p for p in atuais if p.degree(var) <= 0]
        if not com:
            continue
        pivo = min(com, key=lambda p: (p.degree(var), p.total_degree(), len(p.terms())))
        novos = []
        for p in com:
            if p is pivo:
                continue
            r = sympy.resultant(pivo.as_expr(), p.as_expr(), var)
            r = sympy.Poly(sympy.expand(r), *pivo.gens)
            r = _keep_vanishing(r, series, _ORDEM_FILTRO)
            if r.total_degree() > degree_cap:
                raise _Retry(f"grau {r.total_degree()} acima do limite {degree_cap}")
            novos.append(r)
        atuais = sem + novos
        console.log(f"   ➖ eliminada {var}: {len(atuais)} polinômios restantes")

    finais = [p for p in atuais if p.free_symbols <= {F, X} and F in p.free_symbols]
    if not finais:
        raise _Retry("nenhuma relação restou entre f e x")
    return min(finais, key=lambda p: (p.degree(F), p.total_degree()))


def _orders(variaveis: List[sympy.Symbol], tentativas: int) -> List[List[sympy.Symbol]]:
    """Rotações determinísticas da ordem de eliminação"""
    n = len(variaveis)
    ordens = []
    for t in range(min(tentativas, max(n, 1))):
        ordens.append(variaveis[t:] + variaveis[:t])
    return ordens


def eliminate(
    sistema: AlgebraicSystem,
    query: TargetQuery,
    degree_cap: Optional[int] = None,
    retries: Optional[int] = None,
) -> AnnihilatorPoly:
    """
    Polinômio anulador de f_Q. O resultado é certificado pela série,
    mas não necessariamente minimal.
    """
    limite = degree_cap or settings.ELIMINATION_DEGREE_CAP
    tentativas = retries or settings.ELIMINATION_RETRIES
    involucao = sistema.mode == INVOLUTION
    if involucao:
        # caminho mais caro: limites mais apertados
        limite = max(1, limite // 2)
        tentativas = max(1, tentativas // 2)

    console.log(f"🧮 Eliminando {len(sistema)} incógnitas (limite de grau {limite})")
    ordem = _ORDEM_FILTRO
    incognitas = list(sympy.symbols(f"u0:{len(sistema)}")) if len(sistema) else []
    solucao = solve(sistema, ordem)
    series: Dict[sympy.Symbol, TruncatedSeries] = {
        s: solucao[r] for s, r in zip(incognitas, sistema.unknowns)
    }
    series[X] = TruncatedSeries.monomial(1, ordem)
    series[F] = aggregate(solucao, query, sistema.universe, ordem)

    parametros: List[sympy.Symbol] = []
    relacoes: List[sympy.Expr] = []
    if involucao:
        companheiro = sistema.companion
        parametros = list(sympy.symbols(f"p0:{len(sistema.parameters)}"))
        g = solve(companheiro, ordem // 2 + 1)
        for s, r in zip(parametros, companheiro.unknowns):
            series[s] = substitute_x_squared(g[r]).truncate(ordem)
        # p_S = RHS_S(x^2, p), as relações do sistema companheiro em x^2
        for s, eq in zip(parametros, companheiro.equations):
            relacoes.append(s - _rhs_expr(eq, parametros, [], X ** 2))

    geradores = incognitas + parametros + [F, X]
    expressoes = [
        u - _rhs_expr(eq, incognitas, parametros, X)
        for u, eq in zip(incognitas, sistema.equations)
    ]
    alvo = [u for u, r in zip(incognitas, sistema.unknowns) if query.matches(sistema.universe, r)]
    expressoes.append(F - sum(alvo, sympy.Integer(0)))
    expressoes.extend(relacoes)
    polinomios = [sympy.Poly(sympy.expand(e), *geradores) for e in expressoes]

    ultimo_erro = ""
    for ordem_elim in _orders(incognitas + parametros, tentativas):
        try:
            phi = _eliminate_chain(polinomios, ordem_elim, series, limite)
        except _Retry as erro:
            ultimo_erro = str(erro)
            console.log(f"   🔁 ordem de eliminação descartada: {erro}")
            continue
        resultado = AnnihilatorPoly(sympy.Poly(phi.as_expr(), F, X))
        if not resultado.evaluate(series[F], ordem).is_zero():
            raise EliminationError("Polinômio obtido não anula a série (inconsistência interna)")
        console.log(f"   ✅ anulador de grau {resultado.degree_f} em f")
        return resultado
    raise EliminationError(
        f"Eliminação falhou após {tentativas} ordens ({ultimo_erro}); a série continua disponível"
    )
