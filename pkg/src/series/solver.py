"""
Solução de sistemas algébricos próprios por iteração de ponto fixo
em séries truncadas.

Partindo de g = 0, cada iteração g <- RHS(g) fixa mais um coeficiente
(o sistema é próprio, então todo termo ganha valuação); N+1 iterações
determinam a solução até x^N.
"""
from typing import Dict, List, Mapping, Optional

from ..config import console
from ..errors import SolverError
from ..gfsystem import INVOLUTION, AlgebraicSystem, TargetQuery, properness_check
from ..properties import Profile, PropertyUniverse
from .truncated import TruncatedSeries, series_sum, substitute_x_squared


def _evaluate_rhs(
    sistema: AlgebraicSystem,
    atual: List[TruncatedSeries],
    parametros: List[TruncatedSeries],
    ordem: int,
) -> List[TruncatedSeries]:
    resultado = []
    for eq in sistema.equations:
        total = TruncatedSeries.zero(ordem)
        for (e, incs, params), c in eq.items():
            if e > ordem:
                continue
            termo = TruncatedSeries.monomial(e, ordem, c)
            for j in params:
                termo = termo * parametros[j]
            for i in incs:
                if termo.is_zero():
                    break
                termo = termo * atual[i]
            total = total + termo
        resultado.append(total)
    return resultado


def parameter_series(sistema: AlgebraicSystem, ordem: int) -> Dict[Profile, TruncatedSeries]:
    """p_S = g_S(x^2), com g resolvido no sistema companheiro"""
    if sistema.companion is None:
        raise SolverError("Sistema de involuções sem sistema companheiro para os parâmetros")
    g = solve(sistema.companion, ordem // 2 + 1)
    return {s: substitute_x_squared(g[s]).truncate(ordem) for s in sistema.parameters}


def solve(
    sistema: AlgebraicSystem,
    order: int,
    params: Optional[Mapping[Profile, TruncatedSeries]] = None,
) -> Dict[Profile, TruncatedSeries]:
    """
    Solução única do sistema truncada em x^order.

    Em modo involution, `params` dá a série de cada p_S; se omitido, é
    calculado a partir do sistema companheiro.
    """
    if order < 1:
        raise SolverError(f"Ordem inválida: {order}")
    ok, problemas = properness_check(sistema)
    if not ok:
        raise SolverError("Sistema impróprio: " + "; ".join(problemas))

    series_p: List[TruncatedSeries] = []
    if sistema.mode == INVOLUTION:
        if params is None:
            params = parameter_series(sistema, order)
        for s in sistema.parameters:
            if s not in params:
                raise SolverError(f"Parâmetro ausente: p{sistema.universe.label(s)}")
            if params[s].order < order:
                raise SolverError(
                    f"Parâmetro p{sistema.universe.label(s)} tem ordem {params[s].order} < {order}"
                )
            series_p.append(params[s].truncate(order))

    console.log(f"🔢 Resolvendo {len(sistema)} equações até x^{order}")
    atual = [TruncatedSeries.zero(order) for _ in sistema.unknowns]
    for iteracao in range(1, order + 2):
        novo = _evaluate_rhs(sistema, atual, series_p, order)
        # após k-1 iterações os coeficientes 0..k-1 já são finais
        for i, (antes, depois) in enumerate(zip(atual, novo)):
            if antes.coefficients[:iteracao] != depois.coefficients[:iteracao]:
                raise SolverError(
                    f"Coeficientes de {sistema.unknown_name(i)} mudaram na iteração {iteracao}: "
                    "o sistema não estabiliza"
                )
        atual = novo

    for i, s in enumerate(atual):
        if s[0] != 0:
            raise SolverError(f"{sistema.unknown_name(i)} tem termo constante {s[0]}")
    return dict(zip(sistema.unknowns, atual))


def aggregate(
    solution: Mapping[Profile, TruncatedSeries],
    query: TargetQuery,
    universe: PropertyUniverse,
    order: Optional[int] = None,
) -> TruncatedSeries:
    """f_Q = soma das séries g_R com Q ⊆ R (série nula se nenhum R serve)"""
    query.validate(universe)
    if order is None:
        if not solution:
            raise SolverError("Solução vazia: informe a ordem da agregação")
        order = min(s.order for s in solution.values())
    return series_sum(
        (s for r, s in solution.items() if query.matches(universe, r)),
        order,
    )
