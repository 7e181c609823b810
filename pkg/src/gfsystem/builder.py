"""
Construção dos sistemas algébricos pelo método das propriedades
query-complete.

Toda permutação de comprimento >= 2 de uma classe fechada por coroa é,
de modo único, 12[a1, a2] com a1 soma-indecomponível, 21[a1, a2] com a1
skew-indecomponível, ou sigma[a1, ..., am] com sigma simples longa.
Agrupando por perfil, cada g_R vira um polinômio nas g_S.
"""
from collections import defaultdict
from itertools import combinations, product
from typing import Dict, List, Optional, Sequence, Set, Tuple

from ..classes import SimpleSet
from ..config import console, settings
from ..errors import AlgebraicSystemError, UniverseError
from ..perms import Permutation, inverse, is_involution, is_simple, standardize
from ..properties import SKEW_INDEC, SUM_INDEC, Profile, PropertyUniverse
from .system import INVOLUTION, PLAIN, AlgebraicSystem, Polynomial, TargetQuery

_UM = Permutation._trusted((1,))
_SOMA = Permutation._trusted((1, 2))
_SKEW = Permutation._trusted((2, 1))
_SKEW3 = Permutation._trusted((3, 2, 1))

# (expoente de x, perfis das incógnitas, perfis dos parâmetros) -> coeficiente
_Acumulador = Dict[Profile, Dict[Tuple[int, Tuple[Profile, ...], Tuple[Profile, ...]], int]]


def _check_simples(simples: SimpleSet):
    if not simples.complete:
        raise AlgebraicSystemError(
            "class may contain infinitely many simple permutations; raise --max-simple-length"
        )
    if _UM not in simples:
        raise AlgebraicSystemError("O conjunto de simples não contém 1: a classe é vazia")
    # o conjunto precisa ser o de uma classe: fechado para simples contidas
    for sigma in simples.long_simples:
        n = len(sigma)
        for k in range(1, n):
            for posicoes in combinations(range(n), k):
                tau = standardize([sigma[i] for i in posicoes])
                if is_simple(tau) and tau not in simples:
                    raise AlgebraicSystemError(
                        f"Simples {tau} está contida em {sigma} mas não no conjunto: "
                        "entrada não descreve uma classe fechada por coroa"
                    )


def _skeletons(simples: SimpleSet) -> List[Permutation]:
    esqueletos = [s for s in (_SOMA, _SKEW) if s in simples]
    return esqueletos + simples.long_simples


def _check_size(combinacoes: int, limite: int):
    if combinacoes > limite:
        raise AlgebraicSystemError(
            f"Sistema grande demais: {combinacoes} combinações de perfis dos filhos "
            f"(limite {limite}); reduza as condições da classe ou aumente PERMCLASS_MAX_SYSTEM_TERMS"
        )


def _reachable_plain(simples: SimpleSet, universe: PropertyUniverse, limite: int) -> List[Profile]:
    """Menor conjunto de perfis contendo P(1) e fechado pelas transferências"""
    soma = universe.index(SUM_INDEC)
    skew = universe.index(SKEW_INDEC)
    alcance: Set[Profile] = {universe.profile(_UM)}
    while True:
        atual = sorted(alcance, key=universe.profile_key)
        _check_size(sum(len(atual) ** len(sigma) for sigma in _skeletons(simples)), limite)
        novos = set()
        for sigma in _skeletons(simples):
            for filhos in product(atual, repeat=len(sigma)):
                if sigma == _SOMA and soma not in filhos[0]:
                    continue
                if sigma == _SKEW and skew not in filhos[0]:
                    continue
                novos.add(universe.transfer(sigma, filhos))
        if novos <= alcance:
            return sorted(alcance, key=universe.profile_key)
        alcance |= novos


def _finish(
    acumulado: _Acumulador,
    incognitas: List[Profile],
    parametros: List[Profile],
) -> List[Polynomial]:
    indice = {r: i for i, r in enumerate(incognitas)}
    indice_p = {s: i for i, s in enumerate(parametros)}
    equacoes = []
    for r in incognitas:
        eq: Polynomial = {}
        for (e, incs, params), c in acumulado.get(r, {}).items():
            chave = (
                e,
                tuple(sorted(indice[s] for s in incs)),
                tuple(sorted(indice_p[s] for s in params)),
            )
            eq[chave] = eq.get(chave, 0) + c
        equacoes.append(eq)
    return equacoes


def build_system(
    simples: SimpleSet,
    universe: PropertyUniverse,
    target: Optional[TargetQuery] = None,
    max_terms: Optional[int] = None,
) -> AlgebraicSystem:
    """
    Sistema g_R = x[R = P(1)] + sum g_S g_T (12) + sum g_S g_T (21)
    + sum prod g_{R_i} (simples longas), sobre os perfis alcançáveis.
    Com `target`, poda para as incógnitas R ⊇ Q e suas dependências.
    Desiste com AlgebraicSystemError quando as combinações de perfis dos
    filhos passam de `max_terms` (padrão: PERMCLASS_MAX_SYSTEM_TERMS).
    """
    limite = max_terms or settings.MAX_SYSTEM_TERMS
    _check_simples(simples)
    soma = universe.index(SUM_INDEC)
    skew = universe.index(SKEW_INDEC)
    console.log(f"🧩 Construindo sistema plain ({len(universe)} propriedades)")

    alcance = _reachable_plain(simples, universe, limite)
    acumulado: _Acumulador = defaultdict(lambda: defaultdict(int))
    acumulado[universe.profile(_UM)][(1, (), ())] += 1
    for sigma in _skeletons(simples):
        for filhos in product(alcance, repeat=len(sigma)):
            if sigma == _SOMA and soma not in filhos[0]:
                continue
            if sigma == _SKEW and skew not in filhos[0]:
                continue
            r = universe.transfer(sigma, filhos)
            acumulado[r][(0, filhos, ())] += 1

    sistema = AlgebraicSystem(
        mode=PLAIN,
        universe=universe,
        unknowns=alcance,
        equations=_finish(acumulado, alcance, []),
    )
    console.log(f"   ✅ {len(sistema)} incógnitas, {sistema.monomial_count} monômios")
    if target is not None:
        sistema = sistema.pruned(target)
        console.log(f"   ✂️  poda por {target}: {len(sistema)} incógnitas")
    return sistema


def symmetric_simples(simples: SimpleSet) -> SimpleSet:
    """Si(C) ∩ Si(C)^-1: as simples que podem aparecer em involuções de C"""
    mantidas = [s for s in simples.all if inverse(s) in simples]
    return SimpleSet.from_permutations(mantidas, complete=simples.complete)


def build_involution_system(
    simples: SimpleSet,
    universe: PropertyUniverse,
    target: Optional[TargetQuery] = None,
    max_terms: Optional[int] = None,
) -> AlgebraicSystem:
    """
    Sistema h_R das involuções, com parâmetros p_S = g_S(x^2).

    Casos: 12[a1, a2] com ambos involuções; 21[a, a^-1]; 321[a, b, a^-1]
    (decomposição gulosa pelo meio, b involução); e, para cada simples
    longa involução sigma, pontos fixos dão fatores h e 2-ciclos fatores p.
    """
    if not universe.is_inverse_closed:
        raise UniverseError("Contagem de involuções exige universo fechado por inversão")
    _check_simples(simples)
    simetricas = symmetric_simples(simples)
    if len(simetricas.all) != len(simples.all):
        console.log(
            f"   ↔️  {len(simples.all) - len(simetricas.all)} simples sem inversa na classe ignoradas"
        )

    limite = max_terms or settings.MAX_SYSTEM_TERMS
    companheiro = build_system(simetricas, universe, max_terms=limite)
    parametros = companheiro.unknowns
    soma = universe.index(SUM_INDEC)
    skew = universe.index(SKEW_INDEC)
    tem_soma = _SOMA in simetricas
    tem_skew = _SKEW in simetricas
    longas = [s for s in simetricas.long_simples if is_involution(s)]
    console.log(f"🔁 Construindo sistema de involuções ({len(longas)} simples longas involuções)")

    def termos(alcance: Sequence[Profile]):
        """Gera (perfil resultante, monômio) para todos os casos"""
        if tem_soma:
            for s in alcance:
                if soma not in s:
                    continue
                for t in alcance:
                    yield universe.transfer(_SOMA, (s, t)), (0, (s, t), ())
        if tem_skew:
            for s in parametros:
                if skew not in s:
                    continue
                s_inv = universe.invert_profile(s)
                yield universe.transfer(_SKEW, (s, s_inv)), (0, (), (s,))
                for t in alcance:
                    yield universe.transfer(_SKEW3, (s, t, s_inv)), (0, (t,), (s,))
        for sigma in longas:
            fixos = [j for j in range(len(sigma)) if sigma[j] == j + 1]
            pares = [j for j in range(len(sigma)) if sigma[j] > j + 1]
            for escolha_h in product(alcance, repeat=len(fixos)):
                for escolha_p in product(parametros, repeat=len(pares)):
                    filhos: List[Optional[Profile]] = [None] * len(sigma)
                    for j, r in zip(fixos, escolha_h):
                        filhos[j] = r
                    for j, r in zip(pares, escolha_p):
                        filhos[j] = r
                        filhos[sigma[j] - 1] = universe.invert_profile(r)
                    yield universe.transfer(sigma, filhos), (0, tuple(escolha_h), tuple(escolha_p))

    def combinacoes(n: int) -> int:
        total = n * n if tem_soma else 0
        if tem_skew:
            total += len(parametros) * (1 + n)
        for sigma in longas:
            pares = sum(1 for j in range(len(sigma)) if sigma[j] > j + 1)
            total += n ** (len(sigma) - 2 * pares) * len(parametros) ** pares
        return total

    inicial = universe.profile(_UM)
    alcance: Set[Profile] = {inicial}
    while True:
        atual = sorted(alcance, key=universe.profile_key)
        _check_size(combinacoes(len(atual)), limite)
        novos = {r for r, _ in termos(atual)}
        if novos <= alcance:
            break
        alcance |= novos
    incognitas = sorted(alcance, key=universe.profile_key)

    acumulado: _Acumulador = defaultdict(lambda: defaultdict(int))
    acumulado[inicial][(1, (), ())] += 1
    for r, monomio in termos(incognitas):
        acumulado[r][monomio] += 1

    sistema = AlgebraicSystem(
        mode=INVOLUTION,
        universe=universe,
        unknowns=incognitas,
        equations=_finish(acumulado, incognitas, parametros),
        parameters=parametros,
        companion=companheiro,
    )
    console.log(f"   ✅ {len(sistema)} incógnitas h, {len(parametros)} parâmetros p")
    if target is not None:
        sistema = sistema.pruned(target)
        console.log(f"   ✂️  poda por {target}: {len(sistema)} incógnitas")
    return sistema


def properness_check(sistema: AlgebraicSystem) -> Tuple[bool, List[str]]:
    """
    Sem termo constante e sem termo c*g_S (coeficiente constante, grau 1
    nas incógnitas). Termos com parâmetro p ou com x têm valuação >= 1.
    """
    problemas = []
    for i, eq in enumerate(sistema.equations):
        for (e, incs, params), c in eq.items():
            if c == 0 or e or params:
                continue
            if not incs:
                problemas.append(f"{sistema.unknown_name(i)}: termo constante {c}")
            elif len(incs) == 1:
                problemas.append(
                    f"{sistema.unknown_name(i)}: termo linear {c}*{sistema.unknown_name(incs[0])}"
                )
    return not problemas, problemas
