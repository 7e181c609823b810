"""
Regras de transferência por família.

Cada regra decide se sigma[alpha_1, ..., alpha_m] (m >= 2) satisfaz a
propriedade consultando apenas "o filho i satisfaz Q?" para Q no
universo. `dependencies` lista exatamente as consultas que a regra pode
fazer para um dado sigma; `auxiliaries` é o fecho usado quando não se
conhecem os esqueletos.
"""
from functools import lru_cache
from typing import Callable, Sequence, Set, Tuple

from ..errors import UniverseError
from ..perms import inverse, is_skew_indec, is_sum_indec
from .kinds import (
    BEGINS_RISE,
    DUMONT1_BODY,
    DUMONT1_FLIPPED,
    ENDS_RISE,
    EVEN_LENGTH,
    EVEN_PERM,
    IS_SINGLETON,
    LAST_VALUE_EVEN,
    ALTERNATING,
    Property,
    PropertyKind,
    inverse_of,
)
from .splittings import (
    Clause,
    avoidance_clauses,
    classical_subpatterns,
    segment_pieces,
)

# has(i, Q): o filho i (base 0) satisfaz Q?
Accessor = Callable[[int, Property], bool]

_DUMONT = frozenset({DUMONT1_BODY, DUMONT1_FLIPPED, LAST_VALUE_EVEN, EVEN_LENGTH})


@lru_cache(maxsize=None)
def cached_clauses(p: Property, sigma: Tuple[int, ...]) -> Tuple[Clause, ...]:
    return avoidance_clauses(p, sigma)


def auxiliaries(p: Property) -> Set[Property]:
    """Propriedades induzidas por p no fecho completo (independe de sigma)"""
    kind = p.kind
    if kind is PropertyKind.AVOID_CLASSICAL:
        return classical_subpatterns(p) - {p}
    if kind is PropertyKind.AVOID_VINCULAR:
        return segment_pieces(p) - {p}
    if kind is PropertyKind.ALTERNATING:
        return {BEGINS_RISE, ENDS_RISE, IS_SINGLETON}
    if kind in (PropertyKind.BEGINS_RISE, PropertyKind.ENDS_RISE):
        return {IS_SINGLETON}
    if kind is PropertyKind.EVEN_PERM:
        return {EVEN_LENGTH}
    if kind in (PropertyKind.DUMONT1, PropertyKind.DUMONT1_BODY, PropertyKind.DUMONT1_FLIPPED):
        return set(_DUMONT) - {p}
    if kind is PropertyKind.LAST_VALUE_EVEN:
        return {EVEN_LENGTH}
    if kind is PropertyKind.INVERSE_OF:
        return {inverse_of(q) for q in auxiliaries(p.inner)} - {p}
    return set()


def dependencies(p: Property, sigma: Sequence[int]) -> Set[Property]:
    """Consultas feitas pela regra de p sobre o esqueleto sigma"""
    kind = p.kind
    if kind in (PropertyKind.SUM_INDEC, PropertyKind.SKEW_INDEC, PropertyKind.IS_SINGLETON):
        return set()
    if kind is PropertyKind.EVEN_LENGTH:
        return {EVEN_LENGTH}
    if kind is PropertyKind.EVEN_PERM:
        return {EVEN_PERM, EVEN_LENGTH}
    if kind is PropertyKind.ALTERNATING:
        return {ALTERNATING, BEGINS_RISE, ENDS_RISE, IS_SINGLETON}
    if kind is PropertyKind.BEGINS_RISE:
        return {BEGINS_RISE, IS_SINGLETON}
    if kind is PropertyKind.ENDS_RISE:
        return {ENDS_RISE, IS_SINGLETON}
    if kind in (PropertyKind.DUMONT1, PropertyKind.DUMONT1_BODY, PropertyKind.DUMONT1_FLIPPED):
        return set(_DUMONT)
    if kind is PropertyKind.LAST_VALUE_EVEN:
        return {LAST_VALUE_EVEN, EVEN_LENGTH}
    if p.is_pattern_avoidance:
        return {q for clausula in cached_clauses(p, tuple(sigma)) for _, q in clausula}
    if kind is PropertyKind.INVERSE_OF:
        return {inverse_of(q) for q in dependencies(p.inner, inverse(sigma))}
    raise UniverseError(f"Família sem regra de transferência: {kind}")


# ---------------------------------------------------------------------------
# Avaliação
# ---------------------------------------------------------------------------

def evaluate(p: Property, sigma: Sequence[int], has: Accessor) -> bool:
    """sigma[alpha...] satisfaz p, sabendo só as consultas `has` dos filhos"""
    m = len(sigma)
    kind = p.kind

    if kind is PropertyKind.SUM_INDEC:
        return is_sum_indec(sigma)
    if kind is PropertyKind.SKEW_INDEC:
        return is_skew_indec(sigma)
    if kind is PropertyKind.IS_SINGLETON:
        return False
    if kind is PropertyKind.EVEN_LENGTH:
        return sum(1 for i in range(m) if not has(i, EVEN_LENGTH)) % 2 == 0
    if kind is PropertyKind.EVEN_PERM:
        return _even_perm(sigma, has)
    if kind is PropertyKind.ALTERNATING:
        return _alternating(sigma, has)
    if kind is PropertyKind.BEGINS_RISE:
        return has(0, BEGINS_RISE) or (has(0, IS_SINGLETON) and sigma[0] < sigma[1])
    if kind is PropertyKind.ENDS_RISE:
        return has(m - 1, ENDS_RISE) or (has(m - 1, IS_SINGLETON) and sigma[m - 2] < sigma[m - 1])
    if kind in (
        PropertyKind.DUMONT1,
        PropertyKind.DUMONT1_BODY,
        PropertyKind.DUMONT1_FLIPPED,
        PropertyKind.LAST_VALUE_EVEN,
    ):
        return _dumont(kind, sigma, has)
    if p.is_pattern_avoidance:
        return all(
            any(has(i, q) for i, q in clausula)
            for clausula in cached_clauses(p, tuple(sigma))
        )
    if kind is PropertyKind.INVERSE_OF:
        # pi^-1 = sigma^-1[alpha_{sigma^-1(1)}^-1, ...]
        sigma_inv = inverse(sigma)

        def has_inv(j: int, q: Property) -> bool:
            return has(sigma_inv[j] - 1, inverse_of(q))

        return evaluate(p.inner, sigma_inv, has_inv)
    raise UniverseError(f"Família sem regra de transferência: {kind}")


def _even_perm(sigma: Sequence[int], has: Accessor) -> bool:
    m = len(sigma)
    impar = [not has(i, EVEN_LENGTH) for i in range(m)]
    paridade = sum(1 for i in range(m) if not has(i, EVEN_PERM))
    # inversões entre blocos: |alpha_i| * |alpha_j| é ímpar sse ambos são ímpares
    paridade += sum(
        1
        for i in range(m)
        for j in range(i + 1, m)
        if sigma[i] > sigma[j] and impar[i] and impar[j]
    )
    return paridade % 2 == 0


def _alternating(sigma: Sequence[int], has: Accessor) -> bool:
    m = len(sigma)
    for i in range(m):
        if not has(i, ALTERNATING):
            return False
    for i in range(m - 1):
        if sigma[i] < sigma[i + 1]:
            # subida entre blocos: alpha_i termina em descida, alpha_{i+1} começa em descida
            if has(i, ENDS_RISE) or has(i + 1, BEGINS_RISE):
                return False
        else:
            if not (has(i, ENDS_RISE) or has(i, IS_SINGLETON)):
                return False
            if not (has(i + 1, BEGINS_RISE) or has(i + 1, IS_SINGLETON)):
                return False
    # bloco unitário interno fica entre os vizinhos quando sigma é monótona ali
    for i in range(1, m - 1):
        if has(i, IS_SINGLETON):
            a, b, c = sigma[i - 1], sigma[i], sigma[i + 1]
            if a < b < c or a > b > c:
                return False
    return True


def _dumont(kind: PropertyKind, sigma: Sequence[int], has: Accessor) -> bool:
    m = len(sigma)
    impar = [not has(i, EVEN_LENGTH) for i in range(m)]
    # paridade do deslocamento de valores de cada bloco
    deslocamento = [
        sum(1 for j in range(m) if sigma[j] < sigma[i] and impar[j]) % 2 == 1
        for i in range(m)
    ]

    def ultimo_par(i: int) -> bool:
        return has(i, LAST_VALUE_EVEN) != deslocamento[i]

    def corpo(invertido: bool) -> bool:
        for i in range(m):
            troca = deslocamento[i] != invertido
            if not has(i, DUMONT1_FLIPPED if troca else DUMONT1_BODY):
                return False
            if i < m - 1:
                if ultimo_par(i) != invertido:
                    if not sigma[i] > sigma[i + 1]:
                        return False
                elif not sigma[i] < sigma[i + 1]:
                    return False
        return True

    if kind is PropertyKind.LAST_VALUE_EVEN:
        return ultimo_par(m - 1)
    if kind is PropertyKind.DUMONT1_BODY:
        return corpo(False)
    if kind is PropertyKind.DUMONT1_FLIPPED:
        return corpo(True)
    return corpo(False) and not ultimo_par(m - 1)

