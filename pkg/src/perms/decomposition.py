"""
Intervalos, simplicidade, inflações e a decomposição por substituição.
"""
from typing import List, Optional, Sequence, Tuple

from ..errors import PermutationError
from .permutation import (
    EMPTY,
    Permutation,
    require_nonempty,
    skew_split,
    standardize,
    sum_split,
)


def proper_intervals(pi: Sequence[int]) -> List[Tuple[int, int]]:
    """
    Todos os intervalos [a, b] (base 1) com 1 < b-a+1 < n cujo conjunto
    de valores é contíguo, em ordem de (a, b).
    """
    require_nonempty(pi)
    n = len(pi)
    intervalos = []
    for a in range(n):
        menor = maior = pi[a]
        for b in range(a + 1, n):
            menor = min(menor, pi[b])
            maior = max(maior, pi[b])
            tamanho = b - a + 1
            if tamanho >= n:
                break
            if maior - menor == b - a:
                intervalos.append((a + 1, b + 1))
    return intervalos


def is_simple(pi: Sequence[int]) -> bool:
    require_nonempty(pi)
    n = len(pi)
    # mesma varredura de proper_intervals, interrompida no primeiro achado
    for a in range(n):
        menor = maior = pi[a]
        for b in range(a + 1, n):
            if b - a + 1 >= n:
                break
            menor = min(menor, pi[b])
            maior = max(maior, pi[b])
            if maior - menor == b - a:
                return False
    return True


def inflate_lenient(sigma: Sequence[int], children: Sequence[Sequence[int]]) -> Permutation:
    """Inflação em que as peças podem ser vazias"""
    if len(children) != len(sigma):
        raise PermutationError(
            f"Inflação de {Permutation._trusted(sigma)} exige {len(sigma)} filhos (recebidos: {len(children)})"
        )
    tamanhos = [len(c) for c in children]
    deslocamento = [0] * len(sigma)
    for i, vi in enumerate(sigma):
        deslocamento[i] = sum(tamanhos[j] for j, vj in enumerate(sigma) if vj < vi)
    resultado = []
    for i, filho in enumerate(children):
        resultado.extend(v + deslocamento[i] for v in filho)
    return Permutation._trusted(resultado)


def inflate(sigma: Sequence[int], children: Sequence[Sequence[int]]) -> Permutation:
    """sigma[alpha_1, ..., alpha_m]: cada entrada vira um bloco isomorfo a alpha_i"""
    require_nonempty(sigma)
    if len(children) != len(sigma):
        raise PermutationError(
            f"Inflação de {Permutation._trusted(sigma)} exige {len(sigma)} filhos (recebidos: {len(children)})"
        )
    for i, filho in enumerate(children, 1):
        if len(filho) == 0:
            raise PermutationError(f"Filho {i} vazio na inflação")
    return inflate_lenient(sigma, children)


def decompose(pi: Sequence[int]) -> Tuple[Permutation, List[Permutation]]:
    """
    Decomposição por substituição: esqueleto simples e filhos.

    Para esqueletos 12 e 21 o primeiro filho é o menor prefixo soma
    (skew) indecomponível. Convenção: 1 -> (1, [1]).
    """
    require_nonempty(pi)
    n = len(pi)
    if n == 1:
        return Permutation._trusted((1,)), [Permutation._trusted((1,))]

    k = sum_split(pi)
    if k:
        return Permutation._trusted((1, 2)), [standardize(pi[:k]), standardize(pi[k:])]
    k = skew_split(pi)
    if k:
        return Permutation._trusted((2, 1)), [standardize(pi[:k]), standardize(pi[k:])]

    # intervalos maximais próprios são disjuntos quando pi não é soma nem skew
    maximais = []
    for a, b in sorted(proper_intervals(pi), key=lambda ab: (ab[0], -(ab[1] - ab[0]))):
        if maximais and maximais[-1][1] >= b:
            continue
        maximais.append((a, b))

    blocos = []
    cobertura = 1
    for a, b in maximais:
        while cobertura < a:
            blocos.append((cobertura, cobertura))
            cobertura += 1
        blocos.append((a, b))
        cobertura = b + 1
    while cobertura <= n:
        blocos.append((cobertura, cobertura))
        cobertura += 1

    esqueleto = standardize([pi[a - 1] for a, _ in blocos])
    filhos = [standardize(pi[a - 1:b]) for a, b in blocos]
    return esqueleto, filhos


def skew_components(pi: Sequence[int]) -> List[Permutation]:
    """Cadeia maximal pi = a_1 ⊖ a_2 ⊖ ... com partes skew-indecomponíveis"""
    partes = []
    resto = standardize(pi)
    while True:
        k = skew_split(resto)
        if not k:
            partes.append(resto)
            return partes
        partes.append(standardize(resto[:k]))
        resto = standardize(resto[k:])


def sum_components(pi: Sequence[int]) -> List[Permutation]:
    partes = []
    resto = standardize(pi)
    while True:
        k = sum_split(resto)
        if not k:
            partes.append(resto)
            return partes
        partes.append(standardize(resto[:k]))
        resto = standardize(resto[k:])


def middle_greedy_321(
    pi: Sequence[int],
) -> Optional[Tuple[Permutation, Permutation, Permutation]]:
    """
    Decomposição gulosa pelo meio: pi = 321[a1, a2, a3] com a1 e a3
    skew-indecomponíveis e a2 o mais longo possível. None quando pi tem
    exatamente duas partes skew-indecomponíveis.
    """
    require_nonempty(pi)
    partes = skew_components(pi)
    if len(partes) < 2:
        raise PermutationError(f"{Permutation._trusted(pi)} é skew-indecomponível")
    if len(partes) == 2:
        return None
    n = len(pi)
    primeiro, ultimo = len(partes[0]), len(partes[-1])
    meio = standardize(pi[primeiro:n - ultimo])
    return partes[0], meio, partes[-1]


__all__ = [
    "EMPTY",
    "proper_intervals",
    "is_simple",
    "inflate",
    "inflate_lenient",
    "decompose",
    "skew_components",
    "sum_components",
    "middle_greedy_321",
]
