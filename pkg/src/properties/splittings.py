"""
Divisões lenientes de um padrão sobre um esqueleto.

Uma divisão atribui segmentos consecutivos do padrão gamma aos blocos de
sigma (segmentos podem ser vazios) de modo que gamma = sigma[peças]. É
a base da transferência de avoidance: o hospedeiro contém gamma sse
existe uma divisão em que cada peça não vazia está contida no filho
correspondente.
"""
from itertools import combinations
from typing import FrozenSet, Iterator, List, Sequence, Set, Tuple

from ..errors import UniverseError
from ..perms import VincularPattern, standardize
from .kinds import Property, PropertyKind, avoid_classical, avoid_vincular

# (índice do bloco, propriedade de avoidance da peça)
Clause = Tuple[Tuple[int, Property], ...]


def lenient_splittings(
    gamma: Sequence[int],
    sigma: Sequence[int],
    adjacency: FrozenSet[int] = frozenset(),
    left_anchor: bool = False,
    right_anchor: bool = False,
) -> Iterator[Tuple[int, ...]]:
    """
    Gera os cortes (c_0 = 0 <= c_1 <= ... <= c_m = k): o bloco i recebe
    gamma[c_i:c_{i+1}].

    Com restrições vinculares, uma adjacência que atravessa um corte
    exige blocos consecutivos, e as âncoras prendem a primeira (última)
    entrada ao primeiro (último) bloco.
    """
    k, m = len(gamma), len(sigma)
    cortes = [0] * (m + 1)
    # (bloco, menor valor, maior valor) dos segmentos não vazios já colocados
    colocados: List[Tuple[int, int, int]] = []

    def compativel(bloco: int, lo: int, hi: int) -> bool:
        for outro, _, ohi in colocados:
            if (ohi < lo) != (sigma[outro] < sigma[bloco]):
                return False
        return True

    def busca(bloco: int) -> Iterator[Tuple[int, ...]]:
        inicio = cortes[bloco]
        if bloco == m - 1:
            fins = [k]
        else:
            fins = range(inicio, k + 1)
        for fim in fins:
            if fim > inicio:
                if left_anchor and inicio == 0 and bloco != 0:
                    continue
                if right_anchor and fim == k and bloco != m - 1:
                    continue
                # adjacência entre a última entrada anterior e a primeira deste bloco
                if inicio > 0 and inicio in adjacency:
                    anterior = _bloco_da_entrada(cortes, bloco, inicio - 1)
                    if anterior != bloco - 1:
                        continue
                segmento = gamma[inicio:fim]
                lo, hi = min(segmento), max(segmento)
                if hi - lo != fim - inicio - 1 or not compativel(bloco, lo, hi):
                    continue
                colocados.append((bloco, lo, hi))
            cortes[bloco + 1] = fim
            if bloco == m - 1:
                yield tuple(cortes)
            else:
                yield from busca(bloco + 1)
            if fim > inicio:
                colocados.pop()

    yield from busca(0)


def _bloco_da_entrada(cortes: Sequence[int], ate: int, entrada: int) -> int:
    """Bloco (< ate) que recebeu a entrada, pelos cortes já fixados"""
    for b in range(ate - 1, -1, -1):
        if cortes[b] <= entrada < cortes[b + 1]:
            return b
    return -1


def piece_property(
    gamma: Sequence[int],
    inicio: int,
    fim: int,
    adjacency: FrozenSet[int] = frozenset(),
    left_anchor: bool = False,
    right_anchor: bool = False,
) -> Property:
    """Avoidance da peça gamma[inicio:fim] com adjacências e âncoras herdadas"""
    k = len(gamma)
    herdadas = frozenset(a - inicio for a in adjacency if inicio < a < fim)
    esquerda = left_anchor if inicio == 0 else inicio in adjacency
    direita = right_anchor if fim == k else fim in adjacency
    padrao = standardize(gamma[inicio:fim])
    return avoid_vincular(VincularPattern(padrao, herdadas, esquerda, direita))


def avoidance_clauses(p: Property, sigma: Sequence[int]) -> Tuple[Clause, ...]:
    """
    Uma cláusula por divisão leniente. O resultado evita o padrão sse
    toda cláusula tem alguma peça (i, Q) com o filho i satisfazendo Q.
    """
    if p.kind not in (PropertyKind.AVOID_CLASSICAL, PropertyKind.AVOID_VINCULAR):
        raise UniverseError(f"{p} não é uma propriedade de avoidance")
    gamma = p.pattern
    clausulas: Set[Clause] = set()
    for cortes in lenient_splittings(gamma, sigma, p.adjacency, p.left_anchor, p.right_anchor):
        pecas = []
        for bloco in range(len(sigma)):
            inicio, fim = cortes[bloco], cortes[bloco + 1]
            if fim > inicio:
                pecas.append((
                    bloco,
                    piece_property(gamma, inicio, fim, p.adjacency, p.left_anchor, p.right_anchor),
                ))
        clausulas.add(tuple(pecas))
    return tuple(sorted(clausulas, key=lambda c: [(i, q.sort_key) for i, q in c]))


def segment_pieces(p: Property) -> Set[Property]:
    """Todas as peças de segmentos de um padrão vincular (fecho completo)"""
    gamma = p.pattern
    k = len(gamma)
    pecas = set()
    for inicio in range(k):
        for fim in range(inicio + 1, k + 1):
            segmento = gamma[inicio:fim]
            if max(segmento) - min(segmento) != fim - inicio - 1:
                continue
            pecas.add(piece_property(gamma, inicio, fim, p.adjacency, p.left_anchor, p.right_anchor))
    return pecas


def classical_subpatterns(p: Property) -> Set[Property]:
    """{Av(delta) : delta <= beta}, incluindo o próprio beta"""
    beta = p.pattern
    resultado = set()
    for tamanho in range(1, len(beta) + 1):
        for posicoes in combinations(range(len(beta)), tamanho):
            resultado.add(avoid_classical(standardize([beta[i] for i in posicoes])))
    return resultado
