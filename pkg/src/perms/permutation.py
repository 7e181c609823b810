"""
Permutações em notação de uma linha e as verificações definicionais
usadas como verdade de referência pelo oráculo e pelos perfis.
"""
from typing import Iterable, List, Sequence, Tuple

from ..errors import PermutationError


class Permutation(tuple):
    """
    Bijeção [n] -> [n] em notação de uma linha, indexada a partir de 1.

    Imutável e hashable (é uma tupla). A permutação de comprimento 0
    existe apenas como valor interno (peças de inflações lenientes);
    as operações públicas a rejeitam.
    """

    __slots__ = ()

    def __new__(cls, entries: Iterable[int] = ()):
        valores = tuple(int(e) for e in entries)
        if sorted(valores) != list(range(1, len(valores) + 1)):
            raise PermutationError(
                f"Sequência {valores} não é uma permutação de 1..{len(valores)}"
            )
        return tuple.__new__(cls, valores)

    @classmethod
    def _trusted(cls, entries: Iterable[int]) -> "Permutation":
        # sem validação: uso interno, entradas já são uma permutação
        return tuple.__new__(cls, entries)

    @classmethod
    def parse(cls, texto: str) -> "Permutation":
        return parse_permutation(texto)

    def __str__(self) -> str:
        return format_permutation(self)

    def __repr__(self) -> str:
        return f"Permutation('{format_permutation(self)}')"

    @property
    def sort_key(self) -> Tuple[int, Tuple[int, ...]]:
        """Ordem canônica: comprimento, depois lexicográfica"""
        return (len(self), tuple(self))

    def inverse(self) -> "Permutation":
        return inverse(self)


# Permutação vazia, exclusiva das peças de inflações lenientes
EMPTY = Permutation._trusted(())


def parse_permutation(texto: str) -> Permutation:
    """
    Converte texto em permutação.

    Comprimento até 9 usa dígitos ("2413"); acima disso, vírgulas
    ("10,2,3,..."). A forma com vírgulas é aceita para qualquer comprimento.
    """
    bruto = texto.strip()
    if not bruto:
        raise PermutationError("Permutação vazia no texto de entrada")

    if "," in bruto:
        tokens = [t.strip() for t in bruto.split(",")]
        for pos, tok in enumerate(tokens, 1):
            if not tok.isdigit():
                raise PermutationError(f"Token inválido '{tok}' na posição {pos} de '{texto}'")
        return Permutation(int(t) for t in tokens)

    for pos, ch in enumerate(bruto, 1):
        if ch not in "123456789":
            raise PermutationError(f"Caractere inválido '{ch}' na posição {pos} de '{texto}'")
    return Permutation(int(ch) for ch in bruto)


def format_permutation(pi: Sequence[int]) -> str:
    if len(pi) <= 9:
        return "".join(str(v) for v in pi)
    return ",".join(str(v) for v in pi)


def as_permutation(valor) -> Permutation:
    """Aceita Permutation, texto ou sequência de inteiros"""
    if isinstance(valor, Permutation):
        return valor
    if isinstance(valor, str):
        return parse_permutation(valor)
    return Permutation(valor)


def require_nonempty(*perms: Sequence[int]):
    for pi in perms:
        if len(pi) == 0:
            raise PermutationError("Operação não definida para a permutação vazia")


def standardize(valores: Sequence[int]) -> Permutation:
    """Padrão (order isomorphic) de uma sequência de valores distintos"""
    ordem = sorted(range(len(valores)), key=lambda i: valores[i])
    resultado = [0] * len(valores)
    for rank, i in enumerate(ordem, 1):
        resultado[i] = rank
    return Permutation._trusted(resultado)


def inverse(pi: Sequence[int]) -> Permutation:
    require_nonempty(pi)
    resultado = [0] * len(pi)
    for i, v in enumerate(pi, 1):
        resultado[v - 1] = i
    return Permutation._trusted(resultado)


def is_involution(pi: Sequence[int]) -> bool:
    require_nonempty(pi)
    return all(pi[v - 1] == i for i, v in enumerate(pi, 1))


def fixed_points(pi: Sequence[int]) -> List[int]:
    """Posições (base 1) fixadas por pi"""
    return [i for i, v in enumerate(pi, 1) if i == v]


def is_alternating(pi: Sequence[int]) -> bool:
    """Nenhuma entrada pi(i), 1 < i < n, fica entre seus vizinhos"""
    require_nonempty(pi)
    for i in range(1, len(pi) - 1):
        a, b, c = pi[i - 1], pi[i], pi[i + 1]
        if a < b < c or a > b > c:
            return False
    return True


def begins_with_rise(pi: Sequence[int]) -> bool:
    return len(pi) >= 2 and pi[0] < pi[1]


def ends_with_rise(pi: Sequence[int]) -> bool:
    return len(pi) >= 2 and pi[-2] < pi[-1]


def inversions(pi: Sequence[int]) -> int:
    n = len(pi)
    return sum(1 for i in range(n) for j in range(i + 1, n) if pi[i] > pi[j])


def is_even(pi: Sequence[int]) -> bool:
    """Permutação par: número par de inversões"""
    require_nonempty(pi)
    return inversions(pi) % 2 == 0


def dumont_body(pi: Sequence[int], flipped: bool = False) -> bool:
    """
    Condição de Dumont em todas as entradas exceto a última.

    Entrada par deve ser seguida de uma menor, ímpar de uma maior.
    Com `flipped` os papéis de par e ímpar se invertem.
    """
    for i in range(len(pi) - 1):
        par = (pi[i] % 2 == 0) != flipped
        if par and not pi[i + 1] < pi[i]:
            return False
        if not par and not pi[i + 1] > pi[i]:
            return False
    return True


def is_dumont1(pi: Sequence[int]) -> bool:
    """Dumont de primeira espécie; a última entrada precisa ser ímpar"""
    require_nonempty(pi)
    return dumont_body(pi) and pi[-1] % 2 == 1


def sum_split(pi: Sequence[int]) -> int:
    """Menor k (0 < k < n) com pi[:k] = {1..k}; 0 se soma-indecomponível"""
    maior = 0
    for k in range(1, len(pi)):
        maior = max(maior, pi[k - 1])
        if maior == k:
            return k
    return 0


def skew_split(pi: Sequence[int]) -> int:
    """Menor k (0 < k < n) com pi[:k] = {n-k+1..n}; 0 se skew-indecomponível"""
    n = len(pi)
    menor = n + 1
    for k in range(1, n):
        menor = min(menor, pi[k - 1])
        if menor == n - k + 1:
            return k
    return 0


def is_sum_indec(pi: Sequence[int]) -> bool:
    require_nonempty(pi)
    return sum_split(pi) == 0


def is_skew_indec(pi: Sequence[int]) -> bool:
    require_nonempty(pi)
    return skew_split(pi) == 0
