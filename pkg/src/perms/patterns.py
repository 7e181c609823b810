"""
Contenção de padrões: clássicos, vinculares (blocked) e barrados.

A busca é por backtracking sobre posições, podando pelo intervalo de
valores permitido pelos vizinhos de valor já colocados.
"""
from dataclasses import dataclass, field
from typing import FrozenSet, Iterator, List, Sequence, Tuple

from ..errors import PermutationError
from .permutation import (
    Permutation,
    parse_permutation,
    require_nonempty,
    standardize,
)


@dataclass(frozen=True)
class VincularPattern:
    """
    Padrão vincular: `adjacency` contém as posições i (base 1) cujas
    entradas i e i+1 precisam ser adjacentes no hospedeiro. O padrão
    clássico é o caso sem adjacências. As âncoras exigem que a primeira
    (última) entrada da cópia seja a primeira (última) do hospedeiro.
    """
    pattern: Permutation
    adjacency: FrozenSet[int] = field(default_factory=frozenset)
    left_anchor: bool = False
    right_anchor: bool = False

    def __post_init__(self):
        require_nonempty(self.pattern)
        for i in self.adjacency:
            if not 1 <= i <= len(self.pattern) - 1:
                raise PermutationError(
                    f"Adjacência {i} fora de [1, {len(self.pattern) - 1}] em {self.pattern}"
                )

    @property
    def is_classical(self) -> bool:
        return not self.adjacency and not self.left_anchor and not self.right_anchor

    def __str__(self) -> str:
        return format_vincular(self)


@dataclass(frozen=True)
class BarredPattern:
    """Padrão barrado: `barred` são as posições (base 1) com barra"""
    pattern: Permutation
    barred: FrozenSet[int]

    def __post_init__(self):
        require_nonempty(self.pattern)
        n = len(self.pattern)
        if not self.barred or len(self.barred) >= n:
            raise PermutationError("O conjunto de barras deve ser não vazio e próprio")
        if any(not 1 <= i <= n for i in self.barred):
            raise PermutationError(f"Posição barrada fora de [1, {n}]")

    @property
    def reduct_positions(self) -> Tuple[int, ...]:
        return tuple(i for i in range(1, len(self.pattern) + 1) if i not in self.barred)

    @property
    def reduct(self) -> Permutation:
        return standardize([self.pattern[i - 1] for i in self.reduct_positions])

    def __str__(self) -> str:
        return format_barred(self)


# ---------------------------------------------------------------------------
# Parsing e formatação
# ---------------------------------------------------------------------------

def parse_vincular(texto: str) -> VincularPattern:
    """
    "3-12": o traço marca entradas que não precisam ser consecutivas.
    Na forma com vírgulas, "," separa entradas adjacentes e "-" as demais.
    "^" no início e "$" no fim marcam as âncoras.
    """
    bruto = texto.strip()
    esquerda = bruto.startswith("^")
    direita = bruto.endswith("$")
    bruto = bruto.lstrip("^").rstrip("$")
    if not bruto:
        raise PermutationError(f"Padrão vincular vazio: '{texto}'")

    valores: List[str] = []
    adjacentes: List[bool] = []
    if "," in bruto:
        atual = ""
        for ch in bruto:
            if ch in ",-":
                if not atual:
                    raise PermutationError(f"Separador duplicado em '{texto}'")
                valores.append(atual)
                adjacentes.append(ch == ",")
                atual = ""
            else:
                atual += ch
        valores.append(atual)
    else:
        proximo_adjacente = True
        for ch in bruto:
            if ch == "-":
                if not valores or not proximo_adjacente:
                    raise PermutationError(f"Traço mal posicionado em '{texto}'")
                proximo_adjacente = False
                continue
            if valores:
                adjacentes.append(proximo_adjacente)
            valores.append(ch)
            proximo_adjacente = True
        if not proximo_adjacente:
            raise PermutationError(f"Traço final em '{texto}'")

    padrao = parse_permutation(",".join(valores))
    adjacencia = frozenset(i for i, adj in enumerate(adjacentes, 1) if adj)
    return VincularPattern(padrao, adjacencia, esquerda, direita)


def format_vincular(p: VincularPattern) -> str:
    digitos = len(p.pattern) <= 9
    partes = []
    for i, v in enumerate(p.pattern, 1):
        if i > 1:
            if i - 1 in p.adjacency:
                partes.append("" if digitos else ",")
            else:
                partes.append("-")
        partes.append(str(v))
    texto = "".join(partes)
    return ("^" if p.left_anchor else "") + texto + ("$" if p.right_anchor else "")


def parse_barred(texto: str) -> BarredPattern:
    """"[3]12" na forma de dígitos, "3!,1,2" na forma com vírgulas"""
    bruto = texto.strip()
    valores: List[str] = []
    barras = set()
    if "," in bruto:
        for tok in bruto.split(","):
            tok = tok.strip()
            if tok.endswith("!"):
                barras.add(len(valores) + 1)
                tok = tok[:-1]
            valores.append(tok)
    else:
        i = 0
        while i < len(bruto):
            ch = bruto[i]
            if ch == "[":
                if i + 2 >= len(bruto) or bruto[i + 2] != "]":
                    raise PermutationError(f"Barra mal formada na posição {i + 1} de '{texto}'")
                barras.add(len(valores) + 1)
                valores.append(bruto[i + 1])
                i += 3
                continue
            valores.append(ch)
            i += 1
    padrao = parse_permutation(",".join(valores))
    return BarredPattern(padrao, frozenset(barras))


def format_barred(p: BarredPattern) -> str:
    if len(p.pattern) <= 9:
        return "".join(
            f"[{v}]" if i in p.barred else str(v) for i, v in enumerate(p.pattern, 1)
        )
    return ",".join(f"{v}!" if i in p.barred else str(v) for i, v in enumerate(p.pattern, 1))


# ---------------------------------------------------------------------------
# Busca de ocorrências
# ---------------------------------------------------------------------------

def _value_neighbours(pattern: Sequence[int]) -> Tuple[List[int], List[int]]:
    """
    Para cada índice k, o índice j < k com o maior valor abaixo de
    pattern[k] e o com o menor valor acima (-1 quando não existe).
    """
    abaixo, acima = [], []
    for k, v in enumerate(pattern):
        lo, hi = -1, -1
        for j in range(k):
            w = pattern[j]
            if w < v and (lo < 0 or w > pattern[lo]):
                lo = j
            if w > v and (hi < 0 or w < pattern[hi]):
                hi = j
        abaixo.append(lo)
        acima.append(hi)
    return abaixo, acima


def occurrences(
    pattern: Sequence[int],
    host: Sequence[int],
    adjacency: FrozenSet[int] = frozenset(),
    left_anchor: bool = False,
    right_anchor: bool = False,
) -> Iterator[Tuple[int, ...]]:
    """Gera as cópias do padrão como tuplas de posições (base 0) do hospedeiro"""
    k, n = len(pattern), len(host)
    if k == 0:
        yield ()
        return
    if k > n:
        return

    abaixo, acima = _value_neighbours(pattern)
    pos = [0] * k

    def busca(i: int) -> Iterator[Tuple[int, ...]]:
        if i == k:
            yield tuple(pos)
            return
        if i == 0:
            candidatos = range(0, 1) if left_anchor else range(0, n - k + 1)
        elif i in adjacency:
            candidatos = range(pos[i - 1] + 1, min(pos[i - 1] + 2, n))
        else:
            candidatos = range(pos[i - 1] + 1, n - (k - i) + 1)
        lo, hi = abaixo[i], acima[i]
        for p in candidatos:
            if right_anchor and i == k - 1 and p != n - 1:
                continue
            v = host[p]
            if lo >= 0 and host[pos[lo]] > v:
                continue
            if hi >= 0 and host[pos[hi]] < v:
                continue
            pos[i] = p
            yield from busca(i + 1)

    yield from busca(0)


def embeds(
    pattern: Sequence[int],
    host: Sequence[int],
    adjacency: FrozenSet[int] = frozenset(),
    left_anchor: bool = False,
    right_anchor: bool = False,
) -> bool:
    for _ in occurrences(pattern, host, adjacency, left_anchor, right_anchor):
        return True
    return False


def contains(pattern: Sequence[int], host: Sequence[int]) -> bool:
    """True se alguma subsequência do hospedeiro é order isomorphic ao padrão"""
    require_nonempty(pattern, host)
    return embeds(pattern, host)


def contains_vincular(p: VincularPattern, host: Sequence[int]) -> bool:
    require_nonempty(host)
    return embeds(p.pattern, host, p.adjacency, p.left_anchor, p.right_anchor)


def avoids_barred(p: BarredPattern, host: Sequence[int]) -> bool:
    """
    Evita o padrão barrado quando toda cópia do redutor não barrado se
    estende a uma cópia do padrão completo.
    """
    require_nonempty(host)
    manter = [i - 1 for i in p.reduct_positions]
    estendidas = {
        tuple(ocorrencia[i] for i in manter) for ocorrencia in occurrences(p.pattern, host)
    }
    return all(copia in estendidas for copia in occurrences(p.reduct, host))

