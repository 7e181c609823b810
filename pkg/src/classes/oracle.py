"""
Oráculo de força bruta: conta membros da classe comprimento a comprimento.

Os membros de comprimento n da classe (que é hereditária) são obtidos
inserindo n em todas as posições dos membros de comprimento n-1; só as
condições laterais, que não são hereditárias, são checadas no fim.
"""
from typing import Dict, Iterator, List, Sequence

from ..errors import ClassSpecError
from ..perms import (
    Permutation,
    avoids_barred,
    contains,
    decompose,
    is_involution,
)
from ..properties import holds
from .spec import ClassSpec


def in_wreath_closure(basis: Sequence[Sequence[int]], pi: Sequence[int]) -> bool:
    """pi pertence a W(Av(base)): todo esqueleto da árvore de decomposição evita a base"""
    pendentes = [pi]
    while pendentes:
        atual = pendentes.pop()
        if len(atual) == 1:
            if any(len(b) == 1 for b in basis):
                return False
            continue
        esqueleto, filhos = decompose(atual)
        if any(contains(b, esqueleto) for b in basis if len(b) <= len(esqueleto)):
            return False
        pendentes.extend(filhos)
    return True


def in_base_class(spec: ClassSpec, pi: Sequence[int]) -> bool:
    """Pertinência ignorando condições laterais (a parte hereditária)"""
    base = spec.basis_permutations
    if spec.mode == "wreath_closure":
        return in_wreath_closure(base, pi)
    return not any(contains(b, pi) for b in base if len(b) <= len(pi))


def satisfies_conditions(spec: ClassSpec, pi: Sequence[int]) -> bool:
    condicoes = spec.conditions
    if condicoes.involution and not is_involution(pi):
        return False
    if not all(holds(p, pi) for p in condicoes.properties):
        return False
    return all(avoids_barred(b, pi) for b in condicoes.barred)


class Oracle:
    """Gera e memoriza os níveis da classe hereditária de uma especificação"""

    def __init__(self, spec: ClassSpec):
        self.spec = spec
        self._niveis: Dict[int, List[Permutation]] = {}

    def _checar_limite(self, n: int):
        if n < 1:
            raise ClassSpecError(f"Comprimento inválido para o oráculo: {n}")
        limite = self.spec.caps.max_oracle_length
        if n > limite:
            raise ClassSpecError(
                f"Comprimento {n} excede o limite do oráculo ({limite}); ajuste --max-oracle-length"
            )

    def level(self, n: int) -> List[Permutation]:
        """Membros de comprimento n da parte hereditária, em ordem lexicográfica"""
        self._checar_limite(n)
        if n in self._niveis:
            return self._niveis[n]
        if n == 1:
            anteriores = [Permutation._trusted(())]
        else:
            anteriores = self.level(n - 1)
        candidatos = set()
        for pi in anteriores:
            for pos in range(len(pi) + 1):
                candidatos.add(Permutation._trusted(pi[:pos] + (n,) + pi[pos:]))
        nivel = sorted(c for c in candidatos if in_base_class(self.spec, c))
        self._niveis[n] = nivel
        return nivel

    def members(self, n: int) -> Iterator[Permutation]:
        for pi in self.level(n):
            if satisfies_conditions(self.spec, pi):
                yield pi

    def count(self, n: int) -> int:
        return sum(1 for _ in self.members(n))

    def counts(self, ate: int) -> List[int]:
        """Contagens para n = 1..ate"""
        return [self.count(n) for n in range(1, ate + 1)]


def oracle_count(spec: ClassSpec, n: int) -> int:
    """Número de permutações de comprimento n na classe, por filtragem direta"""
    return Oracle(spec).count(n)
