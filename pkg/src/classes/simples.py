"""
Enumeração das simples de uma classe e cálculo da base do fecho por coroa.

Toda simples de comprimento n >= 4 contém uma simples de comprimento
n-1 ou n-2, então basta estender as simples já encontradas por um ou
dois pontos. Dois níveis vazios seguidos (a partir do 4) encerram a
busca com a garantia de que não há mais simples.
"""
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Set

from ..config import console, settings
from ..errors import ClassSpecError, SimplesError
from ..perms import Permutation, as_permutation, contains, format_permutation, is_simple
from .spec import ClassSpec


@dataclass
class SimpleSet:
    """
    Simples por comprimento; `complete` indica que a regra de parada
    disparou e `capped` que a busca parou por excesso de simples.
    """
    by_length: Dict[int, List[Permutation]] = field(default_factory=dict)
    complete: bool = False
    capped: bool = False

    @classmethod
    def from_permutations(cls, perms: Iterable, complete: bool = True) -> "SimpleSet":
        """Monta um conjunto a partir de uma lista explícita de simples"""
        por_tamanho: Dict[int, List[Permutation]] = {}
        for p in perms:
            p = as_permutation(p)
            if not is_simple(p):
                raise SimplesError(f"{p} não é simples")
            por_tamanho.setdefault(len(p), []).append(p)
        maior = max(por_tamanho, default=0)
        completo = {n: sorted(set(por_tamanho.get(n, []))) for n in range(1, maior + 1)}
        return cls(completo, complete)

    @property
    def max_length(self) -> int:
        """Maior comprimento com alguma simples (0 se vazio)"""
        return max((n for n, ps in self.by_length.items() if ps), default=0)

    @property
    def all(self) -> List[Permutation]:
        return [p for n in sorted(self.by_length) for p in self.by_length[n]]

    @property
    def long_simples(self) -> List[Permutation]:
        """Simples de comprimento >= 4 (as que entram no sistema além de 12 e 21)"""
        return [p for p in self.all if len(p) >= 4]

    def counts(self, ate: Optional[int] = None) -> List[int]:
        ate = ate or max(self.by_length, default=0)
        return [len(self.by_length.get(n, [])) for n in range(1, ate + 1)]

    def __contains__(self, pi) -> bool:
        pi = as_permutation(pi)
        return pi in self.by_length.get(len(pi), [])

    def require_complete(self):
        if self.capped:
            raise SimplesError(
                f"too many simple permutations ({len(self.all)} up to length {self.max_length}); "
                "raise PERMCLASS_MAX_SIMPLES"
            )
        if not self.complete:
            raise SimplesError(
                "class may contain infinitely many simple permutations; raise --max-simple-length"
            )

    def to_table(self) -> str:
        linhas = [f"{'n':>3}  {'#':>5}  simples"]
        for n in sorted(self.by_length):
            ps = self.by_length[n]
            linhas.append(f"{n:>3}  {len(ps):>5}  {' '.join(format_permutation(p) for p in ps)}")
        linhas.append(f"complete: {'yes' if self.complete else 'no'}")
        return "\n".join(linhas)


def _one_point_extensions(pi: Sequence[int]) -> Set[Permutation]:
    n = len(pi)
    resultado = set()
    for valor in range(1, n + 2):
        deslocado = [v + 1 if v >= valor else v for v in pi]
        for pos in range(n + 1):
            resultado.add(Permutation._trusted(deslocado[:pos] + [valor] + deslocado[pos:]))
    return resultado


def simples_avoiding(
    basis: Sequence[Sequence[int]],
    max_length: int,
    max_count: Optional[int] = None,
) -> SimpleSet:
    """
    Simples de Av(base) nível a nível até a regra de parada ou o limite.
    Com `max_count`, desiste assim que o total de simples o ultrapassa.
    """
    base = [as_permutation(b) for b in basis]

    def na_classe(pi: Permutation) -> bool:
        return not any(contains(b, pi) for b in base if len(b) <= len(pi))

    por_tamanho: Dict[int, List[Permutation]] = {}
    total = 0
    for n in range(1, max_length + 1):
        if n == 1:
            candidatos = {Permutation._trusted((1,))}
        elif n == 2:
            candidatos = {Permutation._trusted((1, 2)), Permutation._trusted((2, 1))}
        elif n == 3:
            candidatos = set()
        else:
            candidatos = set()
            for pi in por_tamanho.get(n - 1, []):
                candidatos |= _one_point_extensions(pi)
            for pi in por_tamanho.get(n - 2, []):
                for meio in _one_point_extensions(pi):
                    candidatos |= _one_point_extensions(meio)
        nivel = sorted(c for c in candidatos if is_simple(c) and na_classe(c))
        por_tamanho[n] = nivel
        total += len(nivel)
        console.log(f"   📏 comprimento {n}: {len(nivel)} simples")
        if max_count is not None and total > max_count:
            console.warn(f"mais de {max_count} simples até o comprimento {n}: busca interrompida")
            return SimpleSet(por_tamanho, complete=False, capped=True)
        if n >= 5 and not nivel and not por_tamanho[n - 1]:
            return SimpleSet(por_tamanho, complete=True)
    return SimpleSet(por_tamanho, complete=False)


def enumerate_simples(spec: ClassSpec, max_length: Optional[int] = None) -> SimpleSet:
    """Simples da classe da especificação (as condições laterais não entram)"""
    limite = max_length or spec.caps.max_simple_length
    console.log(f"🔎 Enumerando simples de {spec.label} até comprimento {limite}")
    return simples_avoiding(spec.basis_permutations, limite, settings.MAX_SIMPLES)


def is_wreath_closed(spec: ClassSpec) -> bool:
    """Uma classe é fechada por coroa sse todo elemento da base é simples"""
    return all(is_simple(b) for b in spec.basis_permutations)


def wreath_closure_basis(simples: SimpleSet, cap: Optional[int] = None) -> List[Permutation]:
    """
    Base de W(C): as simples minimais fora de C. Com simples de C até o
    comprimento k, basta examinar as simples de comprimento <= k+2.
    """
    simples.require_complete()
    limite = cap or settings.WREATH_BASIS_CAP
    alvo = simples.max_length + 2
    if alvo > limite:
        raise ClassSpecError(
            f"Base do fecho por coroa exige simples até o comprimento {alvo}, acima do limite {limite}"
        )
    todas = simples_avoiding([], alvo)
    fora = [p for p in todas.all if p not in simples]
    minimais = [
        p for p in fora
        if not any(q != p and len(q) < len(p) and contains(q, p) for q in fora)
    ]
    return sorted(minimais, key=lambda p: p.sort_key)
