"""
Sistemas algébricos de funções geradoras e sua forma textual canônica.

Cada equação é um polinômio esparso: monômio -> coeficiente inteiro,
com monômio = (expoente de x, incógnitas, parâmetros), as duas últimas
como tuplas ordenadas de índices (repetição = potência).
"""
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Optional, Set, Tuple

from ..errors import UniverseError
from ..properties import Profile, Property, PropertyUniverse, avoid_classical

Monomial = Tuple[int, Tuple[int, ...], Tuple[int, ...]]
Polynomial = Dict[Monomial, int]

PLAIN = "plain"
INVOLUTION = "involution"


@dataclass(frozen=True)
class TargetQuery:
    """Q: as propriedades exigidas; f_Q soma as incógnitas R com Q ⊆ R"""
    required: FrozenSet[Property] = frozenset()

    @classmethod
    def from_basis(cls, basis: Iterable, extra: Iterable[Property] = ()) -> "TargetQuery":
        return cls(frozenset([avoid_classical(b) for b in basis] + list(extra)))

    def validate(self, universe: PropertyUniverse):
        fora = [p.spec for p in self.required if p not in universe]
        if fora:
            raise UniverseError(f"Consulta fora do universo: {', '.join(sorted(fora))}")

    def matches(self, universe: PropertyUniverse, profile: Profile) -> bool:
        return all(universe.has(profile, p) for p in self.required)

    def __str__(self) -> str:
        return "{" + ",".join(sorted(p.spec for p in self.required)) + "}"


@dataclass
class AlgebraicSystem:
    """
    Sistema próprio g_R = RHS_R(x, g) (modo plain) ou h_R = RHS_R(x, h, p)
    (modo involution). Em modo involution `parameters` são as incógnitas
    de `companion`, o sistema plain cujas soluções em x^2 dão os p_S.
    """
    mode: str
    universe: PropertyUniverse
    unknowns: List[Profile]
    equations: List[Polynomial]
    parameters: List[Profile] = field(default_factory=list)
    companion: Optional["AlgebraicSystem"] = None

    @property
    def symbol(self) -> str:
        return "h" if self.mode == INVOLUTION else "g"

    def __len__(self) -> int:
        return len(self.unknowns)

    @property
    def monomial_count(self) -> int:
        return sum(len(eq) for eq in self.equations)

    def index_of(self, profile: Profile) -> int:
        return self.unknowns.index(profile)

    def unknown_name(self, i: int, symbol: Optional[str] = None) -> str:
        return f"{symbol or self.symbol}{self.universe.label(self.unknowns[i])}"

    def parameter_name(self, i: int) -> str:
        return f"p{self.universe.label(self.parameters[i])}"

    def target_indices(self, query: TargetQuery) -> List[int]:
        query.validate(self.universe)
        return [i for i, r in enumerate(self.unknowns) if query.matches(self.universe, r)]

    def dependencies(self, i: int) -> Set[int]:
        return {j for (_, incs, _) in self.equations[i] for j in incs}

    # -- poda -----------------------------------------------------------------

    def pruned(self, query: TargetQuery) -> "AlgebraicSystem":
        """Mantém as incógnitas R ⊇ Q e tudo de que suas equações dependem"""
        manter: Set[int] = set()
        pendentes = self.target_indices(query)
        while pendentes:
            i = pendentes.pop()
            if i in manter:
                continue
            manter.add(i)
            pendentes.extend(self.dependencies(i) - manter)
        ordem = sorted(manter)
        novo = {antigo: novo for novo, antigo in enumerate(ordem)}
        equacoes = []
        for i in ordem:
            eq: Polynomial = {}
            for (e, incs, params), c in self.equations[i].items():
                eq[(e, tuple(sorted(novo[j] for j in incs)), params)] = c
            equacoes.append(eq)
        return AlgebraicSystem(
            mode=self.mode,
            universe=self.universe,
            unknowns=[self.unknowns[i] for i in ordem],
            equations=equacoes,
            parameters=self.parameters,
            companion=self.companion,
        )

    # -- texto ------------------------------------------------------------------

    def _term_text(self, monomio: Monomial, coef: int, symbol: str, x_scale: int) -> str:
        e, incs, params = monomio
        fatores = []
        if e:
            expoente = e * x_scale
            fatores.append("x" if expoente == 1 else f"x^{expoente}")
        for i, k in sorted(Counter(params).items()):
            nome = self.parameter_name(i)
            fatores.append(nome if k == 1 else f"{nome}^{k}")
        for i, k in sorted(Counter(incs).items()):
            nome = self.unknown_name(i, symbol)
            fatores.append(nome if k == 1 else f"{nome}^{k}")
        corpo = "*".join(fatores) if fatores else "1"
        if abs(coef) != 1:
            corpo = f"{abs(coef)}*{corpo}" if fatores else str(abs(coef))
        return corpo

    def equation_text(self, i: int, symbol: Optional[str] = None, x_scale: int = 1) -> str:
        symbol = symbol or self.symbol
        eq = self.equations[i]
        termos = sorted(eq.items(), key=lambda t: (len(t[0][1]) + len(t[0][2]), t[0]))
        partes = []
        for monomio, coef in termos:
            texto = self._term_text(monomio, coef, symbol, x_scale)
            if not partes:
                partes.append(texto if coef > 0 else f"-{texto}")
            else:
                partes.append(f"+ {texto}" if coef > 0 else f"- {texto}")
        lado_direito = " ".join(partes) if partes else "0"
        return f"{self.unknown_name(i, symbol)} = {lado_direito}"

    def to_text(self) -> str:
        """Uma equação por linha; em modo involution seguem as relações dos p"""
        linhas = [self.equation_text(i) for i in range(len(self.unknowns))]
        if self.mode == INVOLUTION and self.companion is not None:
            linhas.append("")
            linhas.extend(
                self.companion.equation_text(i, symbol="p", x_scale=2)
                for i in range(len(self.companion.unknowns))
            )
        return "\n".join(linhas)
