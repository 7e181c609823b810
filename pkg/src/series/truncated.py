"""
Séries de potências truncadas com coeficientes inteiros exatos.
"""
from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

from ..errors import SolverError


@dataclass(frozen=True)
class TruncatedSeries:
    """sum_{k=0}^{order} c_k x^k; operações truncam na menor ordem envolvida"""
    coefficients: Tuple[int, ...]

    def __post_init__(self):
        if not self.coefficients:
            raise SolverError("Série truncada precisa de ao menos o coeficiente 0")

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls((0,) * (order + 1))

    @classmethod
    def constant(cls, valor: int, order: int) -> "TruncatedSeries":
        return cls((valor,) + (0,) * order)

    @classmethod
    def monomial(cls, expoente: int, order: int, coef: int = 1) -> "TruncatedSeries":
        coefs = [0] * (order + 1)
        if expoente <= order:
            coefs[expoente] = coef
        return cls(tuple(coefs))

    @classmethod
    def from_sequence(cls, valores: Sequence[int], constant: int = 0) -> "TruncatedSeries":
        """Série com coeficientes x^1, x^2, ... dados (como a sequência impressa)"""
        return cls((constant,) + tuple(valores))

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, k: int) -> int:
        return self.coefficients[k] if 0 <= k <= self.order else 0

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise SolverError(f"Não é possível estender a série de ordem {self.order} até {order}")
        return TruncatedSeries(self.coefficients[:order + 1])

    @property
    def valuation(self) -> int:
        """Menor k com c_k != 0 (order + 1 se a série é nula)"""
        for k, c in enumerate(self.coefficients):
            if c:
                return k
        return self.order + 1

    def is_zero(self) -> bool:
        return not any(self.coefficients)

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = min(self.order, other.order)
        return TruncatedSeries(tuple(self[k] + other[k] for k in range(n + 1)))

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(tuple(-c for c in self.coefficients))

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self + (-other)

    def scale(self, fator: int) -> "TruncatedSeries":
        return TruncatedSeries(tuple(fator * c for c in self.coefficients))

    def shift(self, expoente: int) -> "TruncatedSeries":
        """Multiplica por x^expoente mantendo a ordem"""
        if expoente == 0:
            return self
        coefs = (0,) * expoente + self.coefficients[:max(0, self.order + 1 - expoente)]
        return TruncatedSeries(coefs[:self.order + 1])

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = min(self.order, other.order)
        a, b = self.coefficients, other.coefficients
        resultado: List[int] = [0] * (n + 1)
        for i in range(n + 1):
            ai = a[i]
            if not ai:
                continue
            for j in range(n + 1 - i):
                bj = b[j]
                if bj:
                    resultado[i + j] += ai * bj
        return TruncatedSeries(tuple(resultado))

    def __pow__(self, expoente: int) -> "TruncatedSeries":
        resultado = TruncatedSeries.constant(1, self.order)
        base = self
        while expoente:
            if expoente & 1:
                resultado = resultado * base
            base = base * base
            expoente >>= 1
        return resultado

    def sequence(self, start: int = 1) -> List[int]:
        """Coeficientes a partir de x^start"""
        return list(self.coefficients[start:])

    def __str__(self) -> str:
        """Coeficientes de x^1 em diante: "1, 2, 6, 22" """
        return ", ".join(str(c) for c in self.coefficients[1:])


def substitute_x_squared(s: TruncatedSeries) -> TruncatedSeries:
    """s(x^2): coeficiente de x^{2k} é o de x^k; ordem 2N"""
    coefs = [0] * (2 * s.order + 1)
    for k, c in enumerate(s.coefficients):
        coefs[2 * k] = c
    return TruncatedSeries(tuple(coefs))


def series_sum(series: Iterable[TruncatedSeries], order: int) -> TruncatedSeries:
    total = TruncatedSeries.zero(order)
    for s in series:
        total = total + s
    return total
