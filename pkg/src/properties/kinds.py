"""
Propriedades de permutações (conjuntos de permutações) e suas
verificações diretas, usadas como verdade de referência nos perfis.
"""
from dataclasses import dataclass, field
from enum import Enum
from typing import FrozenSet, Optional, Tuple

from ..errors import UniverseError
from ..perms import (
    Permutation,
    VincularPattern,
    begins_with_rise,
    dumont_body,
    embeds,
    ends_with_rise,
    format_permutation,
    format_vincular,
    inverse,
    is_alternating,
    is_dumont1,
    is_even,
    is_skew_indec,
    is_sum_indec,
    parse_permutation,
    parse_vincular,
)


class PropertyKind(Enum):
    """Famílias de propriedades, na ordem canônica do universo"""
    SUM_INDEC = "sum_indec"
    SKEW_INDEC = "skew_indec"
    AVOID_CLASSICAL = "avoid"
    AVOID_VINCULAR = "avoid_vincular"
    ALTERNATING = "alternating"
    BEGINS_RISE = "begins_rise"
    ENDS_RISE = "ends_rise"
    IS_SINGLETON = "singleton"
    EVEN_PERM = "even"
    EVEN_LENGTH = "even_length"
    DUMONT1 = "dumont1"
    DUMONT1_BODY = "dumont1_body"
    DUMONT1_FLIPPED = "dumont1_flipped"
    LAST_VALUE_EVEN = "last_value_even"
    INVERSE_OF = "inverse"


_ORDEM_FAMILIA = {kind: i for i, kind in enumerate(PropertyKind)}

# famílias que coincidem com a própria inversa
SELF_INVERSE = frozenset({
    PropertyKind.SUM_INDEC,
    PropertyKind.SKEW_INDEC,
    PropertyKind.IS_SINGLETON,
    PropertyKind.EVEN_PERM,
    PropertyKind.EVEN_LENGTH,
})


@dataclass(frozen=True)
class Property:
    """
    Uma propriedade do universo.

    Campos de padrão só valem para AVOID_*; `inner` só para INVERSE_OF.
    Use os construtores abaixo em vez de instanciar diretamente.
    """
    kind: PropertyKind
    pattern: Optional[Permutation] = None
    adjacency: FrozenSet[int] = field(default_factory=frozenset)
    left_anchor: bool = False
    right_anchor: bool = False
    inner: Optional["Property"] = None

    @property
    def spec(self) -> str:
        """Texto de especificação, o mesmo aceito por parse_property"""
        if self.kind is PropertyKind.AVOID_CLASSICAL:
            return f"avoid:{format_permutation(self.pattern)}"
        if self.kind is PropertyKind.AVOID_VINCULAR:
            return f"avoid_vincular:{format_vincular(self.vincular)}"
        if self.kind is PropertyKind.INVERSE_OF:
            return f"inverse({self.inner.spec})"
        return self.kind.value

    @property
    def vincular(self) -> VincularPattern:
        return VincularPattern(self.pattern, self.adjacency, self.left_anchor, self.right_anchor)

    @property
    def sort_key(self) -> Tuple:
        padrao = tuple(self.pattern) if self.pattern is not None else ()
        interno = self.inner.sort_key if self.inner is not None else ()
        return (
            _ORDEM_FAMILIA[self.kind],
            len(padrao),
            padrao,
            tuple(sorted(self.adjacency)),
            self.left_anchor,
            self.right_anchor,
            interno,
        )

    @property
    def is_pattern_avoidance(self) -> bool:
        return self.kind in (PropertyKind.AVOID_CLASSICAL, PropertyKind.AVOID_VINCULAR)

    @property
    def never_holds(self) -> bool:
        """
        Evitar um padrão de comprimento 1 é impossível para hospedeiros não
        vazios, exceto com as duas âncoras: ^1$ só está contido em 1.
        """
        return (
            self.is_pattern_avoidance
            and len(self.pattern) == 1
            and not (self.left_anchor and self.right_anchor)
        )

    def __str__(self) -> str:
        return self.spec

    def __repr__(self) -> str:
        return f"Property({self.spec!r})"


# ---------------------------------------------------------------------------
# Construtores
# ---------------------------------------------------------------------------

def simple_property(kind: PropertyKind) -> Property:
    if kind in (PropertyKind.AVOID_CLASSICAL, PropertyKind.AVOID_VINCULAR, PropertyKind.INVERSE_OF):
        raise UniverseError(f"A família {kind.value} exige argumentos")
    return Property(kind)


def avoid_classical(pattern) -> Property:
    if isinstance(pattern, str):
        pattern = parse_permutation(pattern)
    return Property(PropertyKind.AVOID_CLASSICAL, Permutation(pattern))


def avoid_vincular(p) -> Property:
    """Normaliza: sem adjacências nem âncoras vira AVOID_CLASSICAL"""
    if isinstance(p, str):
        p = parse_vincular(p)
    if p.is_classical:
        return avoid_classical(p.pattern)
    return Property(
        PropertyKind.AVOID_VINCULAR,
        p.pattern,
        frozenset(p.adjacency),
        p.left_anchor,
        p.right_anchor,
    )


def inverse_of(p: Property) -> Property:
    """P^-1 = {pi^-1 : pi em P}, normalizada"""
    if p.kind is PropertyKind.INVERSE_OF:
        return p.inner
    if p.kind in SELF_INVERSE:
        return p
    if p.kind is PropertyKind.AVOID_CLASSICAL:
        return avoid_classical(inverse(p.pattern))
    return Property(PropertyKind.INVERSE_OF, inner=p)


SUM_INDEC = Property(PropertyKind.SUM_INDEC)
SKEW_INDEC = Property(PropertyKind.SKEW_INDEC)
ALTERNATING = Property(PropertyKind.ALTERNATING)
BEGINS_RISE = Property(PropertyKind.BEGINS_RISE)
ENDS_RISE = Property(PropertyKind.ENDS_RISE)
IS_SINGLETON = Property(PropertyKind.IS_SINGLETON)
EVEN_PERM = Property(PropertyKind.EVEN_PERM)
EVEN_LENGTH = Property(PropertyKind.EVEN_LENGTH)
DUMONT1 = Property(PropertyKind.DUMONT1)
DUMONT1_BODY = Property(PropertyKind.DUMONT1_BODY)
DUMONT1_FLIPPED = Property(PropertyKind.DUMONT1_FLIPPED)
LAST_VALUE_EVEN = Property(PropertyKind.LAST_VALUE_EVEN)


def parse_property(texto: str) -> Property:
    """
    Converte um texto de especificação ("avoid:132", "alternating", ...)
    em propriedade. "involution" e "avoid_barred:" não passam por aqui.
    """
    bruto = texto.strip()
    if bruto.startswith("inverse(") and bruto.endswith(")"):
        return inverse_of(parse_property(bruto[len("inverse("):-1]))
    if bruto.startswith("avoid:"):
        return avoid_classical(bruto[len("avoid:"):])
    if bruto.startswith("avoid_vincular:"):
        return avoid_vincular(bruto[len("avoid_vincular:"):])
    if bruto.startswith("avoid_barred:"):
        raise UniverseError(
            f"Padrões barrados só são suportados pelo oráculo, não pelo sistema: '{texto}'"
        )
    if bruto == "involution":
        raise UniverseError("'involution' é tratada pelo construtor do sistema de involuções")
    for kind in PropertyKind:
        if bruto == kind.value and kind not in (
            PropertyKind.AVOID_CLASSICAL,
            PropertyKind.AVOID_VINCULAR,
            PropertyKind.INVERSE_OF,
        ):
            return Property(kind)
    raise UniverseError(f"Propriedade desconhecida: '{texto}'")


# ---------------------------------------------------------------------------
# Verificação direta
# ---------------------------------------------------------------------------

def holds(p: Property, pi) -> bool:
    """pi satisfaz p? Checagem definicional, sem usar transferência"""
    kind = p.kind
    if kind is PropertyKind.SUM_INDEC:
        return is_sum_indec(pi)
    if kind is PropertyKind.SKEW_INDEC:
        return is_skew_indec(pi)
    if kind is PropertyKind.AVOID_CLASSICAL:
        return not embeds(p.pattern, pi)
    if kind is PropertyKind.AVOID_VINCULAR:
        return not embeds(p.pattern, pi, p.adjacency, p.left_anchor, p.right_anchor)
    if kind is PropertyKind.ALTERNATING:
        return is_alternating(pi)
    if kind is PropertyKind.BEGINS_RISE:
        return begins_with_rise(pi)
    if kind is PropertyKind.ENDS_RISE:
        return ends_with_rise(pi)
    if kind is PropertyKind.IS_SINGLETON:
        return len(pi) == 1
    if kind is PropertyKind.EVEN_PERM:
        return is_even(pi)
    if kind is PropertyKind.EVEN_LENGTH:
        return len(pi) % 2 == 0
    if kind is PropertyKind.DUMONT1:
        return is_dumont1(pi)
    if kind is PropertyKind.DUMONT1_BODY:
        return dumont_body(pi)
    if kind is PropertyKind.DUMONT1_FLIPPED:
        return dumont_body(pi, flipped=True)
    if kind is PropertyKind.LAST_VALUE_EVEN:
        return pi[-1] % 2 == 0
    if kind is PropertyKind.INVERSE_OF:
        return holds(p.inner, inverse(pi))
    raise UniverseError(f"Família sem verificação: {kind}")
