"""Motor de propriedades: universos query-complete, perfis e transferência"""
from .kinds import (
    ALTERNATING,
    BEGINS_RISE,
    DUMONT1,
    DUMONT1_BODY,
    DUMONT1_FLIPPED,
    ENDS_RISE,
    EVEN_LENGTH,
    EVEN_PERM,
    IS_SINGLETON,
    LAST_VALUE_EVEN,
    SKEW_INDEC,
    SUM_INDEC,
    Property,
    PropertyKind,
    avoid_classical,
    avoid_vincular,
    holds,
    inverse_of,
    parse_property,
)
from .splittings import avoidance_clauses, lenient_splittings
from .universe import (
    Profile,
    PropertyUniverse,
    close_universe,
    invert_profile,
    profile,
    transfer,
)

__all__ = [
    # Tipos
    "Property",
    "PropertyKind",
    "PropertyUniverse",
    "Profile",

    # Propriedades prontas
    "SUM_INDEC",
    "SKEW_INDEC",
    "ALTERNATING",
    "BEGINS_RISE",
    "ENDS_RISE",
    "IS_SINGLETON",
    "EVEN_PERM",
    "EVEN_LENGTH",
    "DUMONT1",
    "DUMONT1_BODY",
    "DUMONT1_FLIPPED",
    "LAST_VALUE_EVEN",

    # Construtores
    "avoid_classical",
    "avoid_vincular",
    "inverse_of",
    "parse_property",

    # Operações
    "holds",
    "close_universe",
    "profile",
    "transfer",
    "invert_profile",
    "lenient_splittings",
    "avoidance_clauses",
]
