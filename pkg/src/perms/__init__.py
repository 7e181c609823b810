"""Módulo de permutações: contenção, intervalos e decomposição por substituição"""
from .permutation import (
    EMPTY,
    Permutation,
    as_permutation,
    begins_with_rise,
    dumont_body,
    ends_with_rise,
    fixed_points,
    format_permutation,
    inverse,
    inversions,
    is_alternating,
    is_dumont1,
    is_even,
    is_involution,
    is_skew_indec,
    is_sum_indec,
    parse_permutation,
    require_nonempty,
    standardize,
)
from .patterns import (
    BarredPattern,
    VincularPattern,
    avoids_barred,
    contains,
    contains_vincular,
    embeds,
    format_barred,
    format_vincular,
    occurrences,
    parse_barred,
    parse_vincular,
)
from .decomposition import (
    decompose,
    inflate,
    inflate_lenient,
    is_simple,
    middle_greedy_321,
    proper_intervals,
    skew_components,
    sum_components,
)

__all__ = [
    # Tipos
    "Permutation",
    "VincularPattern",
    "BarredPattern",
    "EMPTY",

    # Texto
    "parse_permutation",
    "format_permutation",
    "as_permutation",
    "require_nonempty",
    "parse_vincular",
    "format_vincular",
    "parse_barred",
    "format_barred",

    # Contenção
    "contains",
    "contains_vincular",
    "avoids_barred",
    "embeds",
    "occurrences",

    # Estrutura
    "proper_intervals",
    "is_simple",
    "inflate",
    "inflate_lenient",
    "decompose",
    "middle_greedy_321",
    "skew_components",
    "sum_components",
    "standardize",

    # Verificações definicionais
    "inverse",
    "inversions",
    "is_involution",
    "is_alternating",
    "begins_with_rise",
    "ends_with_rise",
    "is_even",
    "is_dumont1",
    "dumont_body",
    "is_sum_indec",
    "is_skew_indec",
    "fixed_points",
]
