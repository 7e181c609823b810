"""
Universos de propriedades, perfis e a transferência memoizada.
"""
import threading
from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from ..errors import UniverseError
from ..perms import BarredPattern, Permutation, as_permutation, require_nonempty
from .kinds import SKEW_INDEC, SUM_INDEC, Property, holds, inverse_of, parse_property
from .rules import auxiliaries, dependencies, evaluate


@dataclass(frozen=True)
class Profile:
    """Subconjunto do universo como bitset (bit i = i-ésima propriedade)"""
    bits: int

    def __contains__(self, indice: int) -> bool:
        return bool(self.bits >> indice & 1)

    def __len__(self) -> int:
        return bin(self.bits).count("1")


class PropertyUniverse:
    """
    Conjunto finito e ordenado de propriedades.

    A ordem canônica é família, comprimento do padrão e ordem
    lexicográfica. `induced` guarda, para cada propriedade pedida, as
    auxiliares que ela trouxe ao fecho.
    """

    def __init__(
        self,
        properties: Iterable[Property],
        induced: Optional[Dict[Property, Tuple[Property, ...]]] = None,
    ):
        self.properties: Tuple[Property, ...] = tuple(
            sorted(set(properties), key=lambda p: p.sort_key)
        )
        self.induced: Dict[Property, Tuple[Property, ...]] = dict(induced or {})
        self._indice = {p: i for i, p in enumerate(self.properties)}
        self._transfer_memo: Dict[Tuple, Profile] = {}
        self._lock = threading.Lock()
        self._inversos: Optional[Tuple[int, ...]] = None

    # -- coleção ------------------------------------------------------------

    def __len__(self) -> int:
        return len(self.properties)

    def __iter__(self) -> Iterator[Property]:
        return iter(self.properties)

    def __contains__(self, p: Property) -> bool:
        return p in self._indice

    def __eq__(self, other) -> bool:
        return isinstance(other, PropertyUniverse) and self.properties == other.properties

    def __hash__(self) -> int:
        return hash(self.properties)

    def __repr__(self) -> str:
        return f"PropertyUniverse({[p.spec for p in self.properties]})"

    def index(self, p: Property) -> int:
        try:
            return self._indice[p]
        except KeyError:
            raise UniverseError(f"Propriedade {p} fora do universo") from None

    # -- perfis ---------------------------------------------------------------

    def has(self, profile: Profile, p: Property) -> bool:
        if p.never_holds and p not in self._indice:
            return False
        return self.index(p) in profile

    def members(self, profile: Profile) -> List[Property]:
        return [p for i, p in enumerate(self.properties) if i in profile]

    def from_properties(self, props: Iterable[Property]) -> Profile:
        bits = 0
        for p in props:
            bits |= 1 << self.index(p)
        return Profile(bits)

    def label(self, profile: Profile) -> str:
        """Perfil como "{sum_indec,skew_indec}", em ordem canônica"""
        return "{" + ",".join(p.spec for p in self.members(profile)) + "}"

    def profile_key(self, profile: Profile) -> Tuple:
        """Ordena perfis maiores primeiro, depois pelos índices dos membros"""
        return (-len(profile), tuple(i for i in range(len(self.properties)) if i in profile))

    @property
    def is_inverse_closed(self) -> bool:
        return all(inverse_of(p) in self._indice for p in self.properties)

    def profile(self, pi) -> Profile:
        """Perfil por verificação direta de cada propriedade"""
        pi = as_permutation(pi)
        require_nonempty(pi)
        bits = 0
        for i, p in enumerate(self.properties):
            if holds(p, pi):
                bits |= 1 << i
        return Profile(bits)

    # -- transferência ----------------------------------------------------------

    def transfer(self, sigma: Sequence[int], children: Sequence[Profile]) -> Profile:
        """Perfil de sigma[alpha_1, ..., alpha_m] a partir dos perfis dos filhos"""
        sigma = as_permutation(sigma)
        require_nonempty(sigma)
        if len(children) != len(sigma):
            raise UniverseError(
                f"Transferência por {sigma} exige {len(sigma)} perfis (recebidos: {len(children)})"
            )
        if len(sigma) == 1:
            return children[0]

        chave = (tuple(sigma), tuple(c.bits for c in children))
        resultado = self._transfer_memo.get(chave)
        if resultado is not None:
            return resultado

        def has(i: int, q: Property) -> bool:
            if q.never_holds:
                return False
            indice = self._indice.get(q)
            if indice is None:
                raise UniverseError(
                    f"Universo não é query-complete para o esqueleto {sigma}: falta {q}"
                )
            return indice in children[i]

        bits = 0
        for i, p in enumerate(self.properties):
            if evaluate(p, sigma, has):
                bits |= 1 << i
        resultado = Profile(bits)
        with self._lock:
            self._transfer_memo.setdefault(chave, resultado)
        return resultado

    def invert_profile(self, profile: Profile) -> Profile:
        """{P^-1 : P em R}; exige universo fechado por inversão"""
        if self._inversos is None:
            if not self.is_inverse_closed:
                faltando = [
                    inverse_of(p).spec for p in self.properties if inverse_of(p) not in self._indice
                ]
                raise UniverseError(
                    f"Universo não é fechado por inversão (faltam: {', '.join(faltando)})"
                )
            self._inversos = tuple(self._indice[inverse_of(p)] for p in self.properties)
        bits = 0
        for i, j in enumerate(self._inversos):
            if i in profile:
                bits |= 1 << j
        return Profile(bits)


# ---------------------------------------------------------------------------
# Fecho
# ---------------------------------------------------------------------------

def _normalize_requested(requested: Iterable) -> List[Property]:
    resultado = []
    for item in requested:
        if isinstance(item, BarredPattern):
            raise UniverseError(
                f"Padrão barrado {item} não tem regra de transferência (suportado só no oráculo)"
            )
        if isinstance(item, str):
            item = parse_property(item)
        resultado.append(item)
    return resultado


def _closure(
    iniciais: Iterable[Property],
    skeletons: Optional[Sequence[Permutation]],
    inverse_closed: bool,
) -> set:
    vistos = set()
    pendentes = list(iniciais)
    while pendentes:
        p = pendentes.pop()
        if p in vistos:
            continue
        vistos.add(p)
        if skeletons is None:
            proximos = set(auxiliaries(p))
        else:
            proximos = set()
            for sigma in skeletons:
                proximos |= dependencies(p, sigma)
        if inverse_closed:
            proximos.add(inverse_of(p))
        pendentes.extend(q for q in proximos if q not in vistos)
    return vistos


def close_universe(
    requested: Iterable = (),
    skeletons: Optional[Iterable] = None,
    inverse_closed: bool = False,
) -> PropertyUniverse:
    """
    Menor universo com as propriedades pedidas, sum_indec e skew_indec.

    Sem `skeletons`, aplica o fecho completo de cada família (todos os
    delta <= beta, BR/ER/{1} para alternating, e assim por diante). Com
    uma lista de esqueletos, fecha apenas pelas consultas que as regras
    de transferência fazem sobre eles; o universo resultante é
    query-complete para esses esqueletos.
    """
    pedidas = _normalize_requested(requested)
    esqueletos = None
    if skeletons is not None:
        esqueletos = sorted({as_permutation(s) for s in skeletons}, key=lambda s: s.sort_key)

    todas = _closure(pedidas + [SUM_INDEC, SKEW_INDEC], esqueletos, inverse_closed)
    induced = {
        p: tuple(sorted(_closure([p], esqueletos, inverse_closed) - {p}, key=lambda q: q.sort_key))
        for p in pedidas
    }
    return PropertyUniverse(todas, induced)


# ---------------------------------------------------------------------------
# Atalhos no formato das operações
# ---------------------------------------------------------------------------

def profile(pi, universe: PropertyUniverse) -> Profile:
    return universe.profile(pi)


def transfer(sigma, children: Sequence[Profile], universe: PropertyUniverse) -> Profile:
    return universe.transfer(sigma, children)


def invert_profile(r: Profile, universe: PropertyUniverse) -> Profile:
    return universe.invert_profile(r)
