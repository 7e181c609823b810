"""Propriedades, universos query-complete, perfis e transferência"""
from itertools import permutations, product

import pytest

from src.errors import UniverseError
from src.perms import (
    Permutation,
    contains,
    inflate,
    inverse,
    parse_barred,
    parse_permutation,
    standardize,
)
from src.properties import (
    ALTERNATING,
    BEGINS_RISE,
    ENDS_RISE,
    EVEN_LENGTH,
    EVEN_PERM,
    IS_SINGLETON,
    SKEW_INDEC,
    SUM_INDEC,
    avoid_classical,
    avoidance_clauses,
    close_universe,
    holds,
    inverse_of,
    invert_profile,
    lenient_splittings,
    parse_property,
    profile,
    transfer,
)


def P(texto):
    return parse_permutation(texto)


def ate(n):
    return [Permutation(p) for k in range(1, n + 1) for p in permutations(range(1, k + 1))]


class TestPropriedades:
    @pytest.mark.parametrize("texto", [
        "alternating", "even", "dumont1", "avoid:132", "avoid_vincular:1-32",
        "inverse(alternating)", "last_value_even",
    ])
    def test_texto_ida_e_volta(self, texto):
        assert parse_property(texto).spec == texto

    def test_vincular_classico_normalizado(self):
        assert parse_property("avoid_vincular:1-3-2") == avoid_classical("132")

    def test_rejeicoes(self):
        with pytest.raises(UniverseError):
            parse_property("avoid_barred:[3]12")
        with pytest.raises(UniverseError):
            parse_property("involution")
        with pytest.raises(UniverseError):
            parse_property("derangement")

    def test_padroes_de_uma_entrada(self):
        assert parse_property("avoid:1").never_holds
        assert parse_property("avoid_vincular:^1").never_holds
        assert parse_property("avoid_vincular:1$").never_holds
        ancorado = parse_property("avoid_vincular:^1$")
        assert not ancorado.never_holds
        assert not holds(ancorado, P("1"))
        assert holds(ancorado, P("21"))

    def test_inversas(self):
        assert inverse_of(avoid_classical("231")) == avoid_classical("312")
        assert inverse_of(avoid_classical("132")) == avoid_classical("132")
        assert inverse_of(EVEN_PERM) is EVEN_PERM
        assert inverse_of(inverse_of(ALTERNATING)) == ALTERNATING

    def test_inversa_de_alternante(self):
        p = inverse_of(ALTERNATING)
        # 2413^-1 = 3142, alternante; 1432^-1 = 1432, não alternante
        assert holds(p, P("2413"))
        assert not holds(p, P("1432"))
        assert holds(p, P("132")) == holds(ALTERNATING, inverse(P("132")))


class TestDivisoes:
    def test_divisoes_de_132_sobre_12(self):
        assert list(lenient_splittings(P("132"), P("12"))) == [(0, 0, 3), (0, 1, 3), (0, 3, 3)]

    def test_clausulas(self):
        clausulas = avoidance_clauses(avoid_classical("132"), P("12"))
        assert len(clausulas) == 3
        pecas = {q.spec for c in clausulas for _, q in c}
        assert pecas == {"avoid:1", "avoid:21", "avoid:132"}

    def test_divisao_exige_propriedade_de_avoidance(self):
        with pytest.raises(UniverseError):
            avoidance_clauses(ALTERNATING, P("12"))

    @pytest.mark.parametrize("sigma", ["12", "21", "231", "2413"])
    def test_divisoes_cobrem_toda_contencao(self, sigma):
        sigma = P(sigma)
        filhos_possiveis = ate(3 if len(sigma) == 2 else 2)
        for filhos in product(filhos_possiveis, repeat=len(sigma)):
            hospedeiro = inflate(sigma, filhos)
            for gamma in ate(4):
                por_divisao = any(
                    all(
                        contains(standardize(gamma[c[i]:c[i + 1]]), filhos[i])
                        for i in range(len(sigma))
                        if c[i + 1] > c[i]
                    )
                    for c in lenient_splittings(gamma, sigma)
                )
                assert por_divisao == contains(gamma, hospedeiro)


class TestFecho:
    def test_fecho_completo_de_132(self):
        u = close_universe(["avoid:132"])
        assert [p.spec for p in u] == [
            "sum_indec", "skew_indec", "avoid:1", "avoid:12", "avoid:21", "avoid:132",
        ]

    def test_fecho_refinado_por_esqueletos(self):
        u = close_universe(["avoid:132"], skeletons=["12", "21"])
        assert [p.spec for p in u] == ["sum_indec", "skew_indec", "avoid:1", "avoid:21", "avoid:132"]

    def test_fecho_alternante(self):
        u = close_universe([ALTERNATING])
        assert set(u) == {SUM_INDEC, SKEW_INDEC, ALTERNATING, BEGINS_RISE, ENDS_RISE, IS_SINGLETON}

    def test_fecho_par(self):
        assert set(close_universe(["even"])) == {SUM_INDEC, SKEW_INDEC, EVEN_PERM, EVEN_LENGTH}

    def test_idempotente(self):
        u = close_universe(["avoid:2413", "alternating", "avoid_vincular:1-32"])
        assert close_universe(list(u)) == u

    def test_fechado_por_inversao(self):
        u = close_universe(["avoid:231", "alternating"], inverse_closed=True)
        assert u.is_inverse_closed
        assert avoid_classical("312") in u
        assert inverse_of(ALTERNATING) in u

    def test_padrao_barrado_rejeitado(self):
        with pytest.raises(UniverseError):
            close_universe([parse_barred("[3]12")])

    def test_propriedades_induzidas(self):
        u = close_universe(["alternating"])
        assert set(u.induced[ALTERNATING]) == {BEGINS_RISE, ENDS_RISE, IS_SINGLETON}


class TestPerfis:
    def test_perfil_do_um(self):
        u = close_universe(["alternating"])
        assert u.label(profile(P("1"), u)) == "{sum_indec,skew_indec,alternating,singleton}"

    def test_perfil_em_ordem_canonica(self):
        u = close_universe(["avoid:132"])
        assert u.label(u.profile(P("21"))) == "{sum_indec,avoid:12,avoid:132}"

    def test_transferencia_de_um_esqueleto_unitario(self):
        u = close_universe(["avoid:132"])
        r = u.profile(P("231"))
        assert transfer(P("1"), [r], u) == r

    def test_ancora_a_esquerda_sobre_soma(self):
        u = close_universe(["avoid_vincular:^12"])
        r = u.transfer(P("12"), [u.profile(P("21")), u.profile(P("1"))])
        assert u.has(r, parse_property("avoid_vincular:^12"))
        assert r == u.profile(P("213"))

    def test_ancora_a_direita_sobre_soma_torta(self):
        u = close_universe(["avoid_vincular:21$"])
        for filhos in [("1", "12"), ("12", "1"), ("1", "1"), ("21", "21")]:
            pi = inflate(P("21"), [P(f) for f in filhos])
            assert u.transfer(P("21"), [u.profile(P(f)) for f in filhos]) == u.profile(pi)

    def test_aridade(self):
        u = close_universe(["avoid:132"])
        with pytest.raises(UniverseError):
            u.transfer(P("12"), [u.profile(P("1"))])

    def test_universo_refinado_nao_serve_para_outro_esqueleto(self):
        u = close_universe(["avoid:132"], skeletons=["21"])
        um = u.profile(P("1"))
        with pytest.raises(UniverseError, match="query-complete"):
            u.transfer(P("12"), [um, um])

    def test_inverter_perfil(self):
        u = close_universe(["avoid:231", "alternating", "dumont1"], inverse_closed=True)
        for pi in ate(5):
            assert invert_profile(u.profile(pi), u) == u.profile(inverse(pi))

    def test_inverter_perfil_exige_fecho_por_inversao(self):
        u = close_universe(["avoid:231"])
        with pytest.raises(UniverseError):
            u.invert_profile(u.profile(P("1")))


FAMILIAS = [
    ["avoid:132"],
    ["avoid:2413", "avoid:3142"],
    ["avoid:2143"],
    ["alternating"],
    ["even"],
    ["dumont1"],
    ["avoid_vincular:1-32"],
    ["avoid_vincular:123"],
    ["avoid_vincular:^12"],
    ["avoid_vincular:21$"],
    ["avoid_vincular:2-31"],
    ["inverse(alternating)"],
]


@pytest.mark.slow
@pytest.mark.parametrize("familia", FAMILIAS, ids=lambda f: "+".join(f))
@pytest.mark.parametrize("sigma", ["12", "21", "321", "2413", "3142"])
def test_transferencia_confere_com_perfil_direto(familia, sigma):
    u = close_universe(familia)
    sigma = P(sigma)
    filhos_possiveis = ate(4 if len(sigma) == 2 else 3)
    perfis = {pi: u.profile(pi) for pi in filhos_possiveis}
    discrepancias = []
    for filhos in product(filhos_possiveis, repeat=len(sigma)):
        esperado = u.profile(inflate(sigma, filhos))
        obtido = u.transfer(sigma, [perfis[f] for f in filhos])
        if obtido != esperado:
            discrepancias.append((filhos, u.label(obtido), u.label(esperado)))
    assert discrepancias == []
