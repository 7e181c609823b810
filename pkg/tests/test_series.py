"""Séries truncadas e o resolvedor de ponto fixo"""
import pytest

from src.errors import SolverError
from src.gfsystem import PLAIN, AlgebraicSystem, TargetQuery, build_involution_system, build_system
from src.properties import SKEW_INDEC, SUM_INDEC, close_universe
from src.series import (
    TruncatedSeries,
    aggregate,
    parameter_series,
    series_sum,
    solve,
    substitute_x_squared,
)

from .helpers import poly_series, x_series


class TestSerieTruncada:
    def test_soma_trunca_na_menor_ordem(self):
        s = poly_series([1, 1, 1], 5) + poly_series([0, 2], 3)
        assert s.order == 3
        assert s.coefficients == (1, 3, 1, 0)

    def test_produto_e_potencia(self):
        um_mais_x = poly_series([1, 1], 6)
        assert (um_mais_x ** 3).coefficients == (1, 3, 3, 1, 0, 0, 0)
        assert (x_series(4) * x_series(4)).coefficients == (0, 0, 1, 0, 0)

    def test_serie_geometrica(self):
        # (1 - x) * sum x^k = 1 até a ordem
        geometrica = TruncatedSeries((1,) * 8)
        assert (poly_series([1, -1], 7) * geometrica).coefficients == (1,) + (0,) * 7

    def test_deslocamento_e_escala(self):
        s = poly_series([1, 2, 3], 4)
        assert s.shift(2).coefficients == (0, 0, 1, 2, 3)
        assert s.scale(-2).coefficients == (-2, -4, -6, 0, 0)
        assert (s - s).is_zero()

    def test_valuacao(self):
        assert poly_series([0, 0, 5], 4).valuation == 2
        assert TruncatedSeries.zero(3).valuation == 4

    def test_x_ao_quadrado(self):
        s = substitute_x_squared(poly_series([0, 1, 2], 2))
        assert s.order == 4
        assert s.coefficients == (0, 0, 1, 0, 2)

    def test_texto_e_sequencia(self):
        s = TruncatedSeries.from_sequence([1, 2, 6, 22])
        assert str(s) == "1, 2, 6, 22"
        assert s.sequence() == [1, 2, 6, 22]
        assert s[10] == 0

    def test_truncar_nao_estende(self):
        with pytest.raises(SolverError):
            x_series(3).truncate(5)

    def test_serie_vazia(self):
        with pytest.raises(SolverError):
            TruncatedSeries(())

    def test_series_sum(self):
        assert series_sum([x_series(3), x_series(3)], 3).coefficients == (0, 2, 0, 0)
        assert series_sum([], 2).is_zero()


@pytest.fixture(scope="module")
def sistema_separaveis(simples_separaveis):
    return build_system(simples_separaveis, close_universe([], skeletons=["12", "21"]))


class TestSolve:
    def test_separaveis(self, sistema_separaveis):
        solucao = solve(sistema_separaveis, 8)
        f = aggregate(solucao, TargetQuery(), sistema_separaveis.universe)
        assert f.sequence() == [1, 2, 6, 22, 90, 394, 1806, 8558]

    def test_componentes(self, sistema_separaveis):
        universo = sistema_separaveis.universe
        solucao = solve(sistema_separaveis, 5)
        ambos = universo.from_properties([SUM_INDEC, SKEW_INDEC])
        assert solucao[ambos].sequence() == [1, 0, 0, 0, 0]
        # soma-indecomponíveis de comprimento >= 2 são as skew-decomponíveis: metade
        so_soma = universo.from_properties([SUM_INDEC])
        assert solucao[so_soma].sequence() == [0, 1, 3, 11, 45]

    def test_agregacao_por_consulta(self, sistema_separaveis):
        solucao = solve(sistema_separaveis, 5)
        f = aggregate(solucao, TargetQuery(frozenset({SUM_INDEC})), sistema_separaveis.universe)
        assert f.sequence() == [1, 1, 3, 11, 45]

    def test_soma_indecomponiveis_e_f_sobre_um_mais_f(self, sistema_separaveis):
        universo = sistema_separaveis.universe
        solucao = solve(sistema_separaveis, 12)
        f = aggregate(solucao, TargetQuery(), universo)
        indecomponiveis = aggregate(solucao, TargetQuery(frozenset({SUM_INDEC})), universo)
        assert (indecomponiveis * (poly_series([1], 12) + f) - f).is_zero()

    def test_ordem_invalida(self, sistema_separaveis):
        with pytest.raises(SolverError, match="Ordem"):
            solve(sistema_separaveis, 0)

    def test_sistema_improprio(self, sistema_separaveis):
        universo = sistema_separaveis.universe
        improprio = AlgebraicSystem(
            mode=PLAIN,
            universe=universo,
            unknowns=sistema_separaveis.unknowns[:1],
            equations=[{(0, (), ()): 1}],
        )
        with pytest.raises(SolverError, match="impróprio"):
            solve(improprio, 4)

    def test_agregacao_vazia_exige_ordem(self, sistema_separaveis):
        with pytest.raises(SolverError):
            aggregate({}, TargetQuery(), sistema_separaveis.universe)
        assert aggregate({}, TargetQuery(), sistema_separaveis.universe, 3).is_zero()


class TestInvolucoes:
    @pytest.fixture(scope="class")
    def sistema(self, simples_separaveis):
        universo = close_universe([], skeletons=["12", "21", "321"], inverse_closed=True)
        return build_involution_system(simples_separaveis, universo)

    def test_parametro_do_ponto(self, sistema):
        params = parameter_series(sistema, 6)
        ponto = sistema.universe.profile("1")
        assert params[ponto].coefficients == (0, 0, 1, 0, 0, 0, 0)

    def test_parametros_soma_e_skew_sao_simetricos(self, sistema):
        universo = sistema.universe
        params = parameter_series(sistema, 12)
        so_soma = params[universo.from_properties([SUM_INDEC])]
        so_skew = params[universo.from_properties([SKEW_INDEC])]
        assert so_soma == so_skew
        # 2p^2 + (3x^2 - 1)p + x^4 = 0
        x2 = poly_series([0, 0, 1], 12)
        identidade = so_soma * so_soma * poly_series([2], 12) + (x2.scale(3) - poly_series([1], 12)) * so_soma + x2 * x2
        assert identidade.is_zero()

    def test_involucoes_separaveis(self, sistema):
        solucao = solve(sistema, 6)
        f = aggregate(solucao, TargetQuery(), sistema.universe)
        assert f.sequence() == [1, 2, 4, 10, 24, 64]

    def test_parametro_ausente(self, sistema):
        with pytest.raises(SolverError, match="Parâmetro ausente"):
            solve(sistema, 4, params={})

    def test_parametro_curto(self, sistema):
        params = parameter_series(sistema, 3)
        with pytest.raises(SolverError):
            solve(sistema, 6, params=params)

    def test_sem_companheiro(self, sistema):
        orfao = AlgebraicSystem(
            mode=sistema.mode,
            universe=sistema.universe,
            unknowns=sistema.unknowns,
            equations=sistema.equations,
            parameters=sistema.parameters,
        )
        with pytest.raises(SolverError, match="companheiro"):
            parameter_series(orfao, 4)
