"""Polinômios anuladores: notação, normalização, certificação e eliminação"""
import pytest

from src.errors import EliminationError
from src.eliminator import AnnihilatorPoly, eliminate, verify_annihilator
from src.gfsystem import TargetQuery, build_involution_system, build_system
from src.properties import close_universe
from src.series import TruncatedSeries, aggregate, solve

CATALAN = "x*f^2 + (2*x - 1)*f + x"
SCHRODER = "f^2 + (x - 1)*f + x"
INVOLUCOES_SEPARAVEIS = (
    "x^2*f^4 + (x^3 + 3*x^2 + x - 1)*f^3 + (3*x^3 + 6*x^2 - x)*f^2 "
    "+ (3*x^3 + 7*x^2 - x - 1)*f + x^3 + 3*x^2 + x"
)


def catalan(ordem: int) -> TruncatedSeries:
    """Av(132) por comprimento: C_n para n >= 1"""
    c = [1]
    for n in range(1, ordem + 1):
        c.append(sum(c[k] * c[n - 1 - k] for k in range(n)))
    return TruncatedSeries.from_sequence(c[1:])


class TestNotacao:
    def test_ida_e_volta(self):
        assert str(AnnihilatorPoly.parse(CATALAN)) == CATALAN
        assert str(AnnihilatorPoly.parse(SCHRODER + " = 0")) == SCHRODER

    def test_normaliza_conteudo_e_sinal(self):
        assert AnnihilatorPoly.parse("-2*f^2 - 2*(x - 1)*f - 2*x") == AnnihilatorPoly.parse(SCHRODER)

    def test_graus(self):
        phi = AnnihilatorPoly.parse(CATALAN)
        assert phi.degree_f == 2
        assert phi.total_degree == 3

    def test_polinomio_nulo(self):
        with pytest.raises(EliminationError):
            AnnihilatorPoly.parse("f - f")

    def test_termo_independente_negativo(self):
        phi = AnnihilatorPoly.parse("f^2 - x")
        assert str(phi) == "f^2 - x"


class TestCertificacao:
    def test_catalan(self):
        assert verify_annihilator(AnnihilatorPoly.parse(CATALAN), catalan(14), 14)

    def test_serie_errada(self):
        assert not verify_annihilator(AnnihilatorPoly.parse(SCHRODER), catalan(14), 14)

    def test_ordem_pequena_demais(self):
        with pytest.raises(EliminationError, match="pequena demais"):
            verify_annihilator(AnnihilatorPoly.parse(CATALAN), catalan(5), 5)

    def test_serie_curta(self):
        with pytest.raises(EliminationError):
            verify_annihilator(AnnihilatorPoly.parse(CATALAN), catalan(5), 14)

    def test_margem_explicita(self):
        assert verify_annihilator(AnnihilatorPoly.parse(CATALAN), catalan(5), 5, margin=0)


class TestEliminacao:
    def test_separaveis(self, simples_separaveis):
        sistema = build_system(simples_separaveis, close_universe([], skeletons=["12", "21"]))
        assert str(eliminate(sistema, TargetQuery())) == SCHRODER

    def test_av132(self, simples_separaveis):
        consulta = TargetQuery.from_basis(["132"])
        universo = close_universe(["avoid:132"], skeletons=["12", "21"])
        sistema = build_system(simples_separaveis, universo, target=consulta)
        assert str(eliminate(sistema, consulta)) == CATALAN

    def test_coroa_2413(self, simples_2413):
        sistema = build_system(simples_2413, close_universe([], skeletons=["12", "21", "2413"]))
        phi = eliminate(sistema, TargetQuery())
        f = aggregate(solve(sistema, 30), TargetQuery(), sistema.universe)
        assert verify_annihilator(phi, f, 30)
        assert f.sequence()[:5] == [1, 2, 6, 23, 102]

    def test_limite_de_grau(self, simples_2413):
        sistema = build_system(simples_2413, close_universe([], skeletons=["12", "21", "2413"]))
        with pytest.raises(EliminationError, match="falhou"):
            eliminate(sistema, TargetQuery(), degree_cap=1, retries=1)

    @pytest.mark.slow
    def test_involucoes_separaveis(self, simples_separaveis):
        universo = close_universe([], skeletons=["12", "21", "321"], inverse_closed=True)
        sistema = build_involution_system(simples_separaveis, universo)
        f = aggregate(solve(sistema, 24), TargetQuery(), universo)
        esperado = AnnihilatorPoly.parse(INVOLUCOES_SEPARAVEIS)
        assert verify_annihilator(esperado, f, 24)
        phi = eliminate(sistema, TargetQuery())
        assert verify_annihilator(phi, f, 24)
