"""Linha de comando de ponta a ponta via app.main"""
import json

import pytest

import app
from src.commands import RunReport
from src.config import Settings, settings


def _executa(capsys, *argv):
    status = app.main(list(argv))
    saida = capsys.readouterr()
    return status, saida.out, saida.err


@pytest.fixture
def arquivo_spec(tmp_path):
    def escrever(dados, nome="classe.json"):
        caminho = tmp_path / nome
        caminho.write_text(json.dumps(dados), encoding="utf-8")
        return str(caminho)

    return escrever


class TestDecompose:
    def test_inflacao_de_2413(self, capsys):
        status, out, _ = _executa(capsys, "decompose", "479832156")
        assert status == 0
        assert out.strip() == "2413[1,132,321,12]"

    @pytest.mark.parametrize(
        "entrada, esperado",
        [("2143", "12[21,21]"), ("123", "12[1,12]"), ("1", "1[1]"), ("4321", "21[1,321]")],
    )
    def test_somas_e_trivial(self, capsys, entrada, esperado):
        _, out, _ = _executa(capsys, "decompose", entrada)
        assert out.strip() == esperado

    def test_permutacao_invalida(self, capsys):
        status, out, err = _executa(capsys, "decompose", "1231")
        assert status == 2
        assert out == ""
        assert "[perm-core]" in err

    def test_relatorio_json(self, capsys, tmp_path):
        destino = tmp_path / "saida" / "decomp.json"
        _executa(capsys, "decompose", "2413", "--json", str(destino))
        relatorio = json.loads(destino.read_text(encoding="utf-8"))
        assert relatorio["command"] == "decompose"
        assert relatorio["decomposition"] == "2413[1,1,1,1]"


class TestCount:
    def test_separaveis(self, capsys):
        status, out, _ = _executa(capsys, "count", "--example", "separaveis", "--n", "6")
        assert status == 0
        assert out.strip() == "1, 2, 6, 22, 90, 394"

    def test_arquivo_de_especificacao(self, capsys, arquivo_spec):
        caminho = arquivo_spec({"basis": ["12"]})
        _, out, _ = _executa(capsys, "count", caminho, "--n", "5")
        assert out.strip() == "1, 1, 1, 1, 1"

    def test_eliminacao(self, capsys):
        _, out, _ = _executa(capsys, "count", "--example", "av132", "--n", "5", "--eliminate")
        linhas = out.strip().splitlines()
        assert linhas == ["1, 2, 5, 14, 42", "x*f^2 + (2*x - 1)*f + x = 0"]

    def test_involucoes(self, capsys):
        _, out, _ = _executa(capsys, "count", "--example", "separaveis", "--n", "5", "--involutions")
        assert out.strip() == "1, 2, 4, 10, 24"

    def test_oraculo_e_json(self, capsys, tmp_path):
        destino = tmp_path / "av132.json"
        status, out, _ = _executa(
            capsys, "count", "--example", "av132", "--n", "6", "--oracle-check", "5", "--json", str(destino)
        )
        assert status == 0
        assert "MATCH" in out and "MISMATCH" not in out
        relatorio = json.loads(destino.read_text(encoding="utf-8"))
        assert relatorio["sequence"] == [1, 2, 5, 14, 42, 132]
        assert [linha["n"] for linha in relatorio["oracle"]] == [1, 2, 3, 4, 5]
        assert {linha["status"] for linha in relatorio["oracle"]} == {"MATCH"}
        assert relatorio["universe"]
        assert "timings" in relatorio

    def test_oraculo_sem_valor_usa_o_padrao(self, capsys, tmp_path):
        destino = tmp_path / "padrao.json"
        _executa(capsys, "count", "--example", "separaveis", "--n", "10", "--oracle-check", "--json", str(destino))
        relatorio = json.loads(destino.read_text(encoding="utf-8"))
        assert len(relatorio["oracle"]) == min(settings.ORACLE_CHECK_LENGTH, 10)

    def test_divergencia_sai_com_1(self, capsys, monkeypatch):
        monkeypatch.setattr("src.commands.pipeline.Oracle.count", lambda self, n: -1)
        status, out, err = _executa(capsys, "count", "--example", "separaveis", "--n", "3", "--oracle-check", "3")
        assert status == 1
        assert "MISMATCH" in out
        assert "oráculo" in err

    def test_deterministico(self, capsys, tmp_path):
        relatorios = []
        for i in range(2):
            destino = tmp_path / f"r{i}.json"
            _executa(capsys, "count", "--example", "separaveis_alternantes", "--n", "8", "--json", str(destino))
            relatorio = RunReport.model_validate_json(destino.read_text(encoding="utf-8"))
            assert relatorio.timings
            relatorios.append(relatorio.deterministic_dump())
        assert "timings" not in relatorios[0]
        assert relatorios[0] == relatorios[1]

    def test_verboso_escreve_em_stderr(self, capsys, monkeypatch):
        monkeypatch.setattr(settings, "VERBOSE", False)
        _, out, err = _executa(capsys, "count", "--example", "separaveis", "--n", "4", "-v")
        assert out.strip() == "1, 2, 6, 22"
        assert "SIMPLES" in err


class TestErros:
    def test_campo_desconhecido(self, capsys, arquivo_spec):
        caminho = arquivo_spec({"basis": ["12"], "cores": ["azul"]})
        status, _, err = _executa(capsys, "count", caminho)
        assert status == 2
        assert "[class-engine]" in err

    def test_arquivo_e_exemplo(self, capsys, arquivo_spec):
        caminho = arquivo_spec({"basis": ["12"]})
        status, _, err = _executa(capsys, "count", caminho, "--example", "separaveis")
        assert status == 2
        assert "[cli]" in err

    def test_nenhuma_origem(self, capsys):
        status, _, err = _executa(capsys, "simples")
        assert status == 2
        assert "[cli]" in err

    def test_padrao_barrado_no_pipeline(self, capsys, arquivo_spec):
        caminho = arquivo_spec({"basis": ["2413", "3142"], "properties": ["avoid_barred:[3]12"]})
        status, _, err = _executa(capsys, "count", caminho, "--n", "4")
        assert status == 2
        assert "[property-engine]" in err

    def test_simples_infinitas(self, capsys, arquivo_spec):
        caminho = arquivo_spec({"basis": ["321"]})
        status, _, err = _executa(capsys, "count", caminho, "--max-simple-length", "6")
        assert status == 2
        assert "infinitely many" in err

    def test_sistema_grande_demais(self, capsys, monkeypatch):
        monkeypatch.setattr(settings, "MAX_SYSTEM_TERMS", 5)
        status, out, err = _executa(capsys, "count", "--example", "coroa_2413", "--n", "5")
        assert status == 2
        assert out == ""
        assert "[gfsystem]" in err
        assert "PERMCLASS_MAX_SYSTEM_TERMS" in err

    def test_simples_demais(self, capsys, monkeypatch):
        monkeypatch.setattr(settings, "MAX_SIMPLES", 3)
        status, _, err = _executa(capsys, "count", "--example", "coroa_2413", "--n", "5")
        assert status == 2
        assert "[class-engine]" in err
        assert "PERMCLASS_MAX_SIMPLES" in err

    def test_exemplo_desconhecido(self, capsys):
        status, _, err = _executa(capsys, "count", "--example", "nao_existe")
        assert status == 2
        assert "[class-engine]" in err


class TestOutrosComandos:
    def test_simples(self, capsys):
        status, out, _ = _executa(capsys, "simples", "--example", "simples_1324_2143_4231")
        assert status == 0
        assert out.strip().endswith("complete: yes")

    def test_simples_incompletas_nao_sao_erro(self, capsys, arquivo_spec):
        caminho = arquivo_spec({"basis": ["321"]})
        status, out, _ = _executa(capsys, "simples", caminho, "--max-simple-length", "6")
        assert status == 0
        assert out.strip().endswith("complete: no")

    def test_base_do_fecho(self, capsys):
        _, out, _ = _executa(capsys, "wreath-basis", "--example", "coroa_2413")
        assert out.split() == ["3142", "25314", "246135", "362514"]
        _, out, _ = _executa(capsys, "wreath-basis", "--example", "separaveis")
        assert out.split() == ["2413", "3142"]

    def test_sistema(self, capsys):
        status, out, _ = _executa(capsys, "system", "--example", "separaveis")
        linhas = out.strip().splitlines()
        assert status == 0
        assert len(linhas) == 3
        assert linhas[0] == "g{sum_indec,skew_indec} = x"

    def test_sistema_de_involucoes(self, capsys):
        _, out, _ = _executa(capsys, "system", "--example", "separaveis", "--involutions")
        assert out.splitlines()[0].startswith("h{")
        assert "p{sum_indec,skew_indec} = x^2" in out.splitlines()

    def test_lista_de_exemplos(self, capsys):
        _, out, _ = _executa(capsys, "list-examples")
        assert any(l.startswith("separaveis ") and "Av(2413, 3142)" in l for l in out.splitlines())
        assert "separaveis_alternantes" in out

    def test_subcomando_obrigatorio(self):
        with pytest.raises(SystemExit):
            app.main([])


def test_configuracao_incoerente(capsys, monkeypatch):
    monkeypatch.setattr(Settings, "ORACLE_CHECK_LENGTH", Settings.MAX_ORACLE_LENGTH + 1)
    status, _, err = _executa(capsys, "count", "--example", "separaveis", "--n", "3")
    assert status == 2
    assert "[config]" in err
