"""Fixtures compartilhadas: catálogo, simples e pipelines recorrentes"""
import pytest

from src.classes import SimpleSet
from src.commands import EnumerationPipeline
from src.specs import spec_loader


@pytest.fixture(scope="session")
def exemplos():
    return spec_loader.get_examples()


@pytest.fixture(scope="session")
def simples_separaveis():
    return SimpleSet.from_permutations(["1", "12", "21"])


@pytest.fixture(scope="session")
def simples_2413():
    return SimpleSet.from_permutations(["1", "12", "21", "2413"])


@pytest.fixture(scope="session")
def pipelines(exemplos):
    """Um pipeline por exemplo, reaproveitado entre testes"""
    cache = {}

    def obter(nome: str, ordem: int = 10, involutions: bool = False) -> EnumerationPipeline:
        chave = (nome, ordem, involutions)
        if chave not in cache:
            cache[chave] = EnumerationPipeline(exemplos[nome], order=ordem, involutions=involutions)
        return cache[chave]

    return obter

