"""
Comando list-examples: o catálogo de classes de exemplo
"""
from pydantic import BaseModel, ConfigDict

from ..specs import spec_loader
from .base import Command, CommandResult
from .report import RunReport


class ListExamplesInput(BaseModel):
    """O comando não recebe argumentos"""
    model_config = ConfigDict(extra="forbid")


def listar_exemplos(entrada: ListExamplesInput) -> CommandResult:
    """Nome, rótulo e descrição de cada exemplo, um por linha"""
    exemplos = spec_loader.get_examples()
    largura = max((len(nome) for nome in exemplos), default=0)
    descricoes = {}
    linhas = []
    for nome, spec in exemplos.items():
        base = ", ".join(spec.basis) or "∅"
        extras = f" + {', '.join(spec.properties)}" if spec.properties else ""
        descricoes[nome] = spec.description or ""
        linhas.append(f"{nome:<{largura}}  Av({base}){extras}  {spec.description or ''}".rstrip())
    return CommandResult(
        text="\n".join(linhas),
        report=RunReport(command="list-examples", examples=descricoes),
    )


def create_list_examples_command() -> Command:
    """Cria e retorna o comando list-examples"""
    return Command(
        name="list-examples",
        description="Lista as classes de exemplo que podem ser usadas com --example",
        func=listar_exemplos,
        args_schema=ListExamplesInput,
    )
