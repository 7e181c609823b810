"""
Comando simples: simples da classe, por comprimento
"""
from ..classes import enumerate_simples, is_wreath_closed
from ..perms import format_permutation
from .base import Command, CommandResult, SpecInput
from .report import RunReport


def listar_simples(entrada: SpecInput) -> CommandResult:
    """
    Enumera as simples da classe até a regra de parada ou o limite

    Returns:
        Tabela "n  #  simples" e a indicação de completude. Uma enumeração
        incompleta não é erro aqui: a tabela mostra até onde se chegou.
    """
    spec = entrada.load()
    simples = enumerate_simples(spec)
    relatorio = RunReport(
        command="simples",
        spec=spec.model_dump(exclude_none=True),
        simples={n: [format_permutation(p) for p in ps] for n, ps in simples.by_length.items()},
        simples_complete=simples.complete,
        wreath_closed=is_wreath_closed(spec),
    )
    return CommandResult(text=simples.to_table(), report=relatorio)


def create_simples_command() -> Command:
    """Cria e retorna o comando simples"""
    return Command(
        name="simples",
        description="Enumera as permutações simples da classe",
        func=listar_simples,
        args_schema=SpecInput,
    )
