"""
Comando system: o sistema algébrico da classe em forma textual
"""
from pydantic import Field

from .base import Command, CommandResult, SpecInput
from .pipeline import EnumerationPipeline


class SystemInput(SpecInput):
    """Schema de entrada do comando system"""
    involutions: bool = Field(
        default=False,
        description="Sistema h das involuções, seguido das relações dos parâmetros p"
    )


def mostrar_sistema(entrada: SystemInput) -> CommandResult:
    """
    Constrói o sistema próprio (já podado pela consulta) e o imprime,
    uma equação por linha
    """
    pipeline = EnumerationPipeline(entrada.load(), command="system", involutions=entrada.involutions)
    sistema = pipeline.system()
    return CommandResult(text=sistema.to_text(), report=pipeline.report)


def create_system_command() -> Command:
    """Cria e retorna o comando system"""
    return Command(
        name="system",
        description="Mostra o sistema algébrico de funções geradoras da classe",
        func=mostrar_sistema,
        args_schema=SystemInput,
    )
