"""
Comando decompose: decomposição por substituição de uma permutação
"""
from pydantic import BaseModel, ConfigDict, Field

from ..perms import decompose, format_permutation, parse_permutation
from .base import Command, CommandResult
from .report import RunReport


def _filho(pi) -> str:
    texto = format_permutation(pi)
    return f"({texto})" if len(pi) > 9 else texto


def decompor(entrada: "DecomposeInput") -> CommandResult:
    """
    Decompõe uma permutação como inflação de uma simples

    Args:
        entrada: Permutação em notação de uma linha

    Returns:
        Texto "esqueleto[filho1,filho2,...]", ex: "2413[1,132,321,12]"
    """
    pi = parse_permutation(entrada.permutation)
    esqueleto, filhos = decompose(pi)
    texto = f"{format_permutation(esqueleto)}[{','.join(_filho(f) for f in filhos)}]"
    return CommandResult(text=texto, report=RunReport(command="decompose", decomposition=texto))


class DecomposeInput(BaseModel):
    """Schema de entrada do comando decompose"""
    model_config = ConfigDict(extra="forbid")

    permutation: str = Field(
        description="Permutação em notação de uma linha (ex: 479832156 ou 10,2,3,...)",
        json_schema_extra={"positional": True},
    )


def create_decompose_command() -> Command:
    """Cria e retorna o comando decompose"""
    return Command(
        name="decompose",
        description="Mostra o esqueleto simples e os filhos da decomposição por substituição",
        func=decompor,
        args_schema=DecomposeInput,
    )
