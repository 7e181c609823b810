"""
Comando count: o pipeline completo, da especificação à sequência
"""
from typing import Optional

from pydantic import Field

from ..config import settings
from .base import Command, CommandResult, SpecInput
from .pipeline import EnumerationPipeline


class CountInput(SpecInput):
    """Schema de entrada do comando count"""
    n: Optional[int] = Field(
        default=None,
        ge=1,
        description="Ordem N: conta comprimentos 1..N (padrão: PERMCLASS_ORDER)"
    )
    involutions: bool = Field(
        default=False,
        description="Conta apenas involuções"
    )
    eliminate: bool = Field(
        default=False,
        description="Calcula e certifica um polinômio anulador Phi(x, f)"
    )
    oracle_check: Optional[int] = Field(
        default=None,
        ge=1,
        description="Confere a série contra a força bruta até este comprimento",
        json_schema_extra={"const": settings.ORACLE_CHECK_LENGTH},
    )


def contar(entrada: CountInput) -> CommandResult:
    """
    Executa simples -> universo -> sistema -> séries e, se pedido,
    eliminação e conferência com o oráculo

    Returns:
        Sequência "a1, a2, ..." e, conforme os flags, o polinômio e a
        tabela do oráculo. Qualquer MISMATCH torna o status de saída 1.
    """
    pipeline = EnumerationPipeline(
        entrada.load(), command="count", order=entrada.n, involutions=entrada.involutions
    )
    linhas = [str(pipeline.series())]
    if entrada.eliminate:
        phi = pipeline.annihilator()
        linhas.append(f"{phi} = 0")
    if entrada.oracle_check is not None:
        pipeline.oracle_check(entrada.oracle_check)
        linhas.append(pipeline.report.oracle_table())
    return CommandResult(text="\n".join(linhas), report=pipeline.report)


def create_count_command() -> Command:
    """Cria e retorna o comando count"""
    return Command(
        name="count",
        description="Conta a classe: sequência até N, anulador opcional e conferência com o oráculo",
        func=contar,
        args_schema=CountInput,
    )
