"""
Comando wreath-basis: base do fecho por coroa da classe
"""
from typing import Optional

from pydantic import Field

from ..classes import enumerate_simples, wreath_closure_basis
from ..perms import format_permutation
from .base import Command, CommandResult, SpecInput
from .report import RunReport


class WreathBasisInput(SpecInput):
    """Schema de entrada do comando wreath-basis"""
    cap: Optional[int] = Field(
        default=None,
        ge=1,
        description="Maior comprimento de simples examinado (padrão: PERMCLASS_WREATH_BASIS_CAP)"
    )


def base_do_fecho(entrada: WreathBasisInput) -> CommandResult:
    """
    Calcula a base do fecho por coroa a partir das simples da classe

    Returns:
        Um elemento da base por linha, em ordem de comprimento
    """
    spec = entrada.load()
    simples = enumerate_simples(spec)
    base = [format_permutation(p) for p in wreath_closure_basis(simples, entrada.cap)]
    relatorio = RunReport(
        command="wreath-basis",
        spec=spec.model_dump(exclude_none=True),
        simples={n: [format_permutation(p) for p in ps] for n, ps in simples.by_length.items()},
        simples_complete=simples.complete,
        wreath_basis=base,
    )
    return CommandResult(text="\n".join(base), report=relatorio)


def create_wreath_basis_command() -> Command:
    """Cria e retorna o comando wreath-basis"""
    return Command(
        name="wreath-basis",
        description="Calcula a base do fecho por coroa da classe",
        func=base_do_fecho,
        args_schema=WreathBasisInput,
    )
