"""
Módulo de comandos da CLI do permclass
Um comando por arquivo, registrados em get_all_commands
"""
from typing import List

from .base import Command, CommandResult, SpecInput
from .report import MATCH, MISMATCH, OracleRow, RunReport
from .pipeline import EnumerationPipeline

# Importar comandos dos módulos separados
from .decompose_cmd import DecomposeInput, create_decompose_command, decompor
from .simples_cmd import create_simples_command, listar_simples
from .system_cmd import SystemInput, create_system_command, mostrar_sistema
from .count_cmd import CountInput, contar, create_count_command
from .wreath_basis_cmd import WreathBasisInput, base_do_fecho, create_wreath_basis_command
from .list_examples_cmd import ListExamplesInput, create_list_examples_command, listar_exemplos


def get_all_commands() -> List[Command]:
    """
    Retorna todos os comandos disponíveis na CLI

    Returns:
        Lista com os comandos: decompose, simples, system, count,
        wreath-basis e list-examples
    """
    return [
        create_decompose_command(),
        create_simples_command(),
        create_system_command(),
        create_count_command(),
        create_wreath_basis_command(),
        create_list_examples_command(),
    ]


__all__ = [
    # Função principal
    "get_all_commands",

    # Infraestrutura
    "Command",
    "CommandResult",
    "SpecInput",
    "EnumerationPipeline",
    "RunReport",
    "OracleRow",
    "MATCH",
    "MISMATCH",

    # Comandos individuais
    "create_decompose_command",
    "create_simples_command",
    "create_system_command",
    "create_count_command",
    "create_wreath_basis_command",
    "create_list_examples_command",

    # Schemas de entrada
    "DecomposeInput",
    "SystemInput",
    "CountInput",
    "WreathBasisInput",
    "ListExamplesInput",

    # Funções diretas
    "decompor",
    "listar_simples",
    "mostrar_sistema",
    "contar",
    "base_do_fecho",
    "listar_exemplos",
]
