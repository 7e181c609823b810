"""
Exceções do permclass, uma por etapa do pipeline.

Todas herdam de ValueError, como os erros de configuração e de
carregamento de arquivos sempre fizeram neste projeto.
"""


class PermClassError(ValueError):
    """Erro base; `stage` identifica a etapa para a CLI"""
    stage = "permclass"


class PermutationError(PermClassError):
    """Permutação inválida, erro de parsing ou de aridade"""
    stage = "perm-core"


class UniverseError(PermClassError):
    """Universo de propriedades inválido para a operação pedida"""
    stage = "property-engine"


class ClassSpecError(PermClassError):
    """Arquivo de especificação inválido ou limite excedido"""
    stage = "class-engine"


class SimplesError(PermClassError):
    """Conjunto de simples incompleto onde completude é exigida"""
    stage = "class-engine"


class AlgebraicSystemError(PermClassError):
    stage = "gfsystem"


class SolverError(PermClassError):
    """Sistema impróprio, parâmetro ausente ou falha de estabilização"""
    stage = "series-solver"


class EliminationError(PermClassError):
    stage = "eliminator"


class CommandError(PermClassError):
    """Argumentos de linha de comando inválidos"""
    stage = "cli"
