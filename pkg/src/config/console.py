"""
Saída de progresso do pipeline.

Tudo vai para stderr: stdout fica reservado para os artefatos
(sequências, sistemas, polinômios) que os testes comparam byte a byte.
"""
import sys

from .settings import settings

LARGURA = 100


def banner(titulo: str, marcador: str = "🧮"):
    """Imprime um cabeçalho com régua de '=' (apenas em modo verboso)"""
    if not settings.VERBOSE:
        return
    print("\n" + "=" * LARGURA, file=sys.stderr)
    print(f"{marcador} {titulo}", file=sys.stderr)
    print("=" * LARGURA, file=sys.stderr)


def log(mensagem: str):
    """Imprime uma linha de progresso (apenas em modo verboso)"""
    if settings.VERBOSE:
        print(mensagem, file=sys.stderr)


def warn(mensagem: str):
    """Avisos são sempre exibidos"""
    print(f"⚠️  {mensagem}", file=sys.stderr)


def error(mensagem: str):
    print(f"❌ {mensagem}", file=sys.stderr)
