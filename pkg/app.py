"""
permclass - Enumeração exata de classes de permutações
Sistemas algébricos de funções geradoras via propriedades query-complete
Linha de comando: decompose, simples, system, count, wreath-basis, list-examples
"""
import argparse
import sys
from pathlib import Path
from typing import List, Optional

from src.commands import get_all_commands
from src.config import console, settings
from src.errors import PermClassError


def build_parser() -> argparse.ArgumentParser:
    """Monta o parser com um subcomando por comando registrado"""
    comum = argparse.ArgumentParser(add_help=False)
    comum.add_argument("--json", dest="json_path", default=None, metavar="PATH",
                       help="Grava o relatório estruturado neste arquivo")
    comum.add_argument("-v", "--verbose", action="store_true",
                       help="Mostra o progresso das etapas em stderr")

    parser = argparse.ArgumentParser(
        prog="permclass",
        description="Funções geradoras algébricas de classes de permutações com finitas simples",
    )
    subparsers = parser.add_subparsers(dest="command", required=True, metavar="COMANDO")
    for comando in get_all_commands():
        comando.configure(subparsers, parents=[comum])
    return parser


def write_report(caminho: str, report) -> None:
    destino = Path(caminho)
    destino.parent.mkdir(parents=True, exist_ok=True)
    destino.write_text(report.model_dump_json(indent=2), encoding="utf-8")
    console.log(f"💾 Relatório gravado em {destino}")


def main(argv: Optional[List[str]] = None) -> int:
    """Função principal da CLI; devolve o status de saída"""
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.verbose:
        settings.VERBOSE = True

    comandos = {c.name: c for c in get_all_commands()}
    comando = comandos[args.command]
    try:
        resultado = comando.invoke(vars(args))
    except PermClassError as e:
        console.error(f"[{e.stage}] {e}")
        return 2
    except ValueError as e:
        # configuração inválida no .env
        console.error(f"[config] {e}")
        return 2

    if resultado.text:
        print(resultado.text)
    if args.json_path:
        write_report(args.json_path, resultado.report)
    return resultado.exit_status


if __name__ == "__main__":
    sys.exit(main())
