"""
Infraestrutura comum dos comandos: o registro `Command`, a entrada
compartilhada de especificação de classe e a montagem dos argumentos
de linha de comando a partir dos schemas pydantic.
"""
import argparse
import typing
from dataclasses import dataclass
from typing import Any, Callable, Dict, Optional, Type

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from ..classes import ClassSpec
from ..errors import CommandError
from ..specs import spec_loader
from .report import RunReport


@dataclass
class CommandResult:
    """Texto para stdout e o relatório estruturado correspondente"""
    text: str
    report: RunReport

    @property
    def exit_status(self) -> int:
        return self.report.exit_status


class SpecInput(BaseModel):
    """Entrada comum aos comandos que operam sobre uma classe"""
    model_config = ConfigDict(extra="forbid")

    spec_file: Optional[str] = Field(
        default=None,
        description="Arquivo JSON com a especificação da classe",
        json_schema_extra={"positional": True},
    )
    example: Optional[str] = Field(
        default=None,
        description="Nome de uma classe do catálogo (veja list-examples)"
    )
    max_simple_length: Optional[int] = Field(
        default=None,
        ge=1,
        description="Sobrescreve caps.max_simple_length"
    )
    max_oracle_length: Optional[int] = Field(
        default=None,
        ge=1,
        le=11,
        description="Sobrescreve caps.max_oracle_length"
    )

    @model_validator(mode="after")
    def _uma_origem(self) -> "SpecInput":
        if (self.spec_file is None) == (self.example is None):
            raise ValueError("informe um arquivo de especificação ou --example, não ambos")
        return self

    def load(self) -> ClassSpec:
        """Carrega a especificação e aplica os limites da linha de comando"""
        if self.example is not None:
            spec = spec_loader.get_example(self.example)
        else:
            spec = spec_loader.load_spec_file(self.spec_file)
        limites = {
            chave: valor
            for chave, valor in (
                ("max_simple_length", self.max_simple_length),
                ("max_oracle_length", self.max_oracle_length),
            )
            if valor is not None
        }
        if limites:
            spec = spec.model_copy(update={"caps": spec.caps.model_copy(update=limites)})
        return spec


def _tipo_base(anotacao) -> type:
    """int para Optional[int], str para Optional[str], etc."""
    if typing.get_origin(anotacao) is typing.Union:
        anotacao = next(a for a in typing.get_args(anotacao) if a is not type(None))
    return anotacao


@dataclass
class Command:
    """Um comando da CLI: função, schema de entrada e descrição"""
    name: str
    description: str
    func: Callable[..., CommandResult]
    args_schema: Type[BaseModel]

    def configure(self, subparsers, parents=()) -> argparse.ArgumentParser:
        """Registra o subcomando com um argumento por campo do schema"""
        parser = subparsers.add_parser(
            self.name, help=self.description, description=self.description, parents=list(parents)
        )
        for nome, campo in self.args_schema.model_fields.items():
            extra = campo.json_schema_extra or {}
            tipo = _tipo_base(campo.annotation)
            ajuda = campo.description or ""
            if extra.get("positional"):
                opcional = not campo.is_required()
                parser.add_argument(
                    nome,
                    nargs="?" if opcional else None,
                    default=None,
                    help=ajuda,
                )
                continue
            flag = "--" + nome.replace("_", "-")
            if tipo is bool:
                parser.add_argument(flag, dest=nome, action="store_true", help=ajuda)
            elif "const" in extra:
                parser.add_argument(
                    flag, dest=nome, type=tipo, nargs="?", const=extra["const"], default=None, help=ajuda
                )
            else:
                parser.add_argument(flag, dest=nome, type=tipo, default=None, help=ajuda)
        parser.set_defaults(command=self.name)
        return parser

    def invoke(self, argumentos: Dict[str, Any]) -> CommandResult:
        """Valida os argumentos no schema e executa o comando"""
        campos = self.args_schema.model_fields
        dados = {k: v for k, v in argumentos.items() if k in campos and v is not None}
        try:
            entrada = self.args_schema.model_validate(dados)
        except ValidationError as e:
            detalhes = "; ".join(
                f"{'.'.join(str(p) for p in item.get('loc', ())) or self.name}: {item.get('msg', '')}"
                for item in e.errors()
            )
            raise CommandError(f"Argumentos inválidos para '{self.name}': {detalhes}")
        return self.func(entrada)
