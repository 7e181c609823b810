"""
Modelo do arquivo de especificação de classe (JSON).
"""
from dataclasses import dataclass, field
from typing import List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from ..config import console, settings
from ..perms import (
    BarredPattern,
    Permutation,
    contains,
    format_permutation,
    parse_barred,
    parse_permutation,
)
from ..properties import Property, parse_property

INVOLUTION = "involution"
BARRED_PREFIX = "avoid_barred:"


class ClassCaps(BaseModel):
    """Limites de busca do pipeline"""
    model_config = ConfigDict(extra="forbid")

    max_simple_length: int = Field(
        default_factory=lambda: settings.MAX_SIMPLE_LENGTH,
        ge=1,
        description="Maior comprimento de simples gerado antes de desistir (padrão: 12)"
    )
    max_oracle_length: int = Field(
        default_factory=lambda: settings.MAX_ORACLE_LENGTH,
        ge=1,
        le=11,
        description="Maior comprimento aceito pelo oráculo de força bruta (padrão: 9)"
    )


@dataclass
class SideConditions:
    """Condições laterais separadas por destino"""
    properties: List[Property] = field(default_factory=list)
    barred: List[BarredPattern] = field(default_factory=list)
    involution: bool = False


def parse_condition(texto: str):
    """"involution", padrão barrado ou propriedade do motor de transferência"""
    bruto = texto.strip()
    if bruto == INVOLUTION:
        return INVOLUTION
    if bruto.startswith(BARRED_PREFIX):
        return parse_barred(bruto[len(BARRED_PREFIX):])
    return parse_property(bruto)


class ClassSpec(BaseModel):
    """
    Especificação de uma classe de permutações: base, condições
    laterais e modo. Campos desconhecidos são erro.
    """
    model_config = ConfigDict(extra="forbid")

    name: Optional[str] = Field(
        default=None,
        description="Nome curto da classe (usado no catálogo de exemplos)"
    )
    description: Optional[str] = Field(
        default=None,
        description="Descrição livre"
    )
    basis: List[str] = Field(
        default_factory=list,
        description="Permutações da base, ex: [\"2413\", \"3142\"]"
    )
    properties: List[str] = Field(
        default_factory=list,
        description="Condições laterais: \"alternating\", \"even\", \"dumont1\", "
                    "\"involution\", \"avoid_vincular:1-32\", \"avoid_barred:[3]12\", ..."
    )
    mode: Literal["class", "wreath_closure"] = Field(
        default="class",
        description="\"class\" conta Av(base); \"wreath_closure\" conta o fecho por coroa"
    )
    caps: ClassCaps = Field(
        default_factory=ClassCaps,
        description="Limites de busca"
    )

    @field_validator("basis")
    @classmethod
    def _validar_base(cls, valores: List[str]) -> List[str]:
        return [format_permutation(parse_permutation(v)) for v in valores]

    @field_validator("properties")
    @classmethod
    def _validar_propriedades(cls, valores: List[str]) -> List[str]:
        for v in valores:
            parse_condition(v)
        return [v.strip() for v in valores]

    @model_validator(mode="after")
    def _normalizar_base(self) -> "ClassSpec":
        perms = sorted({parse_permutation(b) for b in self.basis}, key=lambda p: p.sort_key)
        minimais = [
            p for p in perms
            if not any(q != p and len(q) <= len(p) and contains(q, p) for q in perms)
        ]
        if len(minimais) != len(perms):
            descartadas = [format_permutation(p) for p in perms if p not in minimais]
            console.warn(
                f"Base não é uma anticadeia; descartando elementos não minimais: {', '.join(descartadas)}"
            )
        self.basis = [format_permutation(p) for p in minimais]
        return self

    @property
    def basis_permutations(self) -> List[Permutation]:
        return [parse_permutation(b) for b in self.basis]

    @property
    def conditions(self) -> SideConditions:
        resultado = SideConditions()
        for texto in self.properties:
            item = parse_condition(texto)
            if item == INVOLUTION:
                resultado.involution = True
            elif isinstance(item, BarredPattern):
                resultado.barred.append(item)
            else:
                resultado.properties.append(item)
        return resultado

    @property
    def label(self) -> str:
        if self.name:
            return self.name
        base = ", ".join(self.basis) if self.basis else "∅"
        extras = f" + {', '.join(self.properties)}" if self.properties else ""
        return f"Av({base}){extras}"
