"""
Relatório estruturado de uma execução (saída de --json).
"""
from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, Field

MATCH = "MATCH"
MISMATCH = "MISMATCH"


class OracleRow(BaseModel):
    """Uma linha da comparação série × força bruta"""
    n: int = Field(description="Comprimento")
    series: int = Field(description="Coeficiente de x^n na série")
    oracle: int = Field(description="Contagem por força bruta")
    status: Literal["MATCH", "MISMATCH"] = Field(description="Resultado da comparação")

    @classmethod
    def compare(cls, n: int, series: int, oracle: int) -> "OracleRow":
        return cls(n=n, series=series, oracle=oracle, status=MATCH if series == oracle else MISMATCH)


class RunReport(BaseModel):
    """
    Artefatos de uma execução do pipeline. Os campos que a etapa pedida
    não calcula ficam vazios; `timings` é o único campo não determinístico.
    """
    command: str = Field(description="Comando executado")
    spec: Optional[Dict[str, Any]] = Field(
        default=None,
        description="Eco da especificação de classe já normalizada"
    )
    simples: Dict[int, List[str]] = Field(
        default_factory=dict,
        description="Simples por comprimento"
    )
    simples_complete: Optional[bool] = Field(
        default=None,
        description="A regra de parada da enumeração disparou?"
    )
    wreath_closed: Optional[bool] = Field(
        default=None,
        description="A classe é fechada por coroa (base só de simples)?"
    )
    wreath_basis: List[str] = Field(
        default_factory=list,
        description="Base do fecho por coroa"
    )
    universe: List[str] = Field(
        default_factory=list,
        description="Propriedades do universo, em ordem canônica"
    )
    query: Optional[str] = Field(
        default=None,
        description="Propriedades exigidas na agregação f_Q"
    )
    system: Optional[str] = Field(
        default=None,
        description="Sistema algébrico em forma textual canônica"
    )
    order: Optional[int] = Field(
        default=None,
        description="N: coeficientes x^1..x^N"
    )
    sequence: List[int] = Field(
        default_factory=list,
        description="Sequência de contagem n = 1..N"
    )
    annihilator: Optional[str] = Field(
        default=None,
        description="Polinômio anulador Phi(x, f)"
    )
    annihilator_verified_to: Optional[int] = Field(
        default=None,
        description="Ordem até a qual Phi(x, f) foi certificado"
    )
    oracle: List[OracleRow] = Field(
        default_factory=list,
        description="Comparação com o oráculo de força bruta"
    )
    decomposition: Optional[str] = Field(
        default=None,
        description="Decomposição por substituição (comando decompose)"
    )
    examples: Dict[str, str] = Field(
        default_factory=dict,
        description="Catálogo de exemplos (comando list-examples)"
    )
    timings: Dict[str, float] = Field(
        default_factory=dict,
        description="Segundos gastos por etapa"
    )

    @property
    def has_mismatch(self) -> bool:
        return any(linha.status == MISMATCH for linha in self.oracle)

    @property
    def exit_status(self) -> int:
        return 1 if self.has_mismatch else 0

    def deterministic_dump(self) -> Dict[str, Any]:
        """Relatório sem os tempos: idêntico para entradas idênticas"""
        return self.model_dump(exclude={"timings"})

    def oracle_table(self) -> str:
        linhas = [f"{'n':>3}  {'série':>12}  {'oráculo':>12}  status"]
        for linha in self.oracle:
            linhas.append(f"{linha.n:>3}  {linha.series:>12}  {linha.oracle:>12}  {linha.status}")
        return "\n".join(linhas)
