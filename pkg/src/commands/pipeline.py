"""
Pipeline de enumeração: simples -> universo -> sistema -> séries ->
(eliminação) -> (oráculo).

Cada etapa é um método que calcula seu artefato uma única vez, registra
o tempo gasto no relatório e deixa o resultado disponível para as
etapas seguintes.
"""
import time
from contextlib import contextmanager
from typing import List, Optional

from ..classes import ClassSpec, Oracle, SimpleSet, enumerate_simples, is_wreath_closed
from ..config import console, settings
from ..eliminator import AnnihilatorPoly, eliminate, verify_annihilator
from ..errors import EliminationError, UniverseError
from ..gfsystem import (
    AlgebraicSystem,
    TargetQuery,
    build_involution_system,
    build_system,
)
from ..perms import Permutation, format_permutation
from ..properties import PropertyUniverse, close_universe
from ..series import TruncatedSeries, aggregate, solve
from .report import OracleRow, RunReport

_ESQUELETOS_BASICOS = [Permutation._trusted((1, 2)), Permutation._trusted((2, 1))]
_SKEW3 = Permutation._trusted((3, 2, 1))


class EnumerationPipeline:
    """Executa as etapas do pipeline sobre uma especificação de classe"""

    def __init__(
        self,
        spec: ClassSpec,
        command: str = "count",
        order: Optional[int] = None,
        involutions: bool = False,
    ):
        """
        Inicializa o pipeline

        Args:
            spec: Especificação da classe
            command: Nome do comando (vai para o relatório)
            order: N, coeficientes x^1..x^N (padrão: configurado em .env)
            involutions: Conta só involuções (equivale à condição "involution")
        """
        settings.validate()
        self.spec = spec
        self.order = order or settings.DEFAULT_ORDER
        condicoes = spec.conditions
        self.involutions = involutions or condicoes.involution
        self.properties = condicoes.properties
        self.barred = condicoes.barred

        self.report = RunReport(command=command, spec=spec.model_dump(exclude_none=True))
        self._simples: Optional[SimpleSet] = None
        self._universo: Optional[PropertyUniverse] = None
        self._consulta: Optional[TargetQuery] = None
        self._sistema: Optional[AlgebraicSystem] = None
        self._serie: Optional[TruncatedSeries] = None

    @contextmanager
    def _etapa(self, nome: str, marcador: str):
        console.banner(f"{nome.upper()} · {self.spec.label}", marcador)
        inicio = time.perf_counter()
        try:
            yield
        finally:
            decorrido = time.perf_counter() - inicio
            self.report.timings[nome] = round(decorrido, 6)
            console.log(f"⏱️  {nome}: {decorrido:.3f}s")

    # -- etapas -----------------------------------------------------------------

    def simples(self) -> SimpleSet:
        """Simples da classe, completas ou erro"""
        if self._simples is None:
            with self._etapa("simples", "🔎"):
                simples = enumerate_simples(self.spec)
                self.report.simples = {
                    n: [format_permutation(p) for p in ps] for n, ps in simples.by_length.items()
                }
                self.report.simples_complete = simples.complete
                self.report.wreath_closed = is_wreath_closed(self.spec)
                simples.require_complete()
                console.log(f"   ✅ simples por comprimento: {simples.counts()}")
            self._simples = simples
        return self._simples

    def query(self) -> TargetQuery:
        """
        Q: as condições laterais e, se a classe não é fechada por coroa,
        Av(beta) para cada beta da base (a contagem é feita dentro do fecho).
        """
        if self._consulta is None:
            base: List[Permutation] = []
            if self.spec.mode == "class" and not is_wreath_closed(self.spec):
                base = self.spec.basis_permutations
            self._consulta = TargetQuery.from_basis(base, self.properties)
            self.report.query = str(self._consulta)
        return self._consulta

    def universe(self) -> PropertyUniverse:
        if self._universo is None:
            if self.barred:
                raise UniverseError(
                    "Padrões barrados não têm regras de transferência; "
                    "use apenas o oráculo para essas condições"
                )
            simples = self.simples()
            consulta = self.query()
            with self._etapa("universo", "🧬"):
                esqueletos = [s for s in _ESQUELETOS_BASICOS if s in simples] + simples.long_simples
                if self.involutions:
                    esqueletos.append(_SKEW3)
                universo = close_universe(
                    sorted(consulta.required, key=lambda p: p.sort_key),
                    skeletons=esqueletos,
                    inverse_closed=self.involutions,
                )
                self.report.universe = [p.spec for p in universo]
                console.log(f"   ✅ {len(universo)} propriedades")
            self._universo = universo
        return self._universo

    def system(self) -> AlgebraicSystem:
        if self._sistema is None:
            simples = self.simples()
            universo = self.universe()
            with self._etapa("sistema", "🧩"):
                if self.involutions:
                    sistema = build_involution_system(simples, universo, target=self.query())
                else:
                    sistema = build_system(simples, universo, target=self.query())
                self.report.system = sistema.to_text()
            self._sistema = sistema
        return self._sistema

    def series(self) -> TruncatedSeries:
        """f_Q truncada em x^N"""
        if self._serie is None:
            sistema = self.system()
            with self._etapa("séries", "🔢"):
                solucao = solve(sistema, self.order)
                serie = aggregate(solucao, self.query(), sistema.universe, self.order)
                self.report.order = self.order
                self.report.sequence = serie.sequence()
                console.log(f"   ✅ {serie}")
            self._serie = serie
        return self._serie

    def annihilator(self) -> AnnihilatorPoly:
        """Phi(x, f) por eliminação, certificado numa série de ordem própria"""
        sistema = self.system()
        with self._etapa("eliminação", "🧮"):
            phi = eliminate(sistema, self.query())
            ordem = max(self.order, 2 * phi.total_degree + settings.ANNIHILATOR_MARGIN)
            solucao = solve(sistema, ordem)
            serie = aggregate(solucao, self.query(), sistema.universe, ordem)
            if not verify_annihilator(phi, serie, ordem):
                raise EliminationError(f"Phi(x, f) não se anula até x^{ordem}")
            self.report.annihilator = str(phi)
            self.report.annihilator_verified_to = ordem
            console.log(f"   ✅ {phi} = 0 certificado até x^{ordem}")
        return phi

    def oracle_check(self, ate: Optional[int] = None) -> List[OracleRow]:
        """Compara a série com a força bruta para n = 1..min(ate, N, limite do oráculo)"""
        limite = min(ate or settings.ORACLE_CHECK_LENGTH, self.order, self.spec.caps.max_oracle_length)
        serie = self.series()
        oraculo = Oracle(self._oracle_spec())
        with self._etapa("oráculo", "🔍"):
            linhas = [OracleRow.compare(n, serie[n], oraculo.count(n)) for n in range(1, limite + 1)]
            self.report.oracle = linhas
            for linha in linhas:
                if linha.status != "MATCH":
                    console.warn(f"n={linha.n}: série {linha.series} ≠ oráculo {linha.oracle}")
        return linhas

    def _oracle_spec(self) -> ClassSpec:
        """--involutions também vale para o oráculo"""
        if not self.involutions or self.spec.conditions.involution:
            return self.spec
        return self.spec.model_copy(update={"properties": self.spec.properties + ["involution"]})

