"""
Módulo de configurações do permclass.
Carrega variáveis de ambiente do arquivo .env
"""
import os
from dotenv import load_dotenv

# Carrega variáveis de ambiente do arquivo .env
load_dotenv()


def _ler_bool(nome: str, padrao: str = "false") -> bool:
    """Lê uma variável de ambiente booleana (1/true/yes/sim)"""
    return os.getenv(nome, padrao).strip().lower() in ("1", "true", "yes", "sim")


class Settings:
    """Classe para gerenciar as configurações do motor de enumeração"""

    # Ordem padrão das séries truncadas (coeficientes x^1..x^N)
    DEFAULT_ORDER: int = int(os.getenv("PERMCLASS_ORDER", "20"))

    # Até que comprimento o oráculo de força bruta confere a série
    ORACLE_CHECK_LENGTH: int = int(os.getenv("PERMCLASS_ORACLE_CHECK", "8"))

    # Limites de busca
    MAX_SIMPLE_LENGTH: int = int(os.getenv("PERMCLASS_MAX_SIMPLE_LENGTH", "12"))
    MAX_ORACLE_LENGTH: int = int(os.getenv("PERMCLASS_MAX_ORACLE_LENGTH", "9"))
    WREATH_BASIS_CAP: int = int(os.getenv("PERMCLASS_WREATH_BASIS_CAP", "9"))

    # Tamanho máximo do trabalho antes de desistir com erro
    MAX_SIMPLES: int = int(os.getenv("PERMCLASS_MAX_SIMPLES", "1000"))
    MAX_SYSTEM_TERMS: int = int(os.getenv("PERMCLASS_MAX_SYSTEM_TERMS", "200000"))

    # Eliminação por resultantes
    ANNIHILATOR_MARGIN: int = int(os.getenv("PERMCLASS_ANNIHILATOR_MARGIN", "10"))
    ELIMINATION_DEGREE_CAP: int = int(os.getenv("PERMCLASS_ELIMINATION_DEGREE_CAP", "64"))
    ELIMINATION_RETRIES: int = int(os.getenv("PERMCLASS_ELIMINATION_RETRIES", "6"))

    # Logs de progresso em stderr
    VERBOSE: bool = _ler_bool("PERMCLASS_VERBOSE")

    @classmethod
    def validate(cls) -> bool:
        """Valida se as configurações são coerentes entre si"""
        limites = {
            "PERMCLASS_ORDER": cls.DEFAULT_ORDER,
            "PERMCLASS_ORACLE_CHECK": cls.ORACLE_CHECK_LENGTH,
            "PERMCLASS_MAX_SIMPLE_LENGTH": cls.MAX_SIMPLE_LENGTH,
            "PERMCLASS_MAX_ORACLE_LENGTH": cls.MAX_ORACLE_LENGTH,
            "PERMCLASS_WREATH_BASIS_CAP": cls.WREATH_BASIS_CAP,
            "PERMCLASS_MAX_SIMPLES": cls.MAX_SIMPLES,
            "PERMCLASS_MAX_SYSTEM_TERMS": cls.MAX_SYSTEM_TERMS,
            "PERMCLASS_ELIMINATION_DEGREE_CAP": cls.ELIMINATION_DEGREE_CAP,
        }
        for nome, valor in limites.items():
            if valor < 1:
                raise ValueError(f"{nome} deve ser positivo (recebido: {valor})")

        if cls.ORACLE_CHECK_LENGTH > cls.MAX_ORACLE_LENGTH:
            raise ValueError(
                "PERMCLASS_ORACLE_CHECK não pode exceder PERMCLASS_MAX_ORACLE_LENGTH "
                f"({cls.ORACLE_CHECK_LENGTH} > {cls.MAX_ORACLE_LENGTH})"
            )
        return True


# Instância global de configurações
settings = Settings()
