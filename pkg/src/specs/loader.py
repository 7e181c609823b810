"""
Módulo para carregar especificações de classe de arquivos JSON
"""
import json
from pathlib import Path
from typing import Any, Dict, Optional

from pydantic import ValidationError

from ..classes import ClassSpec
from ..errors import ClassSpecError


def _mensagens(erro: ValidationError) -> str:
    partes = []
    for item in erro.errors():
        local = ".".join(str(p) for p in item.get("loc", ())) or "(raiz)"
        partes.append(f"{local}: {item.get('msg', '')}")
    return "; ".join(partes)


class SpecLoader:
    """Classe para carregar especificações de classe e o catálogo de exemplos"""

    def __init__(self, specs_dir: Optional[str] = None):
        """
        Inicializa o carregador de especificações

        Args:
            specs_dir: Diretório do catálogo de exemplos (padrão: este pacote)
        """
        if specs_dir is None:
            self.specs_dir = Path(__file__).parent
        else:
            self.specs_dir = Path(specs_dir)

    def load_json(self, filepath) -> Any:
        """
        Carrega um arquivo JSON

        Args:
            filepath: Caminho do arquivo

        Returns:
            Conteúdo decodificado
        """
        filepath = Path(filepath)
        try:
            with open(filepath, "r", encoding="utf-8") as f:
                return json.load(f)
        except FileNotFoundError:
            raise ClassSpecError(f"Arquivo de especificação não encontrado: {filepath}")
        except json.JSONDecodeError as e:
            raise ClassSpecError(f"Erro ao decodificar JSON do arquivo {filepath}: {e}")

    def parse_spec(self, dados: Dict[str, Any], origem: str = "<dados>") -> ClassSpec:
        """Valida um dicionário contra o modelo ClassSpec"""
        if not isinstance(dados, dict):
            raise ClassSpecError(f"Especificação em {origem} deve ser um objeto JSON")
        try:
            return ClassSpec.model_validate(dados)
        except ValidationError as e:
            raise ClassSpecError(f"Especificação inválida em {origem}: {_mensagens(e)}")

    def load_spec_file(self, filepath) -> ClassSpec:
        """Carrega e valida um arquivo de especificação de classe"""
        return self.parse_spec(self.load_json(filepath), str(filepath))

    def get_examples(self) -> Dict[str, ClassSpec]:
        """Carrega o catálogo de classes de exemplo"""
        catalogo = self.load_json(self.specs_dir / "example_classes.json")
        return {
            nome: self.parse_spec({"name": nome, **dados}, f"example_classes.json:{nome}")
            for nome, dados in catalogo.items()
        }

    def get_example(self, nome: str) -> ClassSpec:
        exemplos = self.get_examples()
        if nome not in exemplos:
            raise ClassSpecError(
                f"Exemplo desconhecido: '{nome}'. Disponíveis: {', '.join(sorted(exemplos))}"
            )
        return exemplos[nome]


# Instância global do carregador de especificações
spec_loader = SpecLoader()
