"""Módulo principal src"""
from .commands import EnumerationPipeline, get_all_commands
from .config import settings
from .specs import spec_loader

__all__ = [
    "EnumerationPipeline",
    "get_all_commands",
    "settings",
    "spec_loader",
]
