"""Módulo de configurações"""
from .settings import settings, Settings
from . import console

__all__ = ["settings", "Settings", "console"]
