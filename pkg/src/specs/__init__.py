"""Módulo de especificações de classe"""
from .loader import spec_loader, SpecLoader

__all__ = ["spec_loader", "SpecLoader"]
