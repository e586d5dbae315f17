"""Utilities package."""

from .cache import ResultCache, cached_result
from .logger import setup_logging

__all__ = [
    "ResultCache",
    "cached_result",
    "setup_logging",
]
