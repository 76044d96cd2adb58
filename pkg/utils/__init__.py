"""Utility modules."""

from .display import DisplayFormatter
from .log import setup_logging

__all__ = ["DisplayFormatter", "setup_logging"]
