"""Simultaneous core partitions and rational Motzkin paths."""

from ._core import *  # noqa: F401,F403
from ._core import DomainError, ExactnessError, run_cli

__all__ = [name for name in dir() if not name.startswith("_")]
