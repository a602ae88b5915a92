"""Maps, verifiers and metrics for the wandering domains of z cos z + 2 pi."""

from ._core import *  # noqa: F401,F403
from ._core import WanderingError, N0

__all__ = [name for name in dir() if not name.startswith("_")]
