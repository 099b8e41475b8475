"""Entanglement criteria, distillability tests and named state families.

Matrices are numpy complex arrays; ``dims`` lists the local dimensions with
subsystem 0 leftmost.
"""

from ._entglkit import *  # noqa: F401,F403
from ._entglkit import EntglkitError

__all__ = [name for name in dir() if not name.startswith("_")]
