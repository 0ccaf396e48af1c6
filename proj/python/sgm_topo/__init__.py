"""Exact homology and special generic map obstructions."""

from ._core import *  # noqa: F401,F403
from ._core import __doc__  # noqa: F401
