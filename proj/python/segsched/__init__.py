"""Segmented, adaptable multi-application scheduling for heterogeneous multi-cores."""

from segsched._core import *  # noqa: F401,F403
from segsched._core import __doc__  # noqa: F401
