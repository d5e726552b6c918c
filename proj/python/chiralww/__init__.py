"""Weisskopf-Wigner reduction and racemization dynamics of a chiral doublet."""

from ._core import *  # noqa: F401,F403
from ._core import ChiralError, __doc__  # noqa: F401

__version__ = "0.1.0"
