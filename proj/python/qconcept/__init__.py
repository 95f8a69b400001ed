"""Gaussian concept states versus fuzzy metric spaces."""

from ._qconcept import *  # noqa: F401,F403
from ._qconcept import __doc__  # noqa: F401

__version__ = "0.1.0"
