"""Spectral kernel classifiers, smoothness estimation, and rate experiments."""

from ._kernellab import *  # noqa: F401,F403
from ._kernellab import __doc__ as _core_doc  # noqa: F401

__version__ = "0.1.0"
