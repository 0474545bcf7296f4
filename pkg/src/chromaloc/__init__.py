"""Finite localisations of spectra, K(n) profiles of central maps, and the
p-adic valuation identities behind them, as exact computations."""

from .core import INF, Prime
from .kernels import DEFAULT as KERNEL_BACKEND

__version__ = "0.1.0"

__all__ = ["INF", "Prime", "KERNEL_BACKEND", "__version__"]
