"""Exact computations with weight-three Hodge structures of Calabi-Yau type in sp(4)."""

from .matrices import Mat
from .rings import I, S, Gauss, Poly, Tower

__version__ = "0.1.0"

__all__ = ["Mat", "I", "S", "Gauss", "Poly", "Tower", "__version__"]
