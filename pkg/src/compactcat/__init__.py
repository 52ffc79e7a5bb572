"""Strongly compact closed categories as matrices over involutive semirings."""
from .matcat import Morphism, TensorObject, compose, identity, symmetry, tensor
from .semiring import Bool, CRat, NNRat, get_semiring

__version__ = "0.1.0"

__all__ = [
    "Bool", "CRat", "Morphism", "NNRat", "TensorObject", "compose", "get_semiring",
    "identity", "symmetry", "tensor",
]
