"""Exact arithmetic toolkit for rational cuboids, their elliptic curves and angle identities."""
from .arith import Surd, int_sqrt
from .cuboid import CuboidSq, classify, cuboid_from_edges, cuboid_from_squares
from .pythagoras import GeneratorPair, PythTriple, generator_pairs

__version__ = "0.1.0"

__all__ = [
    "CuboidSq",
    "GeneratorPair",
    "PythTriple",
    "Surd",
    "classify",
    "cuboid_from_edges",
    "cuboid_from_squares",
    "generator_pairs",
    "int_sqrt",
]
