"""Constructions of separating families."""

from .best import construct, construct_best
from .catalog import catalog_generator
from .fixing import fixing_paths
from .forest import build_linear_forest, connect_forest, f_separator_path, rotations_plus_fixings
from .primes import prime_generator, prime_plus_one
from .theorem import theorem_family

__all__ = [
    "build_linear_forest",
    "catalog_generator",
    "connect_forest",
    "construct",
    "construct_best",
    "f_separator_path",
    "fixing_paths",
    "prime_generator",
    "prime_plus_one",
    "rotations_plus_fixings",
    "theorem_family",
]
