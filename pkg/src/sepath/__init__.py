"""Separating path systems for complete graphs."""

from .circulant import PathFamily, check_path, edge_type, rotations
from .verify import check_generator, verify_strong, verify_weak

__all__ = [
    "PathFamily",
    "check_generator",
    "check_path",
    "edge_type",
    "rotations",
    "verify_strong",
    "verify_weak",
]
