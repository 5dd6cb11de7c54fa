"""Combinatorics of Brauer G-sets and their self-injective special biserial algebras."""

from .core import (
    G, GINV, TAU, BrauerError, BrauerGSet, InvalidBrauerGSet, InvalidWalk, NormalForm,
    SpecialWalk, Walk, connected_components, make_bgset, nakayama, parse_walk, validate,
    vertex_stats, walk_normal_form, walks_homotopic,
)

__all__ = [
    "G", "GINV", "TAU", "BrauerError", "BrauerGSet", "InvalidBrauerGSet", "InvalidWalk",
    "NormalForm", "SpecialWalk", "Walk", "connected_components", "make_bgset", "nakayama",
    "parse_walk", "validate", "vertex_stats", "walk_normal_form", "walks_homotopic",
]
