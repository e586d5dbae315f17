"""Catalog of tilings: constructions, realization and identification."""

from .earth_maps import build_earth_map, earth_map_template, earth_map_templates
from .flips import FLIP_NAMES, apply_flip
from .isomorphism import automorphism_order, canonical_form, complex_isomorphic
from .platonic import build_platonic, platonic_subdivision, platonic_template, simple_triangular_cube
from .realize import realize, realize_any
from .registry import (
    FAMILY_ALIASES,
    build_family,
    census,
    default_family,
    expected_census,
    family_names,
    normalize_name,
    resolve_alias,
)
from .search import search_tilings
from .sporadic import SPORADIC, build_e_square_2_triple, build_sporadic, e_square_2_triple_tilings, realize_sporadic
from .subdivision import subdivide

__all__ = [
    "build_earth_map",
    "earth_map_template",
    "earth_map_templates",
    "FLIP_NAMES",
    "apply_flip",
    "automorphism_order",
    "canonical_form",
    "complex_isomorphic",
    "build_platonic",
    "platonic_subdivision",
    "platonic_template",
    "simple_triangular_cube",
    "realize",
    "realize_any",
    "FAMILY_ALIASES",
    "build_family",
    "census",
    "default_family",
    "expected_census",
    "family_names",
    "normalize_name",
    "resolve_alias",
    "search_tilings",
    "SPORADIC",
    "build_e_square_2_triple",
    "build_sporadic",
    "e_square_2_triple_tilings",
    "realize_sporadic",
    "subdivide",
]
