"""Sporadic tilings by almost equilateral quadrilaterals, and E‴□2.

None of them comes from a construction on a polyhedron, so each is found by
searching for a tiling with its vertex types, then cached.
"""

from typing import Dict, List, NamedTuple, Tuple

from loguru import logger

from ...exceptions import CatalogError, SolveError
from ...models import AngleValue, GeometricRealization, QuadSpec, TilingComplex, VertexCombo
from ...utils.cache import cached_result
from .. import quadsolve
from .isomorphism import automorphism_order, canonical_form
from .search import search_tilings


class Sporadic(NamedTuple):
    f: int
    angles: Tuple[str, ...]
    vertices: Tuple[str, ...]
    rotations: int = 0


# angles in units of π; symbolic entries are solved by quadsolve
SPORADIC: Dict[str, Sporadic] = {
    "S12 1": Sporadic(12, ("2/3", "2−2γ", "tan γ = −√3/√5", "γ−1/3"), ("α³", "βγ²", "αβδ²")),
    "S16 1": Sporadic(16, ("1/2", "2−2γ", "tan γ = 2−√5−√(7−3√5)", "γ−1/4"), ("α⁴", "βγ²", "αβδ²")),
    "S16 2": Sporadic(16, ("1/2", "cos β = (√2−1)/2", "3/4", "1−β"), ("α⁴", "αγ²", "β²δ²")),
    "S16 3": Sporadic(16, ("1/2", "1", "1/4", "1/2"), ("α⁴", "βδ²", "αβγ²"), rotations=4),
    "S′16 3": Sporadic(16, ("1/2", "1", "1/4", "1/2"), ("α⁴", "βδ²", "αβγ²"), rotations=8),
    "S16 4": Sporadic(16, ("1/2", "3/4", "tan γ = 2+√2", "1−γ"), ("αβ²", "α²γδ", "γ²δ²")),
    "S36 5": Sporadic(36, ("4/9", "7/9", "1/3", "5/9"), ("αβ²", "α²δ²", "αγ³δ", "γδ³", "γ⁶")),
    "S36 6": Sporadic(36, ("1/3", "5/9", "7/18", "5/6"), ("αδ²", "αβ³", "α²βγ²", "γ³δ")),
}


def sporadic_angles(name: str) -> List[AngleValue]:
    """(α, β, γ, δ) of a sporadic tile."""
    pi = AngleValue.pi
    if name == "S12 1":
        gamma = quadsolve.s12_1_gamma()
        return [pi(2, 3), pi(2) - gamma * 2, gamma, gamma - pi(1, 3)]
    if name == "S16 1":
        gamma = quadsolve.s16_1_gamma()
        return [pi(1, 2), pi(2) - gamma * 2, gamma, gamma - pi(1, 4)]
    if name == "S16 2":
        beta = quadsolve.s16_2_beta()
        return [pi(1, 2), beta, pi(3, 4), pi(1) - beta]
    if name == "S16 4":
        gamma = quadsolve.s16_4_gamma()
        return [pi(1, 2), pi(3, 4), gamma, pi(1) - gamma]
    if name in SPORADIC:
        return [AngleValue.parse(text + "π") for text in SPORADIC[name].angles]
    raise CatalogError(f"unknown sporadic tiling '{name}'", known=list(SPORADIC))


def sporadic_template(name: str) -> QuadSpec:
    try:
        return quadsolve.solve_almost_equilateral(*sporadic_angles(name))
    except SolveError as exc:
        logger.error(f"{name} has no tile: {exc.message}")
        raise CatalogError(f"{name} tile does not exist: {exc.message}")


def _combos(texts) -> List[VertexCombo]:
    return [VertexCombo.parse(text) for text in texts]


def _found(name: str, realizations: List[GeometricRealization]) -> GeometricRealization:
    if not realizations:
        raise CatalogError(f"search found no tiling for {name}")
    r = realizations[0]
    return r.model_copy(update={"complex": r.complex.named(name)})


@cached_result
def realize_sporadic(name: str) -> GeometricRealization:
    """The sporadic tiling ``name``, realized."""
    if name not in SPORADIC:
        raise CatalogError(f"unknown sporadic tiling '{name}'", known=list(SPORADIC))
    entry = SPORADIC[name]
    spec = sporadic_template(name)
    combos = _combos(entry.vertices)
    if not entry.rotations:
        return _found(name, search_tilings(spec, entry.f, combos, target=set(combos)))
    # S16 3 and S′16 3 share tile and vertices; their rotation groups differ
    found = search_tilings(spec, entry.f, combos, target=set(combos), max_results=8)
    matching = [r for r in found if automorphism_order(r.complex, orientation_preserving=True) == entry.rotations]
    return _found(name, matching)


def e_square_2_triple_angles(q: int) -> List[AngleValue]:
    """E‴□2 with f = 6q + 4: α = 4/f, β = 4/3 − 4/(3f), γ = 2/f, δ = 2/3 − 2/(3f)."""
    f = 6 * q + 4
    pi = AngleValue.pi
    return [pi(4, f), pi(4, 3) - pi(4, 3 * f), pi(2, f), pi(2, 3) - pi(2, 3 * f)]


def e_square_2_triple_vertices(q: int) -> List[VertexCombo]:
    return [VertexCombo(l=1, m=1, n=1), VertexCombo(m=1, n=3), VertexCombo(k=q + 1, l=1),
            VertexCombo(k=q, l=1, m=2)]


E_SQUARE_2_TRIPLE_VARIANTS = 3


@cached_result
def e_square_2_triple_tilings(q: int) -> List[GeometricRealization]:
    """The non-equivalent E‴□2 tilings with f = 6q + 4, in canonical order.

    They differ in how the two hexagons left between three copies of A_q are
    cut into two tiles each.
    """
    if q < 1:
        raise CatalogError("E‴□2 needs q ≥ 1", q=q)
    try:
        spec = quadsolve.solve_almost_equilateral(*e_square_2_triple_angles(q))
    except SolveError as exc:
        raise CatalogError(f"E‴□2 tile does not exist for q={q}: {exc.message}", q=q)
    combos = e_square_2_triple_vertices(q)
    found = search_tilings(spec, 6 * q + 4, combos, target=set(combos), max_results=E_SQUARE_2_TRIPLE_VARIANTS)
    if len(found) < E_SQUARE_2_TRIPLE_VARIANTS:
        logger.warning(f"E‴□2 search found {len(found)} of {E_SQUARE_2_TRIPLE_VARIANTS} tilings for q={q}")
    return sorted(found, key=lambda r: canonical_form(r.complex))


def build_e_square_2_triple(q: int, variant: int = 1) -> GeometricRealization:
    """E‴□2 with f = 6q + 4 tiles; ``variant`` picks one of the three hexagon cuts."""
    if not 1 <= variant <= E_SQUARE_2_TRIPLE_VARIANTS:
        raise CatalogError(f"E‴□2 variant must be 1 to {E_SQUARE_2_TRIPLE_VARIANTS}", variant=variant)
    tilings = e_square_2_triple_tilings(q)
    if len(tilings) < variant:
        raise CatalogError(f"search found no tiling for E‴□2(q={q}) variant {variant}", found=len(tilings))
    return _found(f"E‴□2(q={q}, variant={variant})", [tilings[variant - 1]])


def build_sporadic(name: str) -> Tuple[TilingComplex, QuadSpec]:
    """The sporadic tiling ``name`` and its solved tile."""
    r = realize_sporadic(name)
    return r.complex, r.tile_template
