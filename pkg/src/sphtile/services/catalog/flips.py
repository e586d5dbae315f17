"""Flip modifications.

A flip takes a region of a realized tiling whose boundary is carried onto
itself by an isometry, and replaces the region by its image. The rest of the
tiling is untouched, so the result is again an edge-to-edge tiling by the same
tile whenever the edge labels along the boundary still agree. Each flip family
is found among the candidate regions by its vertex census.
"""

from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Set, Tuple

import numpy as np
from loguru import logger

from ...config import settings
from ...exceptions import CatalogError
from ...models import AngleValue, QuadClass, QuadSpec, TilingComplex, VertexCombo
from .. import quadsolve, sphercore
from ..avc import census_of
from .earth_maps import build_earth_map, earth_map_templates
from .platonic import dodecahedron_subdivision, platonic_subdivision
from .realize import realize_any
from .subdivision import diagonals_through, simple_triangular, triangular

Coords = Dict[int, np.ndarray]
Candidate = Tuple[TilingComplex, Coords]

FLIP_NAMES = (
    "BP′8", "QP′8", "QP′6",
    "E′△1", "E″△1", "E‴△1", "E′△2", "E′△3", "E′△4", "E′△5",
    "E′□4", "E′□5", "E″□5", "E′□2", "E″□2",
)


def _combo(k: int = 0, l: int = 0, m: int = 0, n: int = 0) -> VertexCombo:
    return VertexCombo(k=k, l=l, m=m, n=n)


# Region geometry


def boundary_cycle(t: TilingComplex, region: Set[int]) -> Optional[List[int]]:
    """Boundary vertices of a region in counter-clockwise order, or None if it is not one simple cycle."""
    inside = {edge for ti in region for edge in t.tiles[ti].directed_edges()}
    successor: Dict[int, int] = {}
    for u, w in inside:
        if (w, u) in inside:
            continue
        if u in successor:
            return None
        successor[u] = w
    if not successor:
        return None
    start = min(successor)
    cycle = [start]
    while True:
        nxt = successor.get(cycle[-1])
        if nxt is None:
            return None
        if nxt == start:
            break
        if nxt in cycle:
            return None
        cycle.append(nxt)
    return cycle if len(cycle) == len(successor) else None


def _labels_agree(t: TilingComplex) -> bool:
    labels = {}
    for tile in t.tiles:
        for (u, w), edge in zip(tile.directed_edges(), tile.edge_labels()):
            labels[(u, w)] = edge
    return all(labels.get((w, u)) == edge for (u, w), edge in labels.items())


def flip_region(t: TilingComplex, coords: Coords, region: Set[int], tol: Optional[float] = None) -> List[Candidate]:
    """Every tiling obtained by moving the region with a non-trivial isometry of its boundary."""
    tol = settings.placement_tol * 100 if tol is None else tol
    cycle = boundary_cycle(t, region)
    if cycle is None or len(region) == t.f:
        return []
    m = len(cycle)
    pts = [coords[v] for v in cycle]
    interior = sorted({v for ti in region for v in t.tiles[ti].vertices()} - set(cycle))
    fresh = max(coords) + 1
    results: List[Candidate] = []
    for d in (1, -1):
        for s in range(m):
            if d == 1 and s == 0:
                continue
            image = [(s + d * i) % m for i in range(m)]
            p2, q2 = pts[image[0]], pts[image[1]]
            if abs(sphercore.arc_length(pts[0], pts[1]) - sphercore.arc_length(p2, q2)) > tol:
                continue
            g = sphercore.isometry_between(pts[0], pts[1], p2, q2, proper=(d == 1))
            if any(float(np.linalg.norm(g @ pts[i] - pts[image[i]])) > tol for i in range(m)):
                continue
            mapping = {cycle[i]: cycle[image[i]] for i in range(m)}
            new_coords = {v: x for v, x in coords.items() if v not in interior}
            for k, v in enumerate(interior):
                mapping[v] = fresh + k
                new_coords[fresh + k] = g @ coords[v]
            tiles = []
            for ti, tile in enumerate(t.tiles):
                if ti in region:
                    tile = tile.renumbered(mapping)
                    if d == -1:
                        tile = tile.reversed()
                tiles.append(tile)
            flipped = TilingComplex(tiles=tuple(tiles), name=t.name)
            if not _labels_agree(flipped):
                continue
            compact, renumbering = flipped.compacted()
            results.append((compact, {renumbering[v]: x for v, x in new_coords.items() if v in renumbering}))
    return results


# Candidate regions


def windows(group_size: int, groups: int, length: int, starts: Optional[Iterable[int]] = None) -> List[Set[int]]:
    """Runs of ``length`` consecutive groups of tiles, cyclically."""
    starts = range(groups) if starts is None else starts
    return [
        {((k + j) % groups) * group_size + i for j in range(length) for i in range(group_size)}
        for k in starts
    ]


def hemispheres(t: TilingComplex, coords: Coords, tol: float = 1e-7) -> List[Set[int]]:
    """Regions cut off by great circles made of edges."""
    regions: List[Set[int]] = []
    seen: List[np.ndarray] = []
    for tile in t.tiles:
        for u, w in tile.directed_edges():
            normal = np.cross(coords[u], coords[w])
            if np.linalg.norm(normal) < tol:
                continue
            normal = normal / np.linalg.norm(normal)
            if any(min(np.linalg.norm(normal - n), np.linalg.norm(normal + n)) < 1e-6 for n in seen):
                continue
            seen.append(normal)
            side = []
            for other in t.tiles:
                heights = [float(np.dot(normal, coords[v])) for v in other.vertices()]
                if min(heights) >= -tol:
                    side.append(1)
                elif max(heights) <= tol:
                    side.append(-1)
                else:
                    break
            else:
                region = {ti for ti, sign in enumerate(side) if sign > 0}
                if 0 < len(region) < t.f:
                    regions.append(region)
    return regions


def adjacent_pairs(t: TilingComplex) -> List[Set[int]]:
    pairs = []
    for ti in range(t.f):
        for ci in range(t.tiles[ti].size):
            across = t.neighbor_across(ti, ci)
            if across is not None and across[0] > ti:
                pairs.append({ti, across[0]})
    return pairs


def flip_candidates(t: TilingComplex, coords: Coords, regions: Sequence[Set[int]],
                    target: Set[VertexCombo]) -> Iterator[Candidate]:
    """Flips of the regions whose vertex types are exactly ``target``, in region order."""
    for region in regions:
        for candidate in flip_region(t, coords, region):
            if set(census_of(candidate[0])) == target:
                yield candidate


def find_flip(t: TilingComplex, coords: Coords, regions: Sequence[Set[int]], target: Set[VertexCombo]) -> Candidate:
    """The first flip of one of the regions whose vertex types are exactly ``target``."""
    for candidate in flip_candidates(t, coords, regions, target):
        return candidate
    raise CatalogError("no flip gives the requested vertices", tiling=t.name,
                       target=", ".join(sorted(str(c) for c in target)))


# Flip families


def _realized(t: TilingComplex, specs: Sequence[QuadSpec]) -> Coords:
    r = realize_any(t, specs)
    return {v: np.array(x) for v, x in r.coords.items()}


def _require(condition: bool, message: str, **details) -> None:
    if not condition:
        raise CatalogError(message, **details)


# f = step·q + offset for the flips parametrized by q
FLIP_F = {
    "E′△1": (8, 4), "E″△1": (8, 4), "E‴△1": (8, 4), "E′△2": (8, 4), "E′△3": (4, 0),
    "E′△4": (8, 4), "E′△5": (16, 8), "E′□4": (4, 2), "E′□5": (16, 8), "E″□5": (16, 8),
}


def q_for_f(flip: str, f: int) -> int:
    """The q of a flip with f tiles; f must have the flip's form."""
    step, offset = FLIP_F[flip]
    if f <= offset or (f - offset) % step:
        form = f"{step}q+{offset}" if offset else f"{step}q"
        raise CatalogError(f"{flip} needs f = {form}", f=f)
    return (f - offset) // step


def _q(params: Dict, smallest: int = 1, flip: Optional[str] = None) -> int:
    if "q" not in params and "f" in params and flip in FLIP_F:
        q = q_for_f(flip, int(params["f"]))
    else:
        q = int(params.get("q", smallest))
    _require(q >= smallest, f"q must be at least {smallest}", q=q)
    return q


def _earth_map_flip(family: str, p: int, group_size: int, length: int, target: Set[VertexCombo],
                    **template_params) -> Tuple[TilingComplex, QuadSpec, Coords]:
    base = build_earth_map(family, p)
    specs = earth_map_templates(family, p, **template_params)
    coords = _realized(base, specs)
    groups = base.f // group_size
    flipped, new_coords = find_flip(base, coords, windows(group_size, groups, length), target)
    return flipped, specs[0], new_coords


def flip_e_square_4(q: int) -> Tuple[TilingComplex, QuadSpec]:
    """Half of E□4 with 2q+1 timezones, turned over."""
    p = 2 * q + 1
    target = {_combo(1, 2), _combo(q + 1, 1)}
    flipped, spec, _ = _earth_map_flip("E□4", p, 1, p, target)
    return flipped.named(f"E′□4(q={q})"), spec


def flip_e_square_2(s: int, t: int, f: int, double: bool = False) -> Tuple[TilingComplex, QuadSpec]:
    """t disjoint strips of s timezones of E□2 turned over.

    With ``double`` the strips are bounded by γ+δ = sα instead of β = sα.
    """
    _require(f >= 6 and f % 2 == 0, "f must be even and at least 6", f=f)
    _require(Fraction(f, 8) < s < Fraction(3 * f, 8), "s must satisfy f/8 < s < 3f/8", s=s, f=f)
    _require(t >= 1 and s * t <= f // 2, "s·t must not exceed f/2", s=s, t=t, f=f)
    p = f // 2
    beta = Fraction(4 * s, f) if not double else 2 - Fraction(4 * s, f)
    base = build_earth_map("E□2", p)
    specs = earth_map_templates("E□2", p, beta=beta)
    coords = _realized(base, specs)
    current = base
    for done in range(1, t + 1):
        if double:
            target = {_combo(0, 1, 1, 1), _combo(s, 1), _combo(p - s * done, 0, done, done)}
        else:
            target = {_combo(0, 1, 1, 1), _combo(p - s * done, done), _combo(s, 0, 1, 1)}
        region = windows(2, p, s, starts=[(done - 1) * s])
        current, coords = find_flip(current, coords, region, target)
    name = f"E″□2(s′={s}, t={t})" if double else f"E′□2(s={s}, t={t})"
    return current.named(name), specs[0]


def flip_e_triangle_1(q: int, extra: int = 0) -> Tuple[TilingComplex, QuadSpec]:
    """Half of E△1 with 2q+1 timezones turned over; ``extra`` further flips of two-tile rectangles."""
    p = 2 * q + 1
    f = 4 * p
    params = {} if extra == 0 else {"beta": Fraction(1, 2) - Fraction(2, f)}
    target = {_combo(0, 2, 2), _combo(2 * q + 1, 1, 1)}
    flipped, spec, coords = _earth_map_flip("E△1", p, 2, p, target, **params)
    if extra == 1:
        target = {_combo(0, 2, 2), _combo(2 * q + 1, 1, 1), _combo(1, 3, 1), _combo(2 * q, 0, 2)}
        flipped, coords = find_flip(flipped, coords, adjacent_pairs(flipped), target)
    elif extra == 2:
        flipped = _both_rectangles(flipped, coords, q)
    return flipped.named(f"E{'′″‴'[extra]}△1(q={q})"), spec


def _both_rectangles(t: TilingComplex, coords: Coords, q: int) -> TilingComplex:
    """Flip the two rectangles on the meridians of E′△1.

    For f = 12 every pair of tiles is a square, so a first flip with the right
    vertices need not leave the second rectangle in place; each is tried.
    """
    first = {_combo(0, 2, 2), _combo(2 * q + 1, 1, 1), _combo(1, 3, 1), _combo(2 * q, 0, 2)}
    second = {_combo(0, 2, 2), _combo(1, 3, 1), _combo(2 * q, 0, 2)}
    for once, once_coords in flip_candidates(t, coords, adjacent_pairs(t), first):
        for twice, _ in flip_candidates(once, once_coords, adjacent_pairs(once), second):
            return twice
    raise CatalogError("no pair of rectangle flips gives the requested vertices", tiling=t.name,
                       target=", ".join(sorted(str(c) for c in second)))


def flip_e_triangle_3(q: int) -> Tuple[TilingComplex, QuadSpec]:
    p = 2 * q
    _require(p >= 3, "E′△3 needs q ≥ 2", q=q)
    target = {_combo(0, 4), _combo(q, 2)}
    flipped, spec, _ = _earth_map_flip("E△3", p, 2, q, target)
    return flipped.named(f"E′△3(q={q})"), spec


def flip_e_square_5(q: int, double: bool = False) -> Tuple[TilingComplex, QuadSpec]:
    """Half of E□5 with 2q+1 timezones turned over, about either of its two axes."""
    p = 2 * q + 1
    target = {_combo(1, 2), _combo(2, 0, 0, 2), _combo(0, 0, 4), _combo(1, 0, 0, 2 * q + 2)}
    if not double:
        target.add(_combo(0, 2, 0, 2 * q))
    flipped, spec, _ = _earth_map_flip("E□5", p, 2, 4 * q + 2, target)
    return flipped.named(f"E{'″' if double else '′'}□5(q={q})"), spec


def _induced_from_e_square_4(kind: str, q: int) -> Tuple[TilingComplex, QuadSpec]:
    """E′△2, E′△4 and E′△5 subdivide E′□4 the way E△2, E△4 and E△5 subdivide E□4."""
    rhombi, _ = flip_e_square_4(q)
    p = 2 * q + 1
    if kind == "E′△2":
        result = simple_triangular(rhombi, diagonals_through(rhombi, "α"), {("half", "α"): "β", ("apex", "β"): "α"})
        family = "E△2"
    elif kind == "E′△4":
        result = simple_triangular(rhombi, diagonals_through(rhombi, "β"), {("half", "β"): "β", ("apex", "α"): "α"})
        family = "E△4"
    else:
        result = triangular(rhombi, QuadClass.TRIANGLE, center="γ", corner_map={"α": "α", "β": "β"})
        family = "E△5"
    spec = earth_map_templates(family, p)[0]
    return result.named(f"{kind}(q={q})"), spec


def flip_platonic(name: str) -> Tuple[TilingComplex, QuadSpec]:
    if name == "QP′6":
        t = dodecahedron_subdivision({_combo(3), _combo(1, 2), _combo(2, 0, 0, 2), _combo(0, 2, 0, 2), _combo(0, 0, 4)})
        pi = AngleValue.pi
        specs = quadsolve.solve_general_quad(pi(2, 3), pi(2, 3), pi(1, 2), pi(1, 3))
        realize_any(t, specs)
        return t.named("QP′6"), specs[0]
    if name == "QP′8":
        base, specs = platonic_subdivision("Q", 8)
        coords = _realized(base, specs)
        target = {_combo(3), _combo(0, 4), _combo(0, 2, 2), _combo(0, 0, 4)}
        flipped, _ = find_flip(base, coords, hemispheres(base, coords), target)
        return flipped.named("QP′8"), specs[0]
    base, specs = platonic_subdivision("B", 8)
    coords = _realized(base, specs)
    target = {_combo(0, 8), _combo(6), _combo(0, 4, 2), _combo(0, 0, 4)}
    flipped, _ = find_flip(base, coords, hemispheres(base, coords), target)
    # name the quarter angle α, as for the other tilings with an α⁸ vertex
    flipped = flipped.relabeled({"α": "β", "β": "α"}, {"b": "c", "c": "b"})
    pi = AngleValue.pi
    return flipped.named("BP′8"), quadsolve.solve_general_triangle(pi(1, 4), pi(1, 3), pi(1, 2))


def apply_flip(flip: str, base: Optional[TilingComplex] = None, **params) -> Tuple[TilingComplex, QuadSpec]:
    """Build the flip modification ``flip``.

    Earth map flips take ``q``; E′□2 and E″□2 take ``f``, ``s`` and ``t``. A
    given ``base`` must be the complex the flip starts from and is only checked
    against the rebuilt base.
    """
    if flip not in FLIP_NAMES:
        raise CatalogError(f"unknown flip '{flip}'", known=list(FLIP_NAMES))
    logger.info(f"Applying flip {flip} with {params or 'defaults'}")
    if flip in ("BP′8", "QP′8", "QP′6"):
        result = flip_platonic(flip)
    elif flip in ("E′□2", "E″□2"):
        for key in ("f", "s", "t"):
            _require(key in params, f"{flip} needs the parameter {key}")
        result = flip_e_square_2(int(params["s"]), int(params["t"]), int(params["f"]), double=flip == "E″□2")
    elif flip == "E′□4":
        result = flip_e_square_4(_q(params, flip=flip))
    elif flip in ("E′□5", "E″□5"):
        result = flip_e_square_5(_q(params, flip=flip), double=flip == "E″□5")
    elif flip in ("E′△1", "E″△1", "E‴△1"):
        result = flip_e_triangle_1(_q(params, flip=flip), extra="′″‴".index(flip[1]))
    elif flip == "E′△3":
        result = flip_e_triangle_3(_q(params, 2, flip))
    else:
        result = _induced_from_e_square_4(flip, _q(params, flip=flip))
    if base is not None and base.f != result[0].f:
        raise CatalogError(f"{flip} does not apply to a tiling with {base.f} tiles", expected=result[0].f)
    return result
