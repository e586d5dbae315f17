"""Subdivisions of tilings.

Every operation keeps the vertex ids of the input and numbers new vertices
after them: tile centres first, then edge midpoints.
"""

from collections import Counter
from itertools import product
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from loguru import logger

from ...exceptions import CatalogError
from ...models import QuadClass, TilingComplex, VertexCombo
from .builders import edge_midpoint_ids, labeled_tile, two_coloring

LabelMap = Dict[Tuple[str, str], str]


def _faces(t: TilingComplex) -> List[List[int]]:
    return [tile.vertices() for tile in t.tiles]


def _next_id(t: TilingComplex) -> int:
    vertices = t.vertices()
    return (max(vertices) + 1) if vertices else 0


def triangular(
    t: TilingComplex,
    quad_class: QuadClass = QuadClass.ISOSCELES_TRIANGLE,
    center: str = "α",
    corner: str = "β",
    corner_map: Optional[Dict[str, str]] = None,
) -> TilingComplex:
    """Join a new centre to every corner: n triangles per n-gon.

    Corners take ``corner`` unless ``corner_map`` renames the original labels.
    """
    base = _next_id(t)
    tiles = []
    for ti, tile in enumerate(t.tiles):
        c = base + ti
        vs = tile.vertices()
        labels = tile.angle_labels()
        n = len(vs)
        for i in range(n):
            j = (i + 1) % n
            if corner_map is None:
                tri_labels = [center, corner, corner]
            else:
                tri_labels = [center, corner_map[labels[i]], corner_map[labels[j]]]
            tiles.append(labeled_tile([c, vs[i], vs[j]], tri_labels, quad_class))
    return TilingComplex(tiles=tuple(tiles), name=f"T{t.name}")


def barycentric(
    t: TilingComplex,
    center: str = "α",
    vertex: str = "β",
    midpoint: str = "γ",
    quad_class: QuadClass = QuadClass.TRIANGLE,
) -> TilingComplex:
    """Centre, corners and edge midpoints: 2n triangles per n-gon."""
    base = _next_id(t)
    faces = _faces(t)
    mids = edge_midpoint_ids(faces, base + len(faces))
    tiles = []
    for ti, vs in enumerate(faces):
        c = base + ti
        n = len(vs)
        for i in range(n):
            j = (i + 1) % n
            m = mids[frozenset((vs[i], vs[j]))]
            tiles.append(labeled_tile([c, vs[i], m], [center, vertex, midpoint], quad_class))
            tiles.append(labeled_tile([c, m, vs[j]], [center, midpoint, vertex], quad_class))
    return TilingComplex(tiles=tuple(tiles), name=f"B{t.name}")


def quadrilateral(
    t: TilingComplex,
    labels: Sequence[str] = ("α", "β", "α", "β"),
    quad_class: QuadClass = QuadClass.RHOMBUS,
    mirror_class: Optional[Dict[int, int]] = None,
) -> TilingComplex:
    """One quadrilateral (corner, next midpoint, centre, previous midpoint) per corner.

    ``labels`` name those four positions. Corners coloured 1 in
    ``mirror_class`` swap the two midpoint labels.
    """
    base = _next_id(t)
    faces = _faces(t)
    mids = edge_midpoint_ids(faces, base + len(faces))
    tiles = []
    for ti, vs in enumerate(faces):
        c = base + ti
        n = len(vs)
        for i in range(n):
            v = vs[i]
            m_next = mids[frozenset((v, vs[(i + 1) % n]))]
            m_prev = mids[frozenset((v, vs[(i - 1) % n]))]
            quad_labels = list(labels)
            if mirror_class is not None and mirror_class.get(v, 0) == 1:
                quad_labels[1], quad_labels[3] = quad_labels[3], quad_labels[1]
            tiles.append(labeled_tile([v, m_next, c, m_prev], quad_labels, quad_class))
    return TilingComplex(tiles=tuple(tiles), name=f"Q{t.name}")


def quadricentric(
    t: TilingComplex, vertex: str = "α", center: str = "β", quad_class: QuadClass = QuadClass.RHOMBUS
) -> TilingComplex:
    """One quadrilateral per edge, joining its ends to the centres on either side."""
    base = _next_id(t)
    owner: Dict[Tuple[int, int], int] = {}
    for ti, tile in enumerate(t.tiles):
        for edge in tile.directed_edges():
            owner[edge] = ti
    tiles = []
    done = set()
    for ti, tile in enumerate(t.tiles):
        for u, w in tile.directed_edges():
            key = frozenset((u, w))
            if key in done:
                continue
            done.add(key)
            other = owner.get((w, u))
            if other is None:
                raise CatalogError("tiling has an unmatched edge", edge=[u, w])
            tiles.append(labeled_tile([u, base + other, w, base + ti], [vertex, center, vertex, center], quad_class))
    return TilingComplex(tiles=tuple(tiles), name=f"C{t.name}")


def vertex_coloring(t: TilingComplex) -> Optional[Dict[int, int]]:
    """Two-colouring of the edge graph, if it is bipartite."""
    adjacency: Dict[int, set] = {v: set() for v in t.vertices()}
    for tile in t.tiles:
        for u, w in tile.directed_edges():
            adjacency[u].add(w)
            adjacency[w].add(u)
    return two_coloring(adjacency)


# Simple subdivisions


def simple_triangular(
    t: TilingComplex,
    diagonals: Optional[Sequence[int]] = None,
    label_map: Optional[LabelMap] = None,
    quad_class: QuadClass = QuadClass.ISOSCELES_TRIANGLE,
) -> TilingComplex:
    """Cut every quadrilateral along a diagonal.

    ``diagonals[i]`` is 0 to join corners 0 and 2 of tile i, 1 to join 1 and 3.
    The apex of each triangle is relabelled ``label_map[("apex", old)]`` and
    the diagonal ends ``label_map[("half", old)]``.
    Without choices every tile is cut from corner 0 and labels are kept.
    """
    if diagonals is None:
        diagonals = [0] * t.f
    if label_map is None:
        names = {label for tile in t.tiles for label in tile.angle_labels()}
        label_map = {(role, label): label for role in ("apex", "half") for label in names}
    if len(diagonals) != t.f:
        raise CatalogError("one diagonal choice per tile is required", f=t.f, given=len(diagonals))
    tiles = []
    for tile, choice in zip(t.tiles, diagonals):
        if tile.size != 4:
            raise CatalogError("simple triangular subdivision needs quadrilaterals")
        vs, labels = tile.vertices(), tile.angle_labels()
        start = 0 if choice == 0 else 1
        for apex in ((start + 1) % 4, (start + 3) % 4):
            ends = ((apex - 1) % 4, (apex + 1) % 4)
            tri = [ends[0], apex, ends[1]]
            tri_labels = [
                label_map[("half", labels[ends[0]])],
                label_map[("apex", labels[apex])],
                label_map[("half", labels[ends[1]])],
            ]
            tiles.append(labeled_tile([vs[i] for i in tri], tri_labels, quad_class))
    return TilingComplex(tiles=tuple(tiles), name=f"S{t.name}")


def diagonals_through(t: TilingComplex, label: str) -> List[int]:
    """For each tile, the diagonal whose ends carry ``label``."""
    choices = []
    for tile in t.tiles:
        labels = tile.angle_labels()
        if labels[0] == label or labels[2] == label:
            choices.append(0)
        elif labels[1] == label or labels[3] == label:
            choices.append(1)
        else:
            raise CatalogError(f"tile has no corner {label}")
    return choices


def simple_quadrilateral(t: TilingComplex, selection: Optional[Dict[int, Tuple[int, int]]] = None) -> TilingComplex:
    """Cut every pentagon from the midpoint of a selected edge to the opposite corner.

    Each pentagon (v0, …, v4) with selected edge v0v1 becomes the general
    quadrilaterals (m, v1, v2, v3) and (m, v3, v4, v0), labelled so that m is
    γ, v3 is δ twice, and the half edges at m are b.
    """
    if selection is None:
        matchings = perfect_matchings(t)
        if not matchings:
            raise CatalogError("the pentagons cannot be paired across edges")
        selection = matchings[0]
    edge_owner: Dict[frozenset, List[int]] = {}
    for ti in range(t.f):
        if ti not in selection:
            raise CatalogError("every pentagon needs a selected edge", tile=ti)
        edge_owner.setdefault(frozenset(selection[ti]), []).append(ti)
    if any(len(owners) != 2 for owners in edge_owner.values()):
        raise CatalogError("selected edges must be selected by both adjacent pentagons")
    base = _next_id(t)
    mids: Dict[frozenset, int] = {}
    tiles = []
    for ti, tile in enumerate(t.tiles):
        vs = tile.vertices()
        if len(vs) != 5:
            raise CatalogError("simple quadrilateral subdivision needs pentagons")
        u, w = selection[ti]
        if u not in vs or w not in vs:
            raise CatalogError("selected edge is not on the tile", tile=ti)
        i = vs.index(u)
        if vs[(i + 1) % 5] != w:
            i = vs.index(w)
            if vs[(i + 1) % 5] != u:
                raise CatalogError("selected edge is not on the tile", tile=ti)
        v0, v1, v2, v3, v4 = (vs[(i + k) % 5] for k in range(5))
        key = frozenset((v0, v1))
        m = mids.setdefault(key, base + len(mids))
        tiles.append(labeled_tile([m, v1, v2, v3], ["γ", "β", "α", "δ"], QuadClass.GENERAL))
        tiles.append(labeled_tile([m, v3, v4, v0], ["γ", "δ", "α", "β"], QuadClass.GENERAL))
    return TilingComplex(tiles=tuple(tiles), name=f"S{t.name}")


def tile_adjacency(t: TilingComplex) -> Dict[int, Dict[int, Tuple[int, int]]]:
    """tile → neighbouring tile → the shared edge as directed in the first tile."""
    owner = {}
    for ti, tile in enumerate(t.tiles):
        for edge in tile.directed_edges():
            owner[edge] = ti
    result: Dict[int, Dict[int, Tuple[int, int]]] = {ti: {} for ti in range(t.f)}
    for (u, w), ti in owner.items():
        other = owner.get((w, u))
        if other is not None:
            result[ti][other] = (u, w)
    return result


def perfect_matchings(t: TilingComplex) -> List[Dict[int, Tuple[int, int]]]:
    """Every way to pair each tile with a neighbour, as edge selections."""
    adjacency = tile_adjacency(t)
    results: List[Dict[int, Tuple[int, int]]] = []

    def extend(chosen: Dict[int, Tuple[int, int]]) -> None:
        free = [ti for ti in range(t.f) if ti not in chosen]
        if not free:
            results.append(dict(chosen))
            return
        first = free[0]
        for other in sorted(adjacency[first]):
            if other in chosen:
                continue
            edge = adjacency[first][other]
            chosen[first] = edge
            chosen[other] = (edge[1], edge[0])
            extend(chosen)
            del chosen[first]
            del chosen[other]

    extend({})
    return results


def selection_with_census(
    t: TilingComplex, census: Sequence[VertexCombo], census_of: Callable[[TilingComplex], Counter]
) -> TilingComplex:
    """The first simple quadrilateral subdivision whose vertex types are exactly ``census``."""
    target = set(census)
    for selection in perfect_matchings(t):
        result = simple_quadrilateral(t, selection)
        if set(census_of(result)) == target:
            return result
    raise CatalogError("no edge selection gives the requested vertices",
                       census=", ".join(str(c) for c in census))


def all_diagonal_choices(t: TilingComplex) -> List[List[int]]:
    return [list(choice) for choice in product((0, 1), repeat=t.f)]


def subdivide(t: TilingComplex, kind: str, **options) -> TilingComplex:
    """Dispatch on the subdivision name."""
    kinds = {
        "triangular": triangular,
        "barycentric": barycentric,
        "quadrilateral": quadrilateral,
        "quadricentric": quadricentric,
        "simple_triangular": simple_triangular,
        "simple_quadrilateral": simple_quadrilateral,
    }
    if kind not in kinds:
        raise CatalogError(f"unknown subdivision '{kind}'", known=sorted(kinds))
    if kind in ("quadrilateral", "quadricentric", "simple_triangular") and any(
        tile.size > 5 for tile in t.tiles
    ):
        raise CatalogError(f"{kind} subdivision does not apply to this tiling")
    result = kinds[kind](t, **options)
    logger.debug(f"{kind} subdivision: {t.f} → {result.f} tiles")
    return result
