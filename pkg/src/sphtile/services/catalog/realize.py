"""Coordinates for a labelled complex from its tile template."""

from collections import deque
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from loguru import logger

from ...config import settings
from ...exceptions import RealizationError, SolveError
from ...models import GeometricRealization, QuadSpec, Tile, TilingComplex
from .. import quadsolve, sphercore
from .builders import matched_edge_labels, template_matchings

MIRROR = np.diag([1.0, 1.0, -1.0])


def tile_matchings(tile: Tile, spec: QuadSpec) -> List[Tuple[int, int]]:
    """Template readings (start, direction) agreeing with both the corner and edge labels."""
    return [
        (s, d) for s, d in template_matchings(spec.quad_class, tile.angle_labels())
        if matched_edge_labels(spec.quad_class, s, d) == tile.edge_labels()
    ]


def _placed_points(template: Sequence[np.ndarray], n: int, s: int, d: int, g: np.ndarray) -> List[np.ndarray]:
    return [g @ template[(s + d * i) % n] for i in range(n)]


def _consistent(tile: Tile, points: List[np.ndarray], coords: Dict[int, np.ndarray], tol: float) -> bool:
    for vid, x in zip(tile.vertices(), points):
        if vid in coords and float(np.linalg.norm(coords[vid] - x)) > tol:
            return False
    return sphercore.orientation_sign(points) > 0


def realize(t: TilingComplex, spec: QuadSpec, tol: Optional[float] = None) -> GeometricRealization:
    """Place the first tile from the template, then every neighbour across shared edges.

    Each placement must agree with the coordinates already known; otherwise the
    template does not tile this complex and RealizationError is raised.
    """
    tol = settings.placement_tol if tol is None else tol
    template = list(quadsolve.build_tile(spec).vertices)
    n = len(template)
    if t.tile_size != n:
        raise RealizationError(f"{spec.quad_class.value} tiles cannot realize {t.tile_size}-gons")
    matchings = [tile_matchings(tile, spec) for tile in t.tiles]
    for ti, found in enumerate(matchings):
        if not found:
            raise RealizationError("tile labels do not fit the template", tile=ti,
                                   labels="".join(t.tiles[ti].angle_labels()))

    coords: Dict[int, np.ndarray] = {}
    first = t.tiles[0]
    s, d = matchings[0][0]
    g = np.eye(3) if d == -1 else MIRROR
    for vid, x in zip(first.vertices(), _placed_points(template, n, s, d, g)):
        coords[vid] = x

    placed = {0}
    queue = deque([0])
    while queue:
        ti = queue.popleft()
        for ci in range(n):
            across = t.neighbor_across(ti, ci)
            if across is None:
                raise RealizationError("complex has an unmatched edge", tile=ti, corner=ci)
            other, oci = across
            if other in placed:
                continue
            tile = t.tiles[other]
            vs = tile.vertices()
            iu, iw = oci, (oci + 1) % n
            for s, d in matchings[other]:
                p, q = template[(s + d * iu) % n], template[(s + d * iw) % n]
                xu, xw = coords[vs[iu]], coords[vs[iw]]
                if abs(sphercore.arc_length(p, q) - sphercore.arc_length(xu, xw)) > tol:
                    continue
                g = sphercore.isometry_between(p, q, xu, xw, proper=(d == -1))
                points = _placed_points(template, n, s, d, g)
                if _consistent(tile, points, coords, tol):
                    break
            else:
                logger.error(f"placement of tile {other} disagrees with its neighbours")
                raise RealizationError("tile placement disagrees with known coordinates",
                                       tile=other, complex=t.name)
            for vid, x in zip(vs, points):
                coords.setdefault(vid, x)
            placed.add(other)
            queue.append(other)

    if len(placed) != t.f:
        raise RealizationError("complex is not connected", placed=len(placed), f=t.f)
    logger.debug(f"realized {t.name or 'complex'} with {len(coords)} vertices")
    return GeometricRealization(
        complex=t,
        coords={vid: tuple(float(c) for c in x) for vid, x in coords.items()},
        tile_template=spec,
    )


def realize_any(t: TilingComplex, specs: Sequence[QuadSpec]) -> GeometricRealization:
    """The first candidate template that realizes the complex."""
    last: Optional[Exception] = None
    for spec in specs:
        try:
            return realize(t, spec)
        except (RealizationError, SolveError) as exc:
            logger.debug(f"template rejected for {t.name}: {exc.message}")
            last = exc
    raise RealizationError(f"no candidate tile realizes {t.name}",
                           reason=getattr(last, "message", "no candidates"))
