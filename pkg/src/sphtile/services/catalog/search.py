"""Depth-first search for tilings by copies of one tile.

Tiles are laid across free edges of the growing patch, one at a time, at the
most constrained vertex first. A placement survives when its corners fit into
the free angle at every vertex, the vertex labels can still complete to one of
the allowed vertex types, edge labels agree, and it overlaps no placed tile.
"""

import math
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Sequence, Set, Tuple

import numpy as np
from loguru import logger

from ...config import settings
from ...exceptions import CatalogError
from ...models import GeometricRealization, QuadSpec, Tile, TilingComplex, VertexCombo
from .. import quadsolve, sphercore
from .builders import matched_edge_labels
from .isomorphism import canonical_form

TWO_PI = 2.0 * math.pi
ANGLE_TOL = 1e-7


def _reference(x: np.ndarray) -> np.ndarray:
    return sphercore.E_X if abs(float(x[2])) > 0.9 else sphercore.E_Z


@dataclass
class _Patch:
    points: List[np.ndarray] = field(default_factory=list)
    tiles: List[Tile] = field(default_factory=list)
    polygons: List[List[np.ndarray]] = field(default_factory=list)
    edges: Dict[Tuple[int, int], str] = field(default_factory=dict)
    sectors: Dict[int, List[Tuple[float, float]]] = field(default_factory=dict)
    labels: Dict[int, List[str]] = field(default_factory=dict)

    def copy(self) -> "_Patch":
        return _Patch(
            points=list(self.points),
            tiles=list(self.tiles),
            polygons=list(self.polygons),
            edges=dict(self.edges),
            sectors={v: list(s) for v, s in self.sectors.items()},
            labels={v: list(s) for v, s in self.labels.items()},
        )

    def used(self, vertex: int) -> float:
        return sum(width for _, width in self.sectors.get(vertex, []))

    def free_edges(self) -> List[Tuple[int, int]]:
        return [(u, w) for (u, w) in self.edges if (w, u) not in self.edges]

    def find(self, x: np.ndarray, tol: float) -> Optional[int]:
        for vid, y in enumerate(self.points):
            if float(np.linalg.norm(x - y)) < tol:
                return vid
        return None


class TilingSearch:
    """Search for edge-to-edge tilings by ``spec`` with f tiles and the given vertex types."""

    def __init__(self, spec: QuadSpec, f: int, combos: Sequence[VertexCombo],
                 node_limit: Optional[int] = None):
        self.spec = spec
        self.f = f
        self.combos = list(combos)
        self.node_limit = node_limit or settings.search_node_limit
        self.merge_tol = settings.vertex_merge_tol
        self.template = list(quadsolve.build_tile(spec).vertices)
        self.n = len(self.template)
        self.cls = spec.quad_class
        self.widths = {label: spec.angle(label).radians for label in self.cls.angle_names}
        self.smallest = min(self.widths.values())
        self.nodes = 0

    # placement

    def _readings(self, patch: _Patch, edge: Tuple[int, int]) -> Iterator[Tuple[List[np.ndarray], List[str], List[str], int]]:
        """Ways to lay the template on the far side of a free edge."""
        u, w = edge
        label = patch.edges[edge]
        xw, xu = patch.points[w], patch.points[u]
        length = sphercore.arc_length(xw, xu)
        n = self.n
        for d in (-1, 1):
            for j in range(n):
                edges = matched_edge_labels(self.cls, j, d)
                if edges[0] != label:
                    continue
                p, q = self.template[j], self.template[(j + d) % n]
                if abs(sphercore.arc_length(p, q) - length) > self.merge_tol:
                    continue
                g = sphercore.isometry_between(p, q, xw, xu, proper=(d == -1))
                points = [g @ self.template[(j + d * i) % n] for i in range(n)]
                labels = [self.cls.corner_labels[(j + d * i) % n] for i in range(n)]
                yield points, labels, edges, d

    def _fits(self, labels: List[str], closed: bool) -> bool:
        have = Counter(labels)
        for combo in self.combos:
            if all(combo.count(l) >= k for l, k in have.items()):
                if not closed or all(combo.count(l) == have.get(l, 0) for l in "αβγδ"):
                    return True
        return False

    def _place(self, patch: _Patch, points: List[np.ndarray], labels: List[str], edges: List[str],
               d: int) -> Optional[_Patch]:
        ids: List[int] = []
        fresh: List[int] = []
        for x in points:
            vid = patch.find(x, self.merge_tol)
            if vid is None:
                vid = len(patch.points) + len(fresh)
                fresh.append(vid)
            ids.append(vid)
        if len(set(ids)) != self.n:
            return None
        n = self.n
        for i in range(n):
            a, b = ids[i], ids[(i + 1) % n]
            if (a, b) in patch.edges:
                return None
            if (b, a) in patch.edges and patch.edges[(b, a)] != edges[i]:
                return None

        new = patch.copy()
        new.points.extend(points[ids.index(v)] for v in fresh)

        for i, vid in enumerate(ids):
            x = new.points[vid]
            start = sphercore.direction_angle(x, _reference(x), points[(i + 1) % n])
            width = self.widths[labels[i]]
            for s, wdt in new.sectors.get(vid, []):
                gap = (s - start) % TWO_PI
                if gap < width - ANGLE_TOL or TWO_PI - gap < wdt - ANGLE_TOL:
                    return None
            new.sectors.setdefault(vid, []).append((start, width))
            new.labels.setdefault(vid, []).append(labels[i])
            remaining = TWO_PI - new.used(vid)
            if remaining < -ANGLE_TOL:
                return None
            closed = remaining < ANGLE_TOL
            if not closed and remaining < self.smallest - ANGLE_TOL:
                return None
            if not self._fits(new.labels[vid], closed):
                return None

        # overlap with placed tiles
        for (a, b) in patch.edges:
            if a > b and (b, a) in patch.edges:
                continue
            for i in range(n):
                c, e = ids[i], ids[(i + 1) % n]
                if {a, b} & {c, e}:
                    continue
                if sphercore.arcs_intersect(patch.points[a], patch.points[b], points[i], points[(i + 1) % n]):
                    return None
        for vid, x in enumerate(patch.points):
            if vid not in ids and sphercore.contains_point(points, x, self.merge_tol):
                return None
        for vid in fresh:
            x = new.points[vid]
            if any(sphercore.contains_point(poly, x, self.merge_tol) for poly in patch.polygons):
                return None

        for i in range(n):
            new.edges[(ids[i], ids[(i + 1) % n])] = edges[i]
        new.tiles.append(Tile.build(ids, labels, edges, mirrored=d == -1))
        new.polygons.append(points)
        return new

    def _seed(self) -> _Patch:
        n = self.n
        points = [self.template[(-i) % n] for i in range(n)]
        labels = [self.cls.corner_labels[(-i) % n] for i in range(n)]
        patch = self._place(_Patch(), points, labels, matched_edge_labels(self.cls, 0, -1), -1)
        if patch is None:
            raise CatalogError("the tile cannot start a tiling with these vertex types")
        return patch

    # search

    def _next_edge(self, patch: _Patch, free: List[Tuple[int, int]]) -> Tuple[int, int]:
        return min(free, key=lambda e: (min(TWO_PI - patch.used(e[0]), TWO_PI - patch.used(e[1])), e))

    def run(self, target: Optional[Set[VertexCombo]] = None, max_results: int = 1) -> List[GeometricRealization]:
        """Distinct tilings (up to isomorphism), at most ``max_results`` of them."""
        results: List[GeometricRealization] = []
        forms = set()
        stack = [self._seed()]
        self.nodes = 0
        while stack and len(results) < max_results:
            patch = stack.pop()
            self.nodes += 1
            if self.nodes > self.node_limit:
                logger.warning(f"tiling search stopped after {self.node_limit} nodes")
                break
            free = patch.free_edges()
            if not free:
                if len(patch.tiles) != self.f:
                    continue
                t = TilingComplex(tiles=tuple(patch.tiles))
                census = {t.vertex_combo(v) for v in t.vertices()}
                if target is not None and census != target:
                    continue
                form = canonical_form(t)
                if form in forms:
                    continue
                forms.add(form)
                coords = {vid: tuple(float(c) for c in x) for vid, x in enumerate(patch.points)}
                results.append(GeometricRealization(complex=t, coords=coords, tile_template=self.spec))
                logger.debug(f"search found a tiling after {self.nodes} nodes")
                continue
            if len(patch.tiles) >= self.f:
                continue
            edge = self._next_edge(patch, free)
            children = []
            for points, labels, edges, d in self._readings(patch, edge):
                child = self._place(patch, points, labels, edges, d)
                if child is not None:
                    children.append(child)
            stack.extend(reversed(children))
        return results


def search_tilings(spec: QuadSpec, f: int, combos: Sequence[VertexCombo],
                   target: Optional[Set[VertexCombo]] = None, max_results: int = 1,
                   node_limit: Optional[int] = None) -> List[GeometricRealization]:
    """Tilings of the sphere by f copies of ``spec`` whose vertices are among ``combos``.

    With ``target`` only tilings using exactly those vertex types are kept.
    """
    search = TilingSearch(spec, f, combos, node_limit)
    found = search.run(target, max_results)
    logger.info(f"search over f={f} explored {search.nodes} nodes, found {len(found)} tiling(s)")
    return found
