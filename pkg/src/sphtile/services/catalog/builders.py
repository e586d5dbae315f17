"""Helpers for assembling labelled complexes."""

from collections import defaultdict
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from ...exceptions import CatalogError
from ...models import QuadClass, Tile
from .. import sphercore


def template_matchings(quad_class: QuadClass, angle_labels: Sequence[str]) -> List[Tuple[int, int]]:
    """Every (start, direction) reading the tile template along the given corner labels.

    Corner i of the tile corresponds to template corner (start + direction·i) mod n.
    """
    corners = quad_class.corner_labels
    n = len(corners)
    if len(angle_labels) != n:
        return []
    found = []
    for direction in (1, -1):
        for start in range(n):
            if all(corners[(start + direction * i) % n] == angle_labels[i] for i in range(n)):
                found.append((start, direction))
    return found


def matched_edge_labels(quad_class: QuadClass, start: int, direction: int) -> List[str]:
    """Tile edge labels (edge i joins corner i to i+1) for a template matching."""
    edges = quad_class.edge_labels
    n = len(edges)
    if direction == 1:
        return [edges[(start + i) % n] for i in range(n)]
    return [edges[(start - i - 1) % n] for i in range(n)]


def labeled_tile(vertices: Sequence[int], angle_labels: Sequence[str], quad_class: QuadClass) -> Tile:
    """A tile whose edge labels follow from its corner labels.

    Readings along the template are preferred over mirrored ones.
    """
    matchings = template_matchings(quad_class, angle_labels)
    if not matchings:
        raise CatalogError(
            f"corner labels {''.join(angle_labels)} do not fit a {quad_class.value} tile",
            labels=list(angle_labels),
        )
    start, direction = matchings[0]
    return Tile.build(vertices, angle_labels, matched_edge_labels(quad_class, start, direction),
                      mirrored=direction == -1)


def uniform_tile(vertices: Sequence[int], angle: str = "α", edge: str = "a") -> Tile:
    return Tile.build(vertices, [angle] * len(vertices), [edge] * len(vertices))


def faces_around(tiles: Sequence[Sequence[int]]) -> Dict[int, List[int]]:
    """Tiles around each vertex in counter-clockwise order.

    After tile F = (…, prev, v, next, …) comes the tile holding the directed edge (v, prev).
    """
    owner: Dict[Tuple[int, int], int] = {}
    for ti, face in enumerate(tiles):
        n = len(face)
        for i in range(n):
            owner[(face[i], face[(i + 1) % n])] = ti
    result: Dict[int, List[int]] = {}
    seen = set()
    for ti, face in enumerate(tiles):
        for v in face:
            if v in seen:
                continue
            seen.add(v)
            order = [ti]
            current = ti
            while True:
                cur = tiles[current]
                prev = cur[(list(cur).index(v) - 1) % len(cur)]
                nxt = owner.get((v, prev))
                if nxt is None or nxt == ti:
                    break
                order.append(nxt)
                current = nxt
                if len(order) > len(tiles):
                    raise CatalogError("vertex neighbourhood does not close", vertex=v)
            result[v] = order
    return result


def dual_faces(tiles: Sequence[Sequence[int]]) -> List[List[int]]:
    """Faces of the dual: one per vertex, listing the surrounding tiles counter-clockwise."""
    around = faces_around(tiles)
    return [around[v] for v in sorted(around)]


def faces_from_points(points: Sequence[np.ndarray], edge_length: float, size: int, tol: float = 1e-6) -> List[List[int]]:
    """Regular faces of a convex polyhedron inscribed in the sphere, counter-clockwise from outside.

    Faces are found as ``size``-cycles of edges of the given chord length whose
    vertices share a supporting plane.
    """
    n = len(points)
    adj: Dict[int, List[int]] = defaultdict(list)
    for i in range(n):
        for j in range(i + 1, n):
            if abs(float(np.linalg.norm(points[i] - points[j])) - edge_length) < tol:
                adj[i].append(j)
                adj[j].append(i)
    faces = []
    seen = set()

    def extend(path: List[int]) -> None:
        if len(path) == size:
            if path[0] in adj[path[-1]]:
                key = frozenset(path)
                normal = sphercore.unit(sum(points[v] for v in path))
                height = float(np.dot(points[path[0]], normal))
                if key not in seen and all(abs(float(np.dot(points[v], normal)) - height) < tol for v in path):
                    seen.add(key)
                    faces.append(list(path))
            return
        for w in adj[path[-1]]:
            if w not in path and w > path[0]:
                extend(path + [w])

    for start in range(n):
        extend([start])
    oriented = []
    for face in faces:
        pts = [points[v] for v in face]
        centre = sum(pts)
        if float(np.dot(np.cross(pts[1] - pts[0], pts[2] - pts[1]), centre)) < 0:
            face = [face[0]] + face[:0:-1]
        oriented.append(face)
    return sorted(oriented, key=lambda f: sorted(f))


def edge_midpoint_ids(tiles: Sequence[Sequence[int]], first_id: int) -> Dict[frozenset, int]:
    """Fresh vertex ids for the edges of a complex, in order of first appearance."""
    mids: Dict[frozenset, int] = {}
    for face in tiles:
        n = len(face)
        for i in range(n):
            key = frozenset((face[i], face[(i + 1) % n]))
            if key not in mids:
                mids[key] = first_id + len(mids)
    return mids


def two_coloring(adjacency: Dict[int, Iterable[int]]) -> Optional[Dict[int, int]]:
    """A proper two-colouring of a connected graph, or None if it has an odd cycle."""
    colors: Dict[int, int] = {}
    for root in sorted(adjacency):
        if root in colors:
            continue
        colors[root] = 0
        queue = [root]
        while queue:
            u = queue.pop(0)
            for w in adjacency[u]:
                if w not in colors:
                    colors[w] = 1 - colors[u]
                    queue.append(w)
                elif colors[w] == colors[u]:
                    return None
    return colors
