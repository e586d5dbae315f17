"""Canonical forms of complexes, for isomorphism tests and automorphism counts.

A flag is a tile, a starting corner and a reading direction. From a flag the
whole complex is read breadth first: every neighbour is entered at the far
end of the shared edge and read in the same direction. The canonical form is
the smallest such reading.
"""

from collections import deque
from typing import Dict, List, Optional, Tuple

from ...models import TilingComplex

Code = Tuple[Tuple[Tuple[int, str, str], ...], ...]
Flag = Tuple[int, int, int]


class _Reader:
    def __init__(self, t: TilingComplex, use_labels: bool):
        self.t = t
        self.use_labels = use_labels
        self.owner: Dict[Tuple[int, int], Tuple[int, int]] = {}
        for ti, tile in enumerate(t.tiles):
            for ci, edge in enumerate(tile.directed_edges()):
                self.owner[edge] = (ti, ci)

    def flags(self, orientation_preserving: bool) -> List[Flag]:
        directions = (1,) if orientation_preserving else (1, -1)
        return [(ti, ci, d) for ti, tile in enumerate(self.t.tiles) for ci in range(tile.size) for d in directions]

    def read(self, flag: Flag, bound: Optional[Code] = None) -> Optional[Code]:
        """The reading from ``flag``; None as soon as it exceeds ``bound``."""
        tiles = self.t.tiles
        numbering: Dict[int, int] = {}
        visited = {flag[0]}
        queue = deque([flag])
        code: List[Tuple[Tuple[int, str, str], ...]] = []
        while queue:
            ti, start, d = queue.popleft()
            tile = tiles[ti]
            n = tile.size
            row = []
            for k in range(n):
                ci = (start + d * k) % n
                corner = tile.corners[ci]
                edge = corner.edge if d == 1 else tile.corners[(ci - 1) % n].edge
                vid = numbering.setdefault(corner.vertex, len(numbering))
                row.append((vid, corner.angle, edge) if self.use_labels else (vid, "", ""))
            row = tuple(row)
            if bound is not None:
                position = len(code)
                if position < len(bound):
                    if row > bound[position]:
                        return None
                    if row < bound[position]:
                        bound = None
            code.append(row)
            for k in range(n):
                ci = (start + d * k) % n
                nxt = (ci + d) % n
                u, w = tile.corners[ci].vertex, tile.corners[nxt].vertex
                other = self.owner.get((w, u) if d == 1 else (u, w))
                if other is None or other[0] in visited:
                    continue
                # the neighbour is read from w, the far end of the shared edge, toward u
                oti = other[0]
                visited.add(oti)
                queue.append((oti, tiles[oti].vertices().index(w), d))
        return tuple(code)

    def minimum(self, orientation_preserving: bool) -> Tuple[Code, int]:
        best: Optional[Code] = None
        count = 0
        for flag in self.flags(orientation_preserving):
            code = self.read(flag, best)
            if code is None:
                continue
            if best is None or code < best:
                best, count = code, 1
            elif code == best:
                count += 1
        return best, count


def canonical_form(t: TilingComplex, use_labels: bool = True, orientation_preserving: bool = False) -> Code:
    """Smallest breadth-first reading over all flags."""
    return _Reader(t, use_labels).minimum(orientation_preserving)[0]


def automorphism_order(t: TilingComplex, orientation_preserving: bool = False, use_labels: bool = True) -> int:
    """Number of flags whose reading equals the canonical form."""
    if not t.tiles:
        return 0
    return _Reader(t, use_labels).minimum(orientation_preserving)[1]


def complex_isomorphic(
    t1: TilingComplex,
    t2: TilingComplex,
    angle_map: Optional[Dict[str, str]] = None,
    edge_map: Optional[Dict[str, str]] = None,
    use_labels: bool = True,
) -> bool:
    """Whether t1, relabelled by the maps, is isomorphic to t2 (reflections allowed)."""
    if t1.f != t2.f or t1.v != t2.v:
        return False
    if angle_map or edge_map:
        t1 = t1.relabeled(angle_map or {}, edge_map)
    return canonical_form(t1, use_labels) == canonical_form(t2, use_labels)
