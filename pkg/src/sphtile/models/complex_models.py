"""Combinatorial tilings, their realizations and catalog identifiers."""

from collections import defaultdict
from typing import Any, Dict, List, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from .tile_models import QuadSpec, VertexCombo


class Corner(BaseModel):
    """One corner of a tile: vertex, angle label, label of the outgoing edge."""

    model_config = ConfigDict(frozen=True)

    vertex: int
    angle: str
    edge: str


class Tile(BaseModel):
    """A tile as a counter-clockwise cyclic sequence of corners.

    ``mirrored`` records that the tile carries its labels in the reverse
    order of the tile template (the tile is a mirror image of it).
    """

    model_config = ConfigDict(frozen=True)

    corners: Tuple[Corner, ...]
    mirrored: bool = False

    @property
    def size(self) -> int:
        return len(self.corners)

    def vertices(self) -> List[int]:
        return [c.vertex for c in self.corners]

    def angle_labels(self) -> List[str]:
        return [c.angle for c in self.corners]

    def edge_labels(self) -> List[str]:
        return [c.edge for c in self.corners]

    def directed_edges(self) -> List[Tuple[int, int]]:
        vs = self.vertices()
        return [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]

    def reversed(self) -> "Tile":
        """The same tile traversed the other way round."""
        n = len(self.corners)
        order = [0] + list(range(n - 1, 0, -1))
        corners = []
        for j in order:
            previous = self.corners[(j - 1) % n]
            corners.append(Corner(vertex=self.corners[j].vertex, angle=self.corners[j].angle, edge=previous.edge))
        return Tile(corners=tuple(corners), mirrored=not self.mirrored)

    def renumbered(self, mapping: Dict[int, int]) -> "Tile":
        return Tile(
            corners=tuple(c.model_copy(update={"vertex": mapping[c.vertex]}) for c in self.corners),
            mirrored=self.mirrored,
        )

    @classmethod
    def build(cls, vertices, angles, edges, mirrored: bool = False) -> "Tile":
        corners = tuple(Corner(vertex=v, angle=a, edge=e) for v, a, e in zip(vertices, angles, edges))
        return cls(corners=corners, mirrored=mirrored)


class TilingComplex(BaseModel):
    """An edge-to-edge tiling, combinatorially."""

    model_config = ConfigDict(frozen=True)

    tiles: Tuple[Tile, ...]
    name: str = ""

    @property
    def f(self) -> int:
        return len(self.tiles)

    @property
    def tile_size(self) -> int:
        return self.tiles[0].size if self.tiles else 0

    def vertices(self) -> List[int]:
        return sorted({c.vertex for t in self.tiles for c in t.corners})

    @property
    def v(self) -> int:
        return len(self.vertices())

    @property
    def e(self) -> int:
        return len(self.undirected_edges())

    def corners_at(self) -> Dict[int, List[Tuple[int, int]]]:
        """vertex → [(tile index, corner index)]."""
        table: Dict[int, List[Tuple[int, int]]] = defaultdict(list)
        for ti, tile in enumerate(self.tiles):
            for ci, corner in enumerate(tile.corners):
                table[corner.vertex].append((ti, ci))
        return dict(table)

    def directed_edges(self) -> Dict[Tuple[int, int], List[Tuple[int, int]]]:
        """(u, v) → [(tile, corner)] for each tile edge running from u to v."""
        table: Dict[Tuple[int, int], List[Tuple[int, int]]] = defaultdict(list)
        for ti, tile in enumerate(self.tiles):
            for ci, edge in enumerate(tile.directed_edges()):
                table[edge].append((ti, ci))
        return dict(table)

    def undirected_edges(self) -> Dict[frozenset, List[Tuple[int, int]]]:
        table: Dict[frozenset, List[Tuple[int, int]]] = defaultdict(list)
        for ti, tile in enumerate(self.tiles):
            for ci, (u, v) in enumerate(tile.directed_edges()):
                table[frozenset((u, v))].append((ti, ci))
        return dict(table)

    def neighbor_across(self, ti: int, ci: int) -> Optional[Tuple[int, int]]:
        """The (tile, corner) on the other side of edge ci of tile ti."""
        u, v = self.tiles[ti].directed_edges()[ci]
        for other in self.directed_edges().get((v, u), []):
            if other[0] != ti:
                return other
        return None

    def vertex_labels(self, vertex: int) -> List[str]:
        return [self.tiles[ti].corners[ci].angle for ti, ci in self.corners_at()[vertex]]

    def vertex_combo(self, vertex: int) -> VertexCombo:
        return VertexCombo.from_labels(self.vertex_labels(vertex))

    def degrees(self) -> Dict[int, int]:
        return {vid: len(cs) for vid, cs in self.corners_at().items()}

    def renumbered(self, mapping: Dict[int, int], name: Optional[str] = None) -> "TilingComplex":
        return TilingComplex(
            tiles=tuple(t.renumbered(mapping) for t in self.tiles),
            name=self.name if name is None else name,
        )

    def compacted(self) -> Tuple["TilingComplex", Dict[int, int]]:
        """Renumber vertices 0..v−1 in order of first appearance."""
        mapping: Dict[int, int] = {}
        for tile in self.tiles:
            for vid in tile.vertices():
                if vid not in mapping:
                    mapping[vid] = len(mapping)
        return self.renumbered(mapping), mapping

    def named(self, name: str) -> "TilingComplex":
        return self.model_copy(update={"name": name})

    def relabeled(self, angle_map: Dict[str, str], edge_map: Optional[Dict[str, str]] = None) -> "TilingComplex":
        """Apply a renaming of angle (and edge) labels to every corner."""
        edge_map = edge_map or {}
        tiles = []
        for tile in self.tiles:
            corners = tuple(
                Corner(vertex=c.vertex, angle=angle_map.get(c.angle, c.angle), edge=edge_map.get(c.edge, c.edge))
                for c in tile.corners
            )
            tiles.append(Tile(corners=corners, mirrored=tile.mirrored))
        return TilingComplex(tiles=tuple(tiles), name=self.name)


class GeometricRealization(BaseModel):
    """Coordinates on the unit sphere for every vertex of a complex."""

    model_config = ConfigDict(frozen=True)

    complex: TilingComplex
    coords: Dict[int, Tuple[float, float, float]]
    tile_template: QuadSpec

    def point(self, vertex: int) -> np.ndarray:
        return np.array(self.coords[vertex], dtype=float)

    def tile_points(self, ti: int) -> np.ndarray:
        return np.array([self.coords[v] for v in self.complex.tiles[ti].vertices()], dtype=float)


class FamilyId(BaseModel):
    """A catalog family name plus its parameters."""

    model_config = ConfigDict(frozen=True)

    name: str
    params: Dict[str, Any] = Field(default_factory=dict)

    def __str__(self) -> str:
        if not self.params:
            return self.name
        inner = ", ".join(f"{k}={v}" for k, v in sorted(self.params.items()))
        return f"{self.name}({inner})"

    def __hash__(self) -> int:
        return hash((self.name, tuple(sorted((k, str(v)) for k, v in self.params.items()))))


class CensusEntry(BaseModel):
    """One row of the catalog listing."""

    name: str
    display: str
    kind: str
    group: str
    f: str
    angles: str
    vertices: str
    aliases: List[str] = Field(default_factory=list)
    defaults: Dict[str, Any] = Field(default_factory=dict)
