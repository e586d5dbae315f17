"""Tiling documents and their JSON, OBJ and SVG renderings."""

import json
from datetime import datetime, timezone
from fractions import Fraction
from typing import Dict, List, Optional

import numpy as np
from loguru import logger
from pydantic import ValidationError

from .. import __version__
from ..config import settings
from ..exceptions import DocumentError, GeometryError
from ..models import (
    ANGLE_LABELS,
    GeometricRealization,
    FamilyId,
    QuadClass,
    QuadSpec,
    Tile,
    TilingComplex,
    TilingDocument,
    angle_from_document,
    format_angle,
)
from ..services import sphercore

FORMATS = ("json", "obj", "svg")

_ANGLE_FIELDS = dict(zip(ANGLE_LABELS, ("alpha", "beta", "gamma", "delta")))
_NET_SIZE = 400.0
_NET_MARGIN = 20.0
_ARC_SEGMENTS = 64


def _coordinate(x: float) -> float:
    return float(f"{x:.15g}")


def document_for(r: GeometricRealization, family: Optional[FamilyId] = None, with_coords: bool = True) -> TilingDocument:
    """The document of a realized tiling, vertices renumbered 0..v−1."""
    t, mapping = r.complex.compacted()
    spec = r.tile_template
    template: Dict[str, object] = {
        "class": spec.quad_class.value,
        "angles": {label: format_angle(value) for label, value in spec.angle_values().items()},
        "edges": {label: format_angle(value) for label, value in spec.edge_values().items()},
    }
    coords = None
    if with_coords:
        coords = [[0.0, 0.0, 0.0] for _ in mapping]
        for old, new in mapping.items():
            coords[new] = [_coordinate(c) for c in r.coords[old]]
    provenance = {
        "tool": "sphtile",
        "version": __version__,
        "tolerance": settings.tolerance,
        "closure_tol": settings.closure_tol,
    }
    if not settings.canonical_output:
        provenance["created"] = datetime.now(timezone.utc).isoformat()
    family = family or FamilyId(name=t.name or "custom")
    return TilingDocument(
        family=family.name,
        params={k: str(v) if isinstance(v, Fraction) else v for k, v in family.params.items()},
        template=template,
        complex=[[[c.vertex, c.angle, c.edge] for c in tile.corners] for tile in t.tiles],
        mirrored=[tile.mirrored for tile in t.tiles],
        coords=coords,
        provenance=provenance,
    )


def load_document(text: str) -> TilingDocument:
    try:
        return TilingDocument.from_json(text)
    except (json.JSONDecodeError, ValidationError) as exc:
        logger.error(f"Malformed tiling document: {exc}")
        raise DocumentError(f"malformed tiling document: {exc}")


def template_from_document(doc: TilingDocument) -> QuadSpec:
    try:
        quad_class = QuadClass.parse(str(doc.template["class"]))
        fields = {_ANGLE_FIELDS[label]: angle_from_document(value) for label, value in doc.template["angles"].items()}
        fields.update({label: angle_from_document(value) for label, value in doc.template.get("edges", {}).items()})
        return QuadSpec(quad_class=quad_class, **fields)
    except (KeyError, ValueError, ValidationError) as exc:
        raise DocumentError(f"malformed tile template: {exc}")


def complex_from_document(doc: TilingDocument) -> TilingComplex:
    mirrored = doc.mirrored or [False] * len(doc.complex)
    if len(mirrored) != len(doc.complex):
        raise DocumentError("one mirror flag per tile expected", tiles=len(doc.complex), flags=len(mirrored))
    try:
        tiles = tuple(
            Tile.build([int(c[0]) for c in row], [str(c[1]) for c in row], [str(c[2]) for c in row], mirrored=flag)
            for row, flag in zip(doc.complex, mirrored)
        )
    except (IndexError, TypeError, ValueError) as exc:
        raise DocumentError(f"malformed tile list: {exc}")
    return TilingComplex(tiles=tiles, name=doc.family)


def realization_from_document(doc: TilingDocument) -> GeometricRealization:
    t = complex_from_document(doc)
    if doc.coords is None:
        raise DocumentError("the document has no coordinates", family=doc.family)
    if any(vid >= len(doc.coords) or vid < 0 for vid in t.vertices()):
        raise DocumentError("a tile refers to a vertex without coordinates", family=doc.family)
    coords = {vid: tuple(float(c) for c in doc.coords[vid]) for vid in t.vertices()}
    return GeometricRealization(complex=t, coords=coords, tile_template=template_from_document(doc))


def _require_coords(doc: TilingDocument, fmt: str) -> List[List[float]]:
    if doc.coords is None:
        logger.error(f"{fmt} export of {doc.family} needs coordinates")
        raise DocumentError(f"{fmt} export needs coordinates", family=doc.family)
    return doc.coords


def to_json(doc: TilingDocument) -> str:
    return doc.normalize()


def to_obj(doc: TilingDocument) -> str:
    """One polygon face per tile, sharing vertex records."""
    coords = _require_coords(doc, "obj")
    lines = ["# sphtile obj export", f"o {doc.family}"]
    lines.extend("v %0.9f %0.9f %0.9f" % tuple(x) for x in coords)
    for row in doc.complex:
        lines.append("f " + " ".join(str(int(c[0]) + 1) for c in row))
    return "\n".join(lines) + "\n"


def _net_paths(coords: List[List[float]], doc: TilingDocument, south: bool) -> List[List[np.ndarray]]:
    """Projected outlines of the southern tiles (seen from +z) or the northern ones (from −z).

    A tile is southern when its corners have z summing to at most zero.
    """
    pole = sphercore.E_Z if south else -sphercore.E_Z
    points = [np.array(x, dtype=float) for x in coords]
    paths = []
    for row in doc.complex:
        corners = [points[int(c[0])] for c in row]
        if (sum(float(x[2]) for x in corners) <= 1e-9) != south:
            continue
        outline: List[np.ndarray] = []
        for i, x in enumerate(corners):
            arc = sphercore.arc_points(x, corners[(i + 1) % len(corners)], _ARC_SEGMENTS)
            outline.extend(sphercore.stereographic(p, pole) for p in arc[:-1])
        paths.append(outline)
    return paths


def _svg_net(paths: List[List[np.ndarray]], offset: float, title: str) -> List[str]:
    radius = max([float(np.linalg.norm(q)) for outline in paths for q in outline] + [1.0])
    scale = _NET_SIZE / (2.0 * radius)
    centre = offset + _NET_MARGIN + _NET_SIZE / 2.0
    middle = _NET_MARGIN + _NET_SIZE / 2.0
    body = [f'<g class="net"><title>{title}</title>']
    body.append(f'<circle cx="{centre:.3f}" cy="{middle:.3f}" r="{scale:.3f}" fill="none" stroke="#bbbbbb"/>')
    for outline in paths:
        moves = " ".join(f"{centre + scale * q[0]:.3f},{middle - scale * q[1]:.3f}" for q in outline)
        body.append(f'<path d="M {moves} Z" fill="none" stroke="black" stroke-width="0.8"/>')
    body.append("</g>")
    return body


def to_svg(doc: TilingDocument) -> str:
    """Two stereographic nets: the southern tiles seen from +z, the northern ones from −z."""
    coords = _require_coords(doc, "svg")
    try:
        south = _net_paths(coords, doc, south=True)
        north = _net_paths(coords, doc, south=False)
    except GeometryError as exc:
        raise DocumentError(f"cannot project {doc.family}: {exc.message}")
    width = 2.0 * (_NET_SIZE + 2.0 * _NET_MARGIN)
    height = _NET_SIZE + 2.0 * _NET_MARGIN
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0f}" height="{height:.0f}" '
        f'viewBox="0 0 {width:.0f} {height:.0f}">',
        f"<title>{doc.family}</title>",
    ]
    first = _svg_net(south, 0.0, "projected from +z")
    second = _svg_net(north, _NET_SIZE + 2.0 * _NET_MARGIN, "projected from −z")
    lines.extend(first)
    lines.extend(second)
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def export_document(doc: TilingDocument, fmt: str) -> bytes:
    """Render a document as json, obj or svg."""
    renderers = {"json": to_json, "obj": to_obj, "svg": to_svg}
    if fmt not in renderers:
        raise DocumentError(f"unknown export format '{fmt}'", known=list(FORMATS))
    text = renderers[fmt](doc)
    logger.debug(f"exported {doc.family} as {fmt}: {len(text)} characters")
    return text.encode("utf-8")
