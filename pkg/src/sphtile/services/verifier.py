"""Independent checks of tilings and their realizations.

Nothing here raises for a defective tiling: every defect becomes a failed
check in the returned VerificationReport.
"""

import math
from collections import defaultdict
from typing import Dict, Iterable, List, Optional, Tuple

import numpy as np
from loguru import logger

from ..config import settings
from ..exceptions import GeometryError
from ..models import GeometricRealization, QuadClass, QuadSpec, TilingComplex, VerificationReport, VertexCombo
from . import avc, sphercore
from .catalog.isomorphism import automorphism_order

__all__ = [
    "verify_combinatorial",
    "verify_geometric",
    "verify_census",
    "verify_holonomy",
    "verify_realization",
    "automorphism_order",
]

# Label exchanges under which a tile is the same tile read the other way
_EXCHANGES: Dict[QuadClass, Tuple[Dict[str, str], Dict[str, str]]] = {
    QuadClass.GENERAL: ({"β": "δ", "δ": "β"}, {"b": "c", "c": "b"}),
    QuadClass.KITE: ({"α": "γ", "γ": "α"}, {"a": "b", "b": "a"}),
    QuadClass.ALMOST_EQUILATERAL: ({"α": "β", "β": "α", "γ": "δ", "δ": "γ"}, {}),
    QuadClass.RHOMBUS: ({"α": "β", "β": "α"}, {}),
}


def verify_combinatorial(t: TilingComplex) -> VerificationReport:
    """Edge-to-edge pairing, edge labels, vertex degrees and the counting identities."""
    report = VerificationReport()
    directed = t.directed_edges()

    unpaired = [e for e, owners in directed.items() if len(owners) != 1 or (e[1], e[0]) not in directed]
    degenerate = [ti for ti, tile in enumerate(t.tiles) if len(set(tile.vertices())) != tile.size]
    report.add(
        "edge-to-edge",
        not unpaired and not degenerate and bool(t.tiles),
        detail=f"unpaired edges {unpaired[:4]}" if unpaired else (f"repeated vertex in tiles {degenerate[:4]}" if degenerate else ""),
    )

    mismatched = []
    for (u, v), owners in directed.items():
        if u > v or (v, u) not in directed:
            continue
        ti, ci = owners[0]
        oti, oci = directed[(v, u)][0]
        if t.tiles[ti].corners[ci].edge != t.tiles[oti].corners[oci].edge:
            mismatched.append((u, v))
    report.add("edge-label", not mismatched, detail=f"labels differ on {mismatched[:4]}" if mismatched else "")

    low = sorted(vid for vid, d in t.degrees().items() if d < 3)
    report.add("degree", not low, detail=f"vertices of degree < 3: {low[:8]}" if low else "")

    sizes = {tile.size for tile in t.tiles}
    if len(sizes) == 1:
        n = sizes.pop()
        hist = avc.degree_histogram(t)
        report.checks.append(avc.euler_audit(hist, n))
        if n == 4:
            report.add("degree-3 count", hist.v_k(3) >= 8, detail=f"v₃ = {hist.v_k(3)}")
    else:
        report.add("euler", False, detail=f"mixed tile sizes {sorted(sizes)}")

    if not report.passed:
        logger.warning(f"{t.name or 'complex'} fails " + ", ".join(c.name for c in report.failures()))
    return report


def _tile_data(points: List[np.ndarray]) -> Tuple[List[float], List[float]]:
    return sphercore.interior_angles(points), sphercore.edge_lengths(points)


def _congruence_residual(t: TilingComplex, ti: int, angles: List[float], edges: List[float], spec: QuadSpec) -> float:
    """Worst deviation of a tile from the template, over the class's label exchanges."""
    readings = [({}, {})]
    if spec.quad_class in _EXCHANGES:
        readings.append(_EXCHANGES[spec.quad_class])
    best = math.inf
    for angle_map, edge_map in readings:
        worst = 0.0
        for corner, measured, length in zip(t.tiles[ti].corners, angles, edges):
            label = angle_map.get(corner.angle, corner.angle)
            try:
                worst = max(worst, abs(measured - spec.angle(label).radians))
                if spec.has_edges:
                    worst = max(worst, abs(length - spec.edge(edge_map.get(corner.edge, corner.edge)).radians))
            except (KeyError, AttributeError):
                worst = math.inf
                break
        best = min(best, worst)
    return best


def verify_geometric(r: GeometricRealization, tol: Optional[float] = None) -> VerificationReport:
    """Angle sums, congruence to the template, and area of every tile."""
    tol = settings.tolerance if tol is None else tol
    report = VerificationReport()
    t = r.complex

    missing = [vid for vid in t.vertices() if vid not in r.coords]
    off_sphere = [vid for vid, x in r.coords.items() if abs(float(np.linalg.norm(x)) - 1.0) > tol]
    report.add("coords", not missing and not off_sphere,
               detail=f"missing {missing[:4]}" if missing else (f"off the sphere {off_sphere[:4]}" if off_sphere else ""))
    if missing or not t.tiles:
        return report

    vertex_sum: Dict[int, float] = defaultdict(float)
    congruence = 0.0
    excess_worst = 0.0
    total = 0.0
    target = 4.0 * math.pi / t.f
    for ti, tile in enumerate(t.tiles):
        points = list(r.tile_points(ti))
        try:
            angles, edges = _tile_data(points)
        except GeometryError as exc:
            report.add("congruence", False, math.inf, detail=f"tile {ti}: {exc.message}")
            return report
        for corner, angle in zip(tile.corners, angles):
            vertex_sum[corner.vertex] += angle
        congruence = max(congruence, _congruence_residual(t, ti, angles, edges, r.tile_template))
        excess = sum(angles) - (tile.size - 2) * math.pi
        excess_worst = max(excess_worst, abs(excess - target))
        total += excess

    angle_worst = max(abs(s - 2.0 * math.pi) for s in vertex_sum.values())
    report.add("angle-sum", angle_worst <= tol, angle_worst)
    report.add("congruence", congruence <= tol, congruence)
    report.add("tile-area", excess_worst <= tol, excess_worst, detail=f"4π/f = {target:.12g}")
    report.add("total-area", abs(total - 4.0 * math.pi) <= tol, abs(total - 4.0 * math.pi))

    if not report.passed:
        logger.warning(f"{t.name or 'realization'} fails " + ", ".join(c.name for c in report.failures()))
    return report


def verify_census(t: TilingComplex, expected: Iterable[VertexCombo]) -> VerificationReport:
    """The distinct vertex types of ``t`` are exactly ``expected``."""
    report = VerificationReport()
    found = set(avc.census_of(t))
    wanted = set(expected)
    detail = ""
    if found != wanted:
        extra = ", ".join(str(c) for c in found - wanted)
        absent = ", ".join(str(c) for c in wanted - found)
        detail = f"unexpected {{{extra}}}; missing {{{absent}}}"
    report.add("census", found == wanted, detail=detail)
    return report


def verify_holonomy(r: GeometricRealization, tol: Optional[float] = None) -> VerificationReport:
    """Every realized tile closes: its measured edges and angles have identity holonomy."""
    tol = settings.closure_tol if tol is None else tol
    report = VerificationReport()
    worst = 0.0
    for ti in range(r.complex.f):
        try:
            angles, edges = _tile_data(list(r.tile_points(ti)))
        except GeometryError as exc:
            report.add("holonomy", False, math.inf, detail=f"tile {ti}: {exc.message}")
            return report
        # read counter-clockwise, the data describes the mirror tile, which closes as well
        worst = max(worst, sphercore.identity_defect(sphercore.polygon_holonomy(edges, angles)))
    report.add("holonomy", worst <= tol, worst)
    return report


def verify_realization(
    r: GeometricRealization,
    tol: Optional[float] = None,
    expected_census: Optional[Iterable[VertexCombo]] = None,
) -> VerificationReport:
    """All checks for a realized tiling."""
    report = verify_combinatorial(r.complex)
    report.extend(verify_geometric(r, tol))
    if report.check("coords"):
        report.extend(verify_holonomy(r, max(settings.closure_tol, tol or 0.0)))
    if expected_census is not None:
        report.extend(verify_census(r.complex, expected_census))
    census = avc.census_of(r.complex)
    report.notes.append(f"census: {avc.census_string(census)}")
    report.notes.append(f"f={r.complex.f} v={r.complex.v} e={r.complex.e}")
    logger.info(f"verified {r.complex.name or 'tiling'}: {'pass' if report.passed else 'FAIL'}")
    return report
