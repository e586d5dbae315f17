"""Spherical geometry kernel.

Points are unit vectors held as ``numpy`` arrays. Rotations follow

    Z(θ) = [[c, −s, 0], [s, c, 0], [0, 0, 1]]
    Y(θ) = [[c, 0, s], [0, 1, 0], [−s, 0, c]]

so that Y(π/2)·e_z = e_x, and a polygon with edges a_i and angles α_i closes
exactly when Y(a_n)Z(π−α_n)⋯Y(a_1)Z(π−α_1) is the identity.

Polygons are counter-clockwise when seen from outside the sphere; the interior
angle at v with neighbours prev, next is ``corner_angle(next, v, prev)``.
"""

import math
from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple, Union

import numpy as np

from ..config import settings
from ..exceptions import GeometryError
from ..models import AngleValue

Angle = Union[AngleValue, float, int]

E_X = np.array([1.0, 0.0, 0.0])
E_Y = np.array([0.0, 1.0, 0.0])
E_Z = np.array([0.0, 0.0, 1.0])
TWO_PI = 2.0 * math.pi


def _rad(theta: Angle) -> float:
    value = float(theta)
    if not math.isfinite(value):
        raise GeometryError(f"non-finite angle {value}")
    return value


def unit(v: Iterable[float]) -> np.ndarray:
    """Normalize a vector onto the sphere."""
    arr = np.asarray(v, dtype=float)
    norm = np.linalg.norm(arr)
    if norm < settings.identity_tol:
        raise GeometryError("cannot normalize the zero vector")
    return arr / norm


def from_spherical(colatitude: float, longitude: float) -> np.ndarray:
    s = math.sin(colatitude)
    return np.array([s * math.cos(longitude), s * math.sin(longitude), math.cos(colatitude)])


def rot_y(theta: Angle) -> np.ndarray:
    t = _rad(theta)
    c, s = math.cos(t), math.sin(t)
    return np.array([[c, 0.0, s], [0.0, 1.0, 0.0], [-s, 0.0, c]])


def rot_z(theta: Angle) -> np.ndarray:
    t = _rad(theta)
    c, s = math.cos(t), math.sin(t)
    return np.array([[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]])


def axis_rotation(axis: str, theta: Angle) -> np.ndarray:
    """Proper rotation by theta about the y- or z-axis."""
    key = axis.upper()
    if key == "Y":
        return rot_y(theta)
    if key == "Z":
        return rot_z(theta)
    raise GeometryError(f"unknown rotation axis '{axis}'")


def holonomy_steps(edges: Sequence[Angle], angles: Sequence[Angle]) -> List[np.ndarray]:
    """Partial products M_k = Y(a_k)Z(π−α_k)⋯Y(a_1)Z(π−α_1), k = 1..n."""
    if len(edges) != len(angles):
        raise GeometryError("edges and angles differ in length", edges=len(edges), angles=len(angles))
    if len(edges) < 2:
        raise GeometryError("a polygon needs at least two sides")
    products = []
    m = np.eye(3)
    for a, alpha in zip(edges, angles):
        m = rot_y(a) @ rot_z(math.pi - _rad(alpha)) @ m
        products.append(m)
    return products


def polygon_holonomy(edges: Sequence[Angle], angles: Sequence[Angle]) -> np.ndarray:
    """Y(a_n)Z(π−α_n)⋯Y(a_1)Z(π−α_1); the identity iff the data closes."""
    return holonomy_steps(edges, angles)[-1]


def identity_defect(m: np.ndarray) -> float:
    """Max-norm distance from the identity."""
    return float(np.max(np.abs(m - np.eye(3))))


def is_rotation(m: np.ndarray, tol: float = 1e-10) -> bool:
    return (
        float(np.max(np.abs(m.T @ m - np.eye(3)))) <= tol
        and abs(float(np.linalg.det(m)) - 1.0) <= tol
    )


def _check_pair(a: np.ndarray, b: np.ndarray) -> None:
    if np.linalg.norm(a - b) < settings.antipodal_tol:
        raise GeometryError("identical points do not determine an arc")
    if np.linalg.norm(a + b) < settings.antipodal_tol:
        raise GeometryError("antipodal points do not determine an arc")


def arc_length(a: np.ndarray, b: np.ndarray) -> float:
    """Great-circle distance in radians, in [0, π]."""
    return math.atan2(float(np.linalg.norm(np.cross(a, b))), float(np.dot(a, b)))


def arc_measure(a: np.ndarray, b: np.ndarray) -> AngleValue:
    """Length of the minor arc AB; the points must be neither equal nor antipodal."""
    a, b = np.asarray(a, dtype=float), np.asarray(b, dtype=float)
    _check_pair(a, b)
    return AngleValue.numeric(arc_length(a, b))


def tangent_toward(base: np.ndarray, target: np.ndarray) -> np.ndarray:
    """Unit tangent at base pointing along the minor arc to target."""
    t = target - float(np.dot(target, base)) * base
    norm = np.linalg.norm(t)
    if norm < settings.antipodal_tol:
        raise GeometryError("direction undefined for identical or antipodal points")
    return t / norm


def direction_angle(base: np.ndarray, reference: np.ndarray, target: np.ndarray) -> float:
    """Counter-clockwise angle at base from the arc toward reference to the arc toward target, in [0, 2π)."""
    e1 = tangent_toward(base, reference)
    e2 = np.cross(base, e1)
    t = tangent_toward(base, target)
    return math.atan2(float(np.dot(t, e2)), float(np.dot(t, e1))) % TWO_PI


def corner_angle_rad(a: np.ndarray, b: np.ndarray, c: np.ndarray) -> float:
    return direction_angle(np.asarray(b, dtype=float), np.asarray(a, dtype=float), np.asarray(c, dtype=float))


def corner_angle(a: np.ndarray, b: np.ndarray, c: np.ndarray) -> AngleValue:
    """Counter-clockwise angle at B from BA to BC, seen from outside the sphere.

    Swapping A and C gives 2π minus the angle.
    """
    return AngleValue.numeric(corner_angle_rad(a, b, c))


def interior_angles(points: Sequence[np.ndarray]) -> List[float]:
    """Interior angles of a counter-clockwise polygon."""
    n = len(points)
    return [corner_angle_rad(points[(i + 1) % n], points[i], points[(i - 1) % n]) for i in range(n)]


def edge_lengths(points: Sequence[np.ndarray]) -> List[float]:
    n = len(points)
    return [arc_length(points[i], points[(i + 1) % n]) for i in range(n)]


def spherical_excess(points: Sequence[np.ndarray]) -> float:
    """Area of the region to the left of the boundary (counter-clockwise polygon)."""
    return sum(interior_angles(points)) - (len(points) - 2) * math.pi


def orientation_sign(points: Sequence[np.ndarray]) -> int:
    """+1 when the smaller region lies to the left of the boundary."""
    return 1 if spherical_excess(points) <= 2.0 * math.pi else -1


def polygon_area(points: Sequence[np.ndarray]) -> float:
    """Area of the smaller region bounded by a simple polygon."""
    left = spherical_excess(points)
    return min(left, 4.0 * math.pi - left)


def counter_clockwise(points: Sequence[np.ndarray]) -> List[np.ndarray]:
    pts = list(points)
    if orientation_sign(pts) < 0:
        pts = [pts[0]] + pts[:0:-1]
    return pts


def on_arc(x: np.ndarray, p: np.ndarray, q: np.ndarray, tol: float) -> bool:
    """Whether x lies on the minor arc pq (endpoints included)."""
    n = np.cross(p, q)
    norm = np.linalg.norm(n)
    if norm < tol:
        return False
    n = n / norm
    if abs(float(np.dot(x, n))) > tol:
        return False
    return float(np.dot(np.cross(p, x), n)) >= -tol and float(np.dot(np.cross(x, q), n)) >= -tol and float(np.dot(x, p + q)) > 0


def arcs_intersect(p1: np.ndarray, p2: np.ndarray, q1: np.ndarray, q2: np.ndarray, tol: float = None) -> bool:
    """Whether the minor arcs p1p2 and q1q2 meet; touching counts."""
    tol = settings.perpendicular_tol if tol is None else tol
    n1 = np.cross(p1, p2)
    n2 = np.cross(q1, q2)
    line = np.cross(n1, n2)
    if np.linalg.norm(line) < tol:
        # same great circle
        return any(on_arc(x, p1, p2, tol) for x in (q1, q2)) or any(on_arc(x, q1, q2, tol) for x in (p1, p2))
    line = line / np.linalg.norm(line)
    for x in (line, -line):
        if _within_span(x, p1, p2, n1, tol) and _within_span(x, q1, q2, n2, tol):
            return True
    return False


def _within_span(x: np.ndarray, p: np.ndarray, q: np.ndarray, n: np.ndarray, tol: float) -> bool:
    n = n / np.linalg.norm(n)
    return float(np.dot(np.cross(p, x), n)) >= -tol and float(np.dot(np.cross(x, q), n)) >= -tol


def is_simple(points: Sequence[np.ndarray], tol: float = None) -> bool:
    """Whether the closed boundary through the points does not cross itself.

    For quadrilaterals whose edges are all shorter than π and which have three
    angles below π the answer is yes without any intersection test. Straight
    corners are allowed; a corner that folds back is not.
    """
    tol = settings.perpendicular_tol if tol is None else tol
    pts = [np.asarray(p, dtype=float) for p in points]
    n = len(pts)
    for i in range(n):
        nxt = pts[(i + 1) % n]
        if np.linalg.norm(pts[i] - nxt) < settings.antipodal_tol or np.linalg.norm(pts[i] + nxt) < settings.antipodal_tol:
            return False
    pts = counter_clockwise(pts)
    angles = interior_angles(pts)
    if n == 4 and all(l < math.pi for l in edge_lengths(pts)) and sum(1 for a in angles if a < math.pi) >= 3:
        return True
    for a in angles:
        if a < tol or a > TWO_PI - tol:
            return False
    for i in range(n):
        for j in range(i + 1, n):
            if j == i + 1 or (i == 0 and j == n - 1):
                continue
            if arcs_intersect(pts[i], pts[(i + 1) % n], pts[j], pts[(j + 1) % n], tol):
                return False
    return True


def contains_point(points: Sequence[np.ndarray], x: np.ndarray, margin: float = 1e-9) -> bool:
    """Whether x lies strictly inside a counter-clockwise polygon (winding test)."""
    n = len(points)
    # vertices at x or -x leave the winding directions undefined
    if any(np.linalg.norm(x - p) < margin or np.linalg.norm(x + p) < margin for p in points):
        return False
    total = 0.0
    for i in range(n):
        p, q = points[i], points[(i + 1) % n]
        if on_arc(x, p, q, margin):
            return False
        delta = direction_angle(x, p, q)
        if delta > math.pi:
            delta -= TWO_PI
        total += delta
    return total > math.pi


def _plane_basis(pole: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    if abs(abs(float(pole[2])) - 1.0) < 1e-12:
        e1 = E_X.copy()
    else:
        e1 = unit(np.cross(E_Z, pole))
    e2 = np.cross(pole, e1)
    return e1, e2


def stereographic(p: np.ndarray, pole: np.ndarray = E_Z) -> np.ndarray:
    """Project from ``pole`` onto the plane through the origin orthogonal to it."""
    p = np.asarray(p, dtype=float)
    pole = unit(pole)
    denom = 1.0 - float(np.dot(p, pole))
    if denom < settings.antipodal_tol:
        raise GeometryError("the projection pole has no image")
    e1, e2 = _plane_basis(pole)
    return np.array([float(np.dot(p, e1)) / denom, float(np.dot(p, e2)) / denom])


def inverse_stereographic(q: Sequence[float], pole: np.ndarray = E_Z) -> np.ndarray:
    pole = unit(pole)
    e1, e2 = _plane_basis(pole)
    u, v = float(q[0]), float(q[1])
    r2 = u * u + v * v
    return (2.0 * (u * e1 + v * e2) + (r2 - 1.0) * pole) / (r2 + 1.0)


def frame(p: np.ndarray, q: np.ndarray) -> np.ndarray:
    """Orthonormal frame (columns) with first axis p and q in the first two."""
    e1 = unit(p)
    e2 = q - float(np.dot(q, e1)) * e1
    norm = np.linalg.norm(e2)
    if norm < settings.antipodal_tol:
        raise GeometryError("frame points are parallel")
    e2 = e2 / norm
    return np.column_stack([e1, e2, np.cross(e1, e2)])


def rotation_between_frames(p: np.ndarray, q: np.ndarray, p2: np.ndarray, q2: np.ndarray) -> np.ndarray:
    """The proper rotation taking p to p2 and the arc pq onto the arc p2q2."""
    return frame(p2, q2) @ frame(p, q).T


def isometry_between(p: np.ndarray, q: np.ndarray, p2: np.ndarray, q2: np.ndarray, proper: bool = True) -> np.ndarray:
    """Proper or improper orthogonal map taking (p, q) to (p2, q2)."""
    if proper:
        return rotation_between_frames(p, q, p2, q2)
    mirror = np.diag([1.0, 1.0, -1.0])
    return rotation_between_frames(mirror @ p, mirror @ q, p2, q2) @ mirror


def arc_points(a: np.ndarray, b: np.ndarray, segments: int = 64) -> List[np.ndarray]:
    """Points along the minor arc ab, endpoints included."""
    theta = arc_length(a, b)
    if theta < 1e-15:
        return [a.copy() for _ in range(segments + 1)]
    s = math.sin(theta)
    return [(math.sin((1 - t) * theta) * a + math.sin(t * theta) * b) / s for t in np.linspace(0.0, 1.0, segments + 1)]


@dataclass(frozen=True)
class ArcPolygon:
    """Closed polygon of great arcs through the given vertices, in order."""

    vertices: Tuple[np.ndarray, ...]

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def orientation(self) -> int:
        return orientation_sign(self.vertices)

    def counter_clockwise(self) -> "ArcPolygon":
        return ArcPolygon(vertices=tuple(counter_clockwise(self.vertices)))

    @property
    def angles(self) -> Tuple[AngleValue, ...]:
        """Interior angles in vertex order, measured on the smaller side whatever the orientation."""
        pts, n = self.vertices, len(self.vertices)
        if self.orientation > 0:
            return tuple(corner_angle(pts[(i + 1) % n], pts[i], pts[(i - 1) % n]) for i in range(n))
        return tuple(corner_angle(pts[(i - 1) % n], pts[i], pts[(i + 1) % n]) for i in range(n))

    def edges(self) -> List[float]:
        return edge_lengths(self.vertices)

    def area(self) -> float:
        return polygon_area(self.vertices)

    def is_simple(self) -> bool:
        return is_simple(self.vertices)
