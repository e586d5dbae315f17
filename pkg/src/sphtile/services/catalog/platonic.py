"""The Platonic solids as tilings, with their deformations."""

import math
from fractions import Fraction
from itertools import product
from typing import Dict, List, Optional, Set, Tuple

import numpy as np
from loguru import logger

from ...exceptions import CatalogError, SolveError
from ...models import AngleValue, QuadClass, QuadSpec, TilingComplex, VertexCombo
from .. import quadsolve, sphercore
from ..avc import census_of
from .builders import dual_faces, faces_from_points, labeled_tile, uniform_tile
from .isomorphism import automorphism_order
from .subdivision import (
    all_diagonal_choices,
    barycentric,
    quadricentric,
    quadrilateral,
    selection_with_census,
    simple_triangular,
    triangular,
    vertex_coloring,
)

PHI = (1.0 + math.sqrt(5.0)) / 2.0
PLATONIC_F = (4, 6, 8, 12, 20)


def _normalized(points: List[Tuple[float, float, float]]) -> List[np.ndarray]:
    return [sphercore.unit(p) for p in points]


def tetrahedron_faces() -> List[List[int]]:
    pts = _normalized([(1, 1, 1), (1, -1, -1), (-1, 1, -1), (-1, -1, 1)])
    return faces_from_points(pts, math.sqrt(8.0 / 3.0), 3)


def octahedron_faces() -> List[List[int]]:
    pts = _normalized([(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1)])
    return faces_from_points(pts, math.sqrt(2.0), 3)


def cube_faces() -> List[List[int]]:
    return dual_faces(octahedron_faces())


def icosahedron_faces() -> List[List[int]]:
    raw = []
    for s1, s2 in product((1, -1), repeat=2):
        raw += [(0, s1, s2 * PHI), (s1, s2 * PHI, 0), (s2 * PHI, 0, s1)]
    pts = _normalized(raw)
    edge = 2.0 / math.sqrt(1.0 + PHI ** 2)
    return faces_from_points(pts, edge, 3)


def dodecahedron_faces() -> List[List[int]]:
    return dual_faces(icosahedron_faces())


def platonic_faces(f: int) -> List[List[int]]:
    builders = {4: tetrahedron_faces, 6: cube_faces, 8: octahedron_faces,
                12: dodecahedron_faces, 20: icosahedron_faces}
    if f not in builders:
        raise CatalogError(f"no Platonic solid with {f} faces", f=f)
    return builders[f]()


def vertex_degree(f: int) -> int:
    return {4: 3, 6: 3, 8: 4, 12: 3, 20: 5}[f]


def face_size(f: int) -> int:
    return {4: 3, 6: 4, 8: 3, 12: 5, 20: 3}[f]


def _disphenoid_edges(faces: List[List[int]]) -> Dict[frozenset, str]:
    """Opposite edges of the tetrahedron share a label."""
    vertices = sorted({v for face in faces for v in face})
    labels = {}
    pairs = [((0, 1), (2, 3), "a"), ((0, 2), (1, 3), "b"), ((0, 3), (1, 2), "c")]
    for e1, e2, label in pairs:
        labels[frozenset((vertices[e1[0]], vertices[e1[1]]))] = label
        labels[frozenset((vertices[e2[0]], vertices[e2[1]]))] = label
    return labels


_TRIANGLE_CORNER = {frozenset("ab"): "α", frozenset("ac"): "β", frozenset("bc"): "γ"}
_ISOSCELES_CORNER = {frozenset("a"): "α", frozenset("ab"): "β"}


def build_platonic(f: int, quad_class: Optional[QuadClass] = None) -> TilingComplex:
    """P_f with the labels of ``quad_class`` (default: the regular tile).

    Deformed cubes come from the earth map tilings with three timezones and
    the deformed octahedron from the triangular one with two.
    """
    from .earth_maps import build_earth_map

    name = f"P{f}"
    regular = {4: QuadClass.EQUILATERAL_TRIANGLE, 6: QuadClass.SQUARE, 8: QuadClass.EQUILATERAL_TRIANGLE,
               12: QuadClass.REGULAR_PENTAGON, 20: QuadClass.EQUILATERAL_TRIANGLE}
    if f not in regular:
        raise CatalogError(f"no Platonic solid with {f} faces", f=f)
    quad_class = quad_class or regular[f]
    if quad_class == regular[f]:
        tiles = tuple(uniform_tile(face) for face in platonic_faces(f))
        return TilingComplex(tiles=tiles, name=name)
    if f == 4 and quad_class in (QuadClass.TRIANGLE, QuadClass.ISOSCELES_TRIANGLE):
        faces = platonic_faces(4)
        edges = _disphenoid_edges(faces)
        if quad_class == QuadClass.ISOSCELES_TRIANGLE:
            edges = {k: ("a" if v in "ab" else "b") for k, v in edges.items()}
            corner = _ISOSCELES_CORNER
        else:
            corner = _TRIANGLE_CORNER
        tiles = []
        for face in faces:
            labels = []
            for i, v in enumerate(face):
                around = frozenset((edges[frozenset((v, face[(i + 1) % 3]))], edges[frozenset((v, face[i - 1]))]))
                labels.append(corner[around])
            tiles.append(labeled_tile(face, labels, quad_class))
        return TilingComplex(tiles=tuple(tiles), name=name)
    if f == 6:
        family = {QuadClass.GENERAL: "E□1", QuadClass.ALMOST_EQUILATERAL: "E□2",
                  QuadClass.KITE: "E□3", QuadClass.RHOMBUS: "E□4"}
        if quad_class in family:
            return build_earth_map(family[quad_class], 3).named(name)
    if f == 8 and quad_class == QuadClass.TRIANGLE:
        return build_earth_map("E△1", 2).named(name)
    if f == 8 and quad_class == QuadClass.ISOSCELES_TRIANGLE:
        return build_earth_map("E△3", 4).named(name)
    raise CatalogError(f"P{f} has no {quad_class.value} deformation")


def platonic_template(f: int, quad_class: Optional[QuadClass] = None, **params) -> QuadSpec:
    """The tile of P_f.

    ``alpha``/``beta`` (in units of π) deform P₄ and P₈; the cube takes the
    E□1 moduli point (``phi``, ``a``) or E□2 ``beta``.
    """
    regular_angle = {4: AngleValue.pi(2, 3), 6: AngleValue.pi(2, 3), 8: AngleValue.pi(1, 2),
                     12: AngleValue.pi(2, 3), 20: AngleValue.pi(2, 5)}
    if f not in regular_angle:
        raise CatalogError(f"no Platonic solid with {f} faces", f=f)
    n = face_size(f)
    if quad_class is None or quad_class.n_sides == n and quad_class in (
        QuadClass.EQUILATERAL_TRIANGLE, QuadClass.SQUARE, QuadClass.REGULAR_PENTAGON
    ):
        cls = {3: QuadClass.EQUILATERAL_TRIANGLE, 4: QuadClass.SQUARE, 5: QuadClass.REGULAR_PENTAGON}[n]
        return quadsolve.solve_regular(cls, regular_angle[f])
    try:
        if f == 4 and quad_class == QuadClass.TRIANGLE:
            alpha = AngleValue.from_pi_units(params.get("alpha", 0.6))
            beta = AngleValue.from_pi_units(params.get("beta", 0.7))
            gamma = AngleValue.pi(2) - alpha - beta
            return quadsolve.solve_general_triangle(alpha, beta, gamma)
        if f == 4 and quad_class == QuadClass.ISOSCELES_TRIANGLE:
            alpha = AngleValue.from_pi_units(params.get("alpha", 0.8))
            beta = (AngleValue.pi(2) - alpha) / 2
            return quadsolve.solve_isosceles(alpha, beta)
        if f == 8 and quad_class == QuadClass.TRIANGLE:
            beta = AngleValue.from_pi_units(params.get("beta", 0.4))
            return quadsolve.solve_general_triangle(AngleValue.pi(1, 2), beta, AngleValue.pi(1) - beta)
        if f == 6:
            from .earth_maps import earth_map_template
            family = {QuadClass.GENERAL: "E□1", QuadClass.ALMOST_EQUILATERAL: "E□2",
                      QuadClass.KITE: "E□3", QuadClass.RHOMBUS: "E□4"}
            if quad_class in family:
                return earth_map_template(family[quad_class], 3, **params)
        if f == 8 and quad_class == QuadClass.ISOSCELES_TRIANGLE:
            from .earth_maps import earth_map_template
            return earth_map_template("E△3", 4)
    except SolveError as exc:
        logger.error(f"P{f} deformation failed: {exc.message}")
        raise CatalogError(f"P{f} deformation is outside its range: {exc.message}", **params)
    raise CatalogError(f"P{f} has no {quad_class.value} deformation")


# Subdivisions of the Platonic solids


def _regular_subdivision_specs(kind: str, f: int, **params) -> Tuple[TilingComplex, List[QuadSpec]]:
    base = build_platonic(f)
    n, k = face_size(f), vertex_degree(f)
    pi = AngleValue.pi
    if kind == "T":
        return triangular(base, QuadClass.ISOSCELES_TRIANGLE, "α", "β"), [quadsolve.solve_isosceles(pi(2, n), pi(1, k))]
    if kind == "B":
        if n == k:
            t = barycentric(base, center="β", vertex="β", midpoint="α", quad_class=QuadClass.ISOSCELES_TRIANGLE)
            return t, [quadsolve.solve_isosceles(pi(1, 2), pi(1, 3))]
        if n < k:
            t = barycentric(base, center="α", vertex="β")
            return t, [quadsolve.solve_general_triangle(pi(1, n), pi(1, k), pi(1, 2))]
        t = barycentric(base, center="β", vertex="α")
        return t, [quadsolve.solve_general_triangle(pi(1, k), pi(1, n), pi(1, 2))]
    if kind == "Q":
        if f == 4:
            return quadrilateral(base), [quadsolve.solve_kite_rhombus(QuadClass.RHOMBUS, [pi(2, 3), pi(1, 2)])]
        if f == 6:
            return _general_cube_quadrilateral(base, AngleValue.from_pi_units(params.get("beta", Fraction(1, 2))))
        # the corner role with angle 2/5 or, on the octahedron, the triangle centre is α
        if f in (8, 12):
            t = quadrilateral(base, ("γ", "β", "α", "β"), QuadClass.KITE)
        else:
            t = quadrilateral(base, ("α", "β", "γ", "β"), QuadClass.KITE)
        angles = [pi(2, 3), pi(1, 2), pi(1, 2)] if f == 8 else [pi(2, 5), pi(1, 2), pi(2, 3)]
        return t, [quadsolve.solve_kite_rhombus(QuadClass.KITE, angles)]
    if kind == "C":
        if f == 4:
            return quadricentric(base, "α", "α", QuadClass.SQUARE), [quadsolve.solve_regular(QuadClass.SQUARE, pi(2, 3))]
        if k == 3:
            t, other = quadricentric(base, vertex="α", center="β"), pi(2, n)
        else:
            t, other = quadricentric(base, vertex="β", center="α"), pi(2, k)
        return t, [quadsolve.solve_kite_rhombus(QuadClass.RHOMBUS, [pi(2, 3), other])]
    raise CatalogError(f"unknown Platonic subdivision '{kind}'", known=["T", "B", "Q", "C"])


def _general_cube_quadrilateral(cube: TilingComplex, beta: AngleValue) -> Tuple[TilingComplex, List[QuadSpec]]:
    """QP6 with α at the cube corners, γ at the centres and β + δ = π at the midpoints.

    The two midpoint labels alternate with a two-colouring of the cube's vertices.
    """
    pi = AngleValue.pi
    t = quadrilateral(cube, ("α", "β", "γ", "δ"), QuadClass.GENERAL, vertex_coloring(cube))
    delta = pi(1) - beta
    if beta.close_to(pi(1, 2)):
        kite = quadsolve.solve_kite_rhombus(QuadClass.KITE, [pi(2, 3), pi(1, 2), pi(1, 2)])
        spec = QuadSpec(quad_class=QuadClass.GENERAL, alpha=pi(2, 3), beta=pi(1, 2), gamma=pi(1, 2),
                        delta=pi(1, 2), a=kite.a, b=kite.b, c=kite.b)
        return t, [spec]
    return t, quadsolve.solve_general_quad(pi(2, 3), beta, pi(1, 2), delta)


def platonic_subdivision(kind: str, f: int, **params) -> Tuple[TilingComplex, List[QuadSpec]]:
    """TP_f, BP_f, QP_f or CP_f with its candidate tiles.

    QP6 takes ``beta`` (units of π) for the general tile with β + δ = π.
    """
    if f not in PLATONIC_F:
        raise CatalogError(f"no Platonic solid with {f} faces", f=f)
    try:
        t, specs = _regular_subdivision_specs(kind, f, **params)
    except SolveError as exc:
        logger.error(f"{kind}P{f} has no tile: {exc.message}")
        raise CatalogError(f"{kind}P{f} parameters are outside their range: {exc.message}", **params)
    return t.named(f"{kind}P{f}"), specs


def simple_triangular_cube(prime: bool = False) -> Tuple[TilingComplex, QuadSpec]:
    """SP6 or SP′6: squares of the cube cut along diagonals into isosceles triangles.

    Both have every vertex type α³, α²β², αβ⁴ and β⁶; the symmetry group of SP6
    has order 4, that of SP′6 order 2.
    """
    cube = build_platonic(6)
    labels = {("apex", "α"): "α", ("half", "α"): "β"}
    target = {VertexCombo.parse(text) for text in ("α³", "α²β²", "αβ⁴", "β⁶")}
    order = 2 if prime else 4
    for choice in all_diagonal_choices(cube):
        t = simple_triangular(cube, choice, labels)
        if set(census_of(t)) == target and automorphism_order(t) == order:
            name = "SP′6" if prime else "SP6"
            return t.named(name), quadsolve.solve_isosceles(AngleValue.pi(2, 3), AngleValue.pi(1, 3))
    raise CatalogError("no diagonal choice gives the requested symmetry", order=order)


def dodecahedron_subdivision(census: Set[VertexCombo]) -> TilingComplex:
    """The simple quadrilateral subdivision of the dodecahedron with exactly these vertex types."""
    return selection_with_census(build_platonic(12), sorted(census, key=lambda c: (c.degree, c.sort_key())), census_of)
