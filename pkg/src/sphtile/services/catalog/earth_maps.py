"""Earth map tilings: p timezones between a north and a south pole.

Vertex 0 is the north pole and vertex 1 the south pole; the remaining
vertices and the tiles are numbered timezone by timezone.
"""

from typing import Dict, List, Tuple

from loguru import logger

from ...exceptions import CatalogError, SolveError
from ...models import AngleValue, QuadClass, QuadSpec, TilingComplex
from .. import quadsolve
from .builders import labeled_tile, uniform_tile
from .subdivision import diagonals_through, simple_quadrilateral, simple_triangular, triangular

NORTH, SOUTH = 0, 1

TRIANGLE_FAMILIES = ("E△1", "E△2", "E△3", "E△4", "E△5")
QUAD_FAMILIES = ("E□1", "E□2", "E□3", "E□4", "E□5")

# tiles per timezone, and the smallest p for which the angles are below π
_TILES_PER_TIMEZONE = {"E△1": 4, "E△2": 4, "E△3": 2, "E△4": 4, "E△5": 8,
                       "E□1": 2, "E□2": 2, "E□3": 2, "E□4": 2, "E□5": 8}
_MIN_P = {"E△1": 2, "E△2": 2, "E△3": 3, "E△4": 3, "E△5": 2,
          "E□1": 3, "E□2": 3, "E□3": 3, "E□4": 3, "E□5": 2}


def timezones_for(family: str, f: int) -> int:
    per = _TILES_PER_TIMEZONE.get(family)
    if per is None:
        raise CatalogError(f"unknown earth map family '{family}'")
    if f % per:
        raise CatalogError(f"{family} needs f divisible by {per}", f=f)
    return f // per


def _check(family: str, p: int) -> None:
    if family not in _TILES_PER_TIMEZONE:
        raise CatalogError(f"unknown earth map family '{family}'",
                           known=list(TRIANGLE_FAMILIES + QUAD_FAMILIES))
    if p < 2:
        raise CatalogError("an earth map tiling needs at least 2 timezones", p=p)
    if p < _MIN_P[family]:
        raise CatalogError(f"{family} needs p ≥ {_MIN_P[family]}", p=p)


def _quad_vertices(p: int) -> Tuple[Dict[int, int], Dict[int, int]]:
    """Ids of u_i (upper zigzag) and w_i (lower zigzag)."""
    u = {i: 2 + 2 * (i % p) for i in range(-1, p + 1)}
    w = {i: 3 + 2 * (i % p) for i in range(-1, p + 1)}
    return u, w


def quad_earth_map(p: int, quad_class: QuadClass) -> TilingComplex:
    """Timezone i holds N_i = (N, u_i, w_i, u_{i+1}) and S_i = (S, w_{i+1}, u_{i+1}, w_i)."""
    corners = {
        QuadClass.GENERAL: ("α", "β", "γ", "δ"),
        QuadClass.ALMOST_EQUILATERAL: ("α", "β", "γ", "δ"),
        QuadClass.KITE: ("α", "β", "γ", "β"),
        QuadClass.RHOMBUS: ("α", "β", "α", "β"),
    }[quad_class]
    u, w = _quad_vertices(p)
    tiles = []
    for i in range(p):
        tiles.append(labeled_tile([NORTH, u[i], w[i], u[i + 1]], corners, quad_class))
        tiles.append(labeled_tile([SOUTH, w[i + 1], u[i + 1], w[i]], corners, quad_class))
    return TilingComplex(tiles=tuple(tiles))


def triangle_earth_map(p: int) -> TilingComplex:
    """E△1: 2p equator vertices e_j, with a north and a south tile on each equator edge."""
    tiles = []
    m = 2 * p
    for j in range(m):
        e0, e1 = 2 + j, 2 + (j + 1) % m
        labels = ["α", "β", "γ"] if j % 2 == 0 else ["α", "γ", "β"]
        tiles.append(labeled_tile([NORTH, e0, e1], labels, QuadClass.TRIANGLE))
        tiles.append(labeled_tile([SOUTH, e1, e0], labels, QuadClass.TRIANGLE))
    return TilingComplex(tiles=tuple(tiles))


def bipyramid(p: int) -> TilingComplex:
    """E△3: isosceles triangles over a p-gon equator."""
    tiles = []
    for j in range(p):
        e0, e1 = 2 + j, 2 + (j + 1) % p
        tiles.append(labeled_tile([NORTH, e0, e1], ["α", "β", "β"], QuadClass.ISOSCELES_TRIANGLE))
        tiles.append(labeled_tile([SOUTH, e1, e0], ["α", "β", "β"], QuadClass.ISOSCELES_TRIANGLE))
    return TilingComplex(tiles=tuple(tiles))


def pentagonal_earth_map(p: int) -> TilingComplex:
    """4p pentagons; timezone i holds A_i, C_i, D_i and B_{i+1}.

    In that order consecutive tiles share an edge, so windows of tiles are
    strips from pole to pole.
    """
    if p < 2:
        raise CatalogError("an earth map tiling needs at least 2 timezones", p=p)

    def vid(kind: str, i: int) -> int:
        return 2 + 6 * (i % p) + "xstuvw".index(kind)

    tiles = []
    for i in range(p):
        x, s, t, u, v, w = (vid(k, i) for k in "xstuvw")
        tiles.append(uniform_tile([NORTH, x, s, t, vid("x", i + 1)]))
        tiles.append(uniform_tile([s, u, w, v, t]))
        tiles.append(uniform_tile([SOUTH, vid("w", i + 1), vid("u", i + 1), v, w]))
        tiles.append(uniform_tile([vid("x", i + 1), t, v, vid("u", i + 1), vid("s", i + 1)]))
    return TilingComplex(tiles=tuple(tiles), name=f"PE{p}")


def pentagonal_selection(p: int) -> Dict[int, Tuple[int, int]]:
    """Edges s_i t_i and u_{i+1} v_i, each shared by two pentagons."""
    def vid(kind: str, i: int) -> int:
        return 2 + 6 * (i % p) + "xstuvw".index(kind)

    selection = {}
    for i in range(p):
        base = 4 * i
        selection[base] = (vid("s", i), vid("t", i))
        selection[base + 1] = (vid("t", i), vid("s", i))
        selection[base + 2] = (vid("u", i + 1), vid("v", i))
        selection[base + 3] = (vid("v", i), vid("u", i + 1))
    return selection


def build_earth_map(family: str, p: int) -> TilingComplex:
    """The earth map tiling ``family`` with p timezones."""
    _check(family, p)
    if family == "E□1":
        result = quad_earth_map(p, QuadClass.GENERAL)
    elif family == "E□2":
        result = quad_earth_map(p, QuadClass.ALMOST_EQUILATERAL)
    elif family == "E□3":
        result = quad_earth_map(p, QuadClass.KITE)
    elif family == "E□4":
        result = quad_earth_map(p, QuadClass.RHOMBUS)
    elif family == "E□5":
        result = simple_quadrilateral(pentagonal_earth_map(p), pentagonal_selection(p))
    elif family == "E△1":
        result = triangle_earth_map(p)
    elif family == "E△2":
        rhombi = quad_earth_map(p, QuadClass.RHOMBUS)
        result = simple_triangular(rhombi, diagonals_through(rhombi, "α"),
                                   {("half", "α"): "β", ("apex", "β"): "α"})
    elif family == "E△3":
        result = bipyramid(p)
    elif family == "E△4":
        rhombi = quad_earth_map(p, QuadClass.RHOMBUS)
        result = simple_triangular(rhombi, diagonals_through(rhombi, "β"),
                                   {("half", "β"): "β", ("apex", "α"): "α"})
    else:
        result = triangular(quad_earth_map(p, QuadClass.RHOMBUS), QuadClass.TRIANGLE,
                            center="γ", corner_map={"α": "α", "β": "β"})
    f = _TILES_PER_TIMEZONE[family] * p
    logger.debug(f"built {family} with p={p} ({f} tiles)")
    return result.named(f"{family}(p={p})")


def earth_map_templates(family: str, p: int, **params) -> List[QuadSpec]:
    """Candidate tiles of the family; the first one is the default.

    Free parameters, in units of π: ``beta`` for E△1, E□2 and E□3; the moduli
    point (``phi``, ``a``) for E□1.
    """
    _check(family, p)
    f = _TILES_PER_TIMEZONE[family] * p
    pi = AngleValue.pi

    def param(name: str, default: AngleValue) -> AngleValue:
        return AngleValue.from_pi_units(params[name]) if name in params else default

    try:
        if family == "E△1":
            beta = param("beta", pi(1, 2) - pi(1, f))
            return [quadsolve.solve_general_triangle(pi(4, f), beta, pi(1) - beta)]
        if family == "E△2":
            return [quadsolve.solve_isosceles(pi(1) - pi(4, f), pi(4, f))]
        if family == "E△3":
            return [quadsolve.solve_isosceles(pi(4, f), pi(1, 2))]
        if family == "E△4":
            return [quadsolve.solve_isosceles(pi(8, f), pi(1, 2) - pi(2, f))]
        if family == "E△5":
            return [quadsolve.solve_general_triangle(pi(8, f), pi(1, 2) - pi(4, f), pi(1, 2))]
        if family == "E□1":
            rhombus = quadsolve.solve_kite_rhombus(QuadClass.RHOMBUS, [pi(4, f), pi(1) - pi(2, f)])
            phi = float(params.get("phi", 0.3))
            a = AngleValue.from_pi_units(float(params["a"])).radians if "a" in params else rhombus.a.radians
            return [quadsolve.moduli_general_quad(f, quadsolve.moduli_point(f, phi, a))]
        if family == "E□2":
            return [quadsolve.earth_map_almost_equilateral(f, param("beta", pi(1) - pi(2, f)))]
        if family == "E□3":
            beta = param("beta", pi(1, 2) + pi(1, f))
            return [quadsolve.solve_kite_rhombus(QuadClass.KITE, [pi(4, f), beta, pi(2) - beta * 2])]
        if family == "E□4":
            return [quadsolve.solve_kite_rhombus(QuadClass.RHOMBUS, [pi(4, f), pi(1) - pi(2, f)])]
        return quadsolve.solve_general_quad(pi(1) - pi(8, f), pi(1, 2) + pi(4, f), pi(1, 2), pi(8, f))
    except SolveError as exc:
        logger.error(f"{family} with p={p} has no tile: {exc.message}")
        raise CatalogError(f"{family} parameters are outside their range: {exc.message}", p=p, **params)


def earth_map_template(family: str, p: int, **params) -> QuadSpec:
    return earth_map_templates(family, p, **params)[0]
