"""Solve congruent tiles from their angles.

Almost equilateral tiles go through the sine balance identity, the closed form
for cos a, and the recovery of b from K = Y(b)ᵀ. Triangles use the dual law of
cosines, kites and rhombi split into triangles, and general a²bc tiles are
solved numerically from the holonomy identity.
"""

import math
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np
from loguru import logger
from scipy.optimize import brentq, least_squares

from ..config import settings
from ..exceptions import SolveError
from ..models import AngleValue, QuadClass, QuadSpec, SolveReport
from . import sphercore
from .sphercore import ArcPolygon


def _r(x) -> float:
    return float(x)


# Almost equilateral quadrilaterals


def sine_balance_residual(alpha, beta, gamma, delta) -> float:
    """sin½α·sin(δ−½β) − sin½β·sin(γ−½α)."""
    a, b, g, d = _r(alpha), _r(beta), _r(gamma), _r(delta)
    return math.sin(a / 2) * math.sin(d - b / 2) - math.sin(b / 2) * math.sin(g - a / 2)


coolsaet_residual = sine_balance_residual


def _cos_a_from(alpha: float, gamma: float, delta: float) -> Tuple[float, float]:
    denom = (1.0 - math.cos(alpha)) * math.sin(delta)
    return math.sin(alpha) * math.cos(delta) + math.sin(gamma), denom


def _arccos_checked(num: float, denom: float, what: str) -> float:
    if abs(denom) < settings.identity_tol:
        raise SolveError(f"degenerate denominator while solving {what}", denominator=denom)
    q = num / denom
    if abs(q) >= 1.0:
        raise SolveError(f"no such tile: cos {what} = {q:.12g} is outside (−1, 1)", quotient=q)
    return math.acos(q)


def solve_edge_a(alpha, beta, gamma, delta) -> AngleValue:
    """The a-edge of an almost equilateral tile.

    cos a = (sin α cos δ + sin γ)/((1 − cos α) sin δ), a ∈ (0, π).
    """
    residual = sine_balance_residual(alpha, beta, gamma, delta)
    if abs(residual) > settings.placement_tol:
        raise SolveError("angles violate the sine balance identity", residual=residual)
    num, denom = _cos_a_from(_r(alpha), _r(gamma), _r(delta))
    a = _arccos_checked(num, denom, "a")
    logger.debug(f"solve_edge_a: cos a = {math.cos(a):.12f}")
    return AngleValue.numeric(a)


def solve_edge_a_alt(alpha, beta, gamma, delta) -> AngleValue:
    """The same edge from the companion equality with (α,δ) and (β,γ) exchanged."""
    num, denom = _cos_a_from(_r(beta), _r(delta), _r(gamma))
    return AngleValue.numeric(_arccos_checked(num, denom, "a"))


def edge_a_cross_check(alpha, beta, gamma, delta) -> Optional[float]:
    """cos a from (sin β sin γ − sin α sin δ) cos a = cos β cos γ − cos α cos δ.

    None when the left coefficient vanishes (symmetric tiles).
    """
    a, b, g, d = _r(alpha), _r(beta), _r(gamma), _r(delta)
    coeff = math.sin(b) * math.sin(g) - math.sin(a) * math.sin(d)
    if abs(coeff) < 1e-9:
        return None
    return (math.cos(b) * math.cos(g) - math.cos(a) * math.cos(d)) / coeff


def k_matrix(alpha, beta, gamma, delta, a) -> np.ndarray:
    """K = Z(π−δ)Y(a)Z(π−α)Y(a)Z(π−β)Y(a)Z(π−γ)."""
    rz = lambda t: sphercore.rot_z(math.pi - _r(t))  # noqa: E731
    ya = sphercore.rot_y(a)
    return rz(delta) @ ya @ rz(alpha) @ ya @ rz(beta) @ ya @ rz(gamma)


def solve_edge_b(alpha, beta, gamma, delta, a) -> AngleValue:
    """The b-edge, from K = Y(b)ᵀ; b ∈ (0, 2π]."""
    k = k_matrix(alpha, beta, gamma, delta, a)
    off = max(abs(k[1, 1] - 1.0), abs(k[0, 1]), abs(k[1, 0]), abs(k[1, 2]), abs(k[2, 1]))
    if off > settings.placement_tol:
        logger.error(f"K is not a Y-rotation (defect {off:.3e})")
        raise SolveError("inconsistent input: K is not a rotation about the y-axis", defect=off)
    cos_b, sin_b = float(k[0, 0]), float(k[2, 0])
    if abs(sin_b) < settings.degeneracy_tol:
        raise SolveError("degenerate tile: sin b vanishes", sin_b=sin_b)
    b = math.atan2(sin_b, cos_b) % (2.0 * math.pi)
    if b == 0.0:
        b = 2.0 * math.pi
    return AngleValue.numeric(b)


def solve_almost_equilateral(alpha, beta, gamma, delta) -> QuadSpec:
    a = solve_edge_a(alpha, beta, gamma, delta)
    b = solve_edge_b(alpha, beta, gamma, delta, a)
    return QuadSpec(quad_class=QuadClass.ALMOST_EQUILATERAL, alpha=_angle(alpha), beta=_angle(beta),
                    gamma=_angle(gamma), delta=_angle(delta), a=a, b=b)


def _angle(x) -> AngleValue:
    return x if isinstance(x, AngleValue) else AngleValue.numeric(float(x))


# Tiles from coordinates


def build_tile(spec: QuadSpec) -> ArcPolygon:
    """Place the tile with its first corner at the north pole and its last edge along +x.

    Vertices come out in template order: v₁ = e_z, v₂ at azimuth α₁, v_n on
    the xz-plane; seen from outside they run clockwise.
    """
    edges = spec.edge_lengths()
    angles = spec.corner_angles()
    steps = sphercore.holonomy_steps(edges, angles)
    defect = sphercore.identity_defect(steps[-1])
    if defect > settings.closure_tol:
        raise SolveError("tile holonomy fails to close", defect=defect)
    points = [sphercore.E_Z.copy()]
    for m in steps[:-1]:
        points.append(m.T @ sphercore.E_Z)
    return ArcPolygon(vertices=tuple(points))


def measure_polygon(points: Sequence[np.ndarray]) -> Tuple[List[float], List[float], float]:
    """Angles at each vertex, edges from each vertex to the next, and area.

    The interior is the smaller of the two regions.
    """
    sign = sphercore.orientation_sign(points)
    raw = sphercore.interior_angles(points)
    angles = raw if sign > 0 else [2.0 * math.pi - x for x in raw]
    return angles, sphercore.edge_lengths(points), sphercore.polygon_area(points)


# Triangles


def triangle_exists(alpha, beta, gamma) -> bool:
    a, b, g = _r(alpha), _r(beta), _r(gamma)
    if not all(0.0 < x < math.pi for x in (a, b, g)):
        return False
    return a + b + g > math.pi and a + math.pi > b + g and b + math.pi > a + g and g + math.pi > a + b


def _opposite_side(opposite: float, x: float, y: float) -> float:
    c = (math.cos(opposite) + math.cos(x) * math.cos(y)) / (math.sin(x) * math.sin(y))
    return math.acos(max(-1.0, min(1.0, c)))


def solve_triangle(alpha, beta, gamma) -> Tuple[AngleValue, AngleValue, AngleValue]:
    """Sides (a, b, c): a joins α and β, b joins α and γ, c joins β and γ."""
    if not triangle_exists(alpha, beta, gamma):
        raise SolveError("no spherical triangle with these angles",
                         angles=[float(alpha), float(beta), float(gamma)])
    a_, b_, g_ = _r(alpha), _r(beta), _r(gamma)
    side_a = _opposite_side(g_, a_, b_)
    side_b = _opposite_side(b_, a_, g_)
    side_c = _opposite_side(a_, b_, g_)
    return AngleValue.numeric(side_a), AngleValue.numeric(side_b), AngleValue.numeric(side_c)


def solve_general_triangle(alpha, beta, gamma) -> QuadSpec:
    a, b, c = solve_triangle(alpha, beta, gamma)
    return QuadSpec(quad_class=QuadClass.TRIANGLE, alpha=_angle(alpha), beta=_angle(beta),
                    gamma=_angle(gamma), a=a, b=b, c=c)


def solve_isosceles(alpha, beta) -> QuadSpec:
    """Apex α between the two a-edges, base angles β."""
    a, _, c = solve_triangle(alpha, beta, beta)
    return QuadSpec(quad_class=QuadClass.ISOSCELES_TRIANGLE, alpha=_angle(alpha), beta=_angle(beta), a=a, b=c)


def regular_polygon_edge(n: int, alpha) -> AngleValue:
    """Edge of the regular n-gon with angle α: cos h = cos(π/n)/sin(α/2), edge = 2h."""
    q = math.cos(math.pi / n) / math.sin(_r(alpha) / 2.0)
    if not -1.0 < q < 1.0:
        raise SolveError(f"no regular {n}-gon with angle {_angle(alpha)}", quotient=q)
    return AngleValue.numeric(2.0 * math.acos(q))


def solve_regular(quad_class: QuadClass, alpha) -> QuadSpec:
    edge = regular_polygon_edge(quad_class.n_sides, alpha)
    return QuadSpec(quad_class=quad_class, alpha=_angle(alpha), a=edge)


# Kites and rhombi


def solve_kite_rhombus(quad_class: QuadClass, angles: Sequence) -> QuadSpec:
    """Kite (α, β, γ) or rhombus (α, β) from its triangle halves."""
    if quad_class == QuadClass.RHOMBUS:
        alpha, beta = angles[0], angles[1]
        half_a, half_b = _r(alpha) / 2.0, _r(beta) / 2.0
        if not triangle_exists(half_a, half_b, math.pi / 2.0):
            raise SolveError("rhombus quarter triangle does not exist")
        edge = math.acos(1.0 / (math.tan(half_a) * math.tan(half_b)))
        return QuadSpec(quad_class=quad_class, alpha=_angle(alpha), beta=_angle(beta), a=AngleValue.numeric(edge))
    if quad_class == QuadClass.KITE:
        alpha, beta, gamma = angles[0], angles[1], angles[2]
        halves = (_r(alpha) / 2.0, _r(beta), _r(gamma) / 2.0)
        if not triangle_exists(*halves):
            raise SolveError("kite half triangle does not exist", angles=list(halves))
        a, _, b = solve_triangle(*halves)
        return QuadSpec(quad_class=quad_class, alpha=_angle(alpha), beta=_angle(beta), gamma=_angle(gamma), a=a, b=b)
    raise SolveError(f"{quad_class.value} is neither a kite nor a rhombus")


# General quadrilaterals


def _general_residual(x: np.ndarray, angles: Sequence[float]) -> np.ndarray:
    a, b, c = x
    h = sphercore.polygon_holonomy([a, b, c, a], angles)
    return (h - np.eye(3)).ravel()


def solve_general_quad(alpha, beta, gamma, delta, guesses: Optional[Sequence[Sequence[float]]] = None) -> List[QuadSpec]:
    """All a²bc tiles with the given angles reachable from the starting points.

    Edges are found by least squares on the holonomy identity; solutions are
    kept when the identity holds within the closure tolerance and the tile is
    simple.
    """
    angles = [_r(alpha), _r(beta), _r(gamma), _r(delta)]
    if guesses is None:
        grid = [0.2, 0.4, 0.6, 0.8]
        guesses = [(x * math.pi, y * math.pi, z * math.pi) for x in grid for y in grid for z in grid]
    eps = 1e-9
    found: List[Tuple[float, float, float]] = []
    for x0 in guesses:
        result = least_squares(
            _general_residual, x0=np.asarray(x0, dtype=float), args=(angles,),
            bounds=([eps] * 3, [math.pi - eps] * 3), xtol=1e-15, ftol=1e-15, gtol=1e-15,
        )
        if float(np.max(np.abs(result.fun))) > 1e-10:
            continue
        sol = tuple(float(v) for v in result.x)
        if any(max(abs(p - q) for p, q in zip(sol, old)) < 1e-7 for old in found):
            continue
        found.append(sol)
    specs = []
    for a, b, c in sorted(found):
        spec = QuadSpec(quad_class=QuadClass.GENERAL, alpha=_angle(alpha), beta=_angle(beta),
                        gamma=_angle(gamma), delta=_angle(delta),
                        a=AngleValue.numeric(a), b=AngleValue.numeric(b), c=AngleValue.numeric(c))
        if sphercore.is_simple(build_tile(spec).vertices):
            specs.append(spec)
    if not specs:
        raise SolveError("no general quadrilateral with these angles",
                         angles=[round(x / math.pi, 12) for x in angles])
    logger.debug(f"solve_general_quad: {len(specs)} candidate tile(s)")
    return specs


def moduli_point(f: int, phi: float, a: float) -> np.ndarray:
    """The point C at distance a from the south pole and azimuth φ·α/2 (φ ∈ (−1, 1) is the first region)."""
    alpha = 4.0 * math.pi / f
    return sphercore.from_spherical(math.pi - a, phi * alpha / 2.0)


def moduli_general_quad(f: int, c_point: np.ndarray) -> QuadSpec:
    """The E□1 tile with A at the north pole, B and D at azimuths ±α/2 and C given.

    AB = AD = A*C = a, where A* is the south pole; the tile has ∠A = 4π/f and
    area 4π/f. C on the mid-meridian gives a kite (b = c).
    """
    if f < 6 or f % 2:
        raise SolveError(f"f must be even and at least 6, got {f}")
    c = sphercore.unit(c_point)
    if abs(abs(float(c[2])) - 1.0) < settings.antipodal_tol:
        raise SolveError("C may not be a pole")
    alpha_exact = AngleValue.pi(4, f)
    alpha = alpha_exact.radians
    phi = math.atan2(float(c[1]), float(c[0]))
    angle_cab = (alpha / 2.0 - phi) % (2.0 * math.pi)
    if angle_cab <= 0.0 or angle_cab >= math.pi + alpha / 2.0:
        raise SolveError("C lies outside the admissible region", angle_cab=angle_cab)
    a = sphercore.arc_length(-sphercore.E_Z, c)
    pa = sphercore.E_Z.copy()
    pb = sphercore.from_spherical(a, alpha / 2.0)
    pd = sphercore.from_spherical(a, -alpha / 2.0)
    points = [pa, pb, c, pd]
    if not sphercore.is_simple(points):
        raise SolveError("C gives a quadrilateral that is not simple")
    angles, edges, area = measure_polygon(points)
    if abs(area - alpha) > settings.placement_tol or abs(angles[0] - alpha) > settings.placement_tol:
        raise SolveError("C lies outside the admissible region", area=area)
    return QuadSpec(
        quad_class=QuadClass.GENERAL, alpha=alpha_exact,
        beta=AngleValue.numeric(angles[1]), gamma=AngleValue.numeric(angles[2]), delta=AngleValue.numeric(angles[3]),
        a=AngleValue.numeric(edges[0]), b=AngleValue.numeric(edges[1]), c=AngleValue.numeric(edges[2]),
    )


def earth_map_almost_equilateral(f: int, beta: AngleValue) -> QuadSpec:
    """The E□2 tile: α = 4π/f at the pole and a free angle β ∈ (½π, 3/2π).

    cos a = −cos β/(1 − cos β); γ, δ and b are measured from the placed tile.
    """
    if f < 6 or f % 2:
        raise SolveError(f"f must be even and at least 6, got {f}")
    b_rad = _r(beta)
    if not 0.5 * math.pi < b_rad < 1.5 * math.pi:
        raise SolveError("β must lie in (π/2, 3π/2)", beta=b_rad / math.pi)
    alpha = AngleValue.pi(4, f)
    a = math.acos(-math.cos(b_rad) / (1.0 - math.cos(b_rad)))
    m2 = sphercore.rot_y(a) @ sphercore.rot_z(math.pi - b_rad) @ sphercore.rot_y(a) @ sphercore.rot_z(math.pi - alpha.radians)
    pa = sphercore.E_Z.copy()
    pb = sphercore.from_spherical(a, alpha.radians)
    pc = m2.T @ sphercore.E_Z
    pd = sphercore.from_spherical(a, 0.0)
    angles, edges, area = measure_polygon([pa, pb, pc, pd])
    if abs(area - alpha.radians) > settings.placement_tol:
        raise SolveError("E□2 tile has the wrong area", area=area)
    return QuadSpec(
        quad_class=QuadClass.ALMOST_EQUILATERAL, alpha=alpha, beta=_angle(beta),
        gamma=AngleValue.numeric(angles[2]), delta=AngleValue.numeric(angles[3]),
        a=AngleValue.numeric(a), b=AngleValue.numeric(edges[2]),
    )


# Root finding


def find_roots(residual: Callable[[float], float], bracket: Tuple[float, float],
               tol: Optional[float] = None, grid_points: Optional[int] = None) -> List[float]:
    """Every root isolated by a sign change on a uniform grid, refined by Brent's method."""
    lo, hi = bracket
    tol = settings.root_xtol if tol is None else tol
    n = settings.root_grid_points if grid_points is None else grid_points
    xs = np.linspace(lo, hi, n + 1)
    values = [residual(float(x)) for x in xs]
    roots: List[float] = []
    for i in range(n):
        y0, y1 = values[i], values[i + 1]
        if y0 == 0.0:
            if not roots or abs(roots[-1] - xs[i]) > tol:
                roots.append(float(xs[i]))
            continue
        if y0 * y1 < 0.0:
            roots.append(float(brentq(residual, float(xs[i]), float(xs[i + 1]), xtol=tol)))
    if values[-1] == 0.0 and (not roots or abs(roots[-1] - hi) > tol):
        roots.append(float(hi))
    return roots


def find_root(residual: Callable[[float], float], bracket: Tuple[float, float], tol: Optional[float] = None) -> float:
    """The first root in the bracket."""
    roots = find_roots(residual, bracket, tol)
    if not roots:
        raise SolveError("no sign change in bracket", bracket=list(bracket))
    return roots[0]


def add_bbb_gamma() -> AngleValue:
    """γ ∈ (0, ⅔π) with sin(⅔π−γ) sin γ = sin(⅓π) sin(2γ−⅔π)."""
    def residual(g: float) -> float:
        return math.sin(2 * math.pi / 3 - g) * math.sin(g) - math.sin(math.pi / 3) * math.sin(2 * g - 2 * math.pi / 3)
    return AngleValue.numeric(find_root(residual, (1e-9, 2 * math.pi / 3 - 1e-9)))


def abb_acc_even_solutions(max_f: Optional[int] = None) -> Dict[str, List[int]]:
    """Even f solving the two angle equations left by the vertices αβ², αγ² with αβδ² or αγδ³."""
    max_f = settings.max_f if max_f is None else max_f

    def with_abdd(f: float) -> float:
        return math.sin(4 * math.pi / f) * math.sin((1 - 16 / f) * math.pi)

    def with_agddd(f: float) -> float:
        return (math.sin((1 - 12 / f) * math.pi) * math.sin(2 * math.pi / f)
                - math.sin(6 * math.pi / f) * math.sin((1 - 24 / f) * math.pi))

    return {"αβδ²": _even_roots(with_abdd, 10, max_f), "αγδ³": _even_roots(with_agddd, 14, max_f)}


def _even_roots(residual: Callable[[float], float], lo: int, hi: int) -> List[int]:
    """Even integers in [lo, hi] at which a root of the residual lies."""
    if hi <= lo:
        return []
    found = set()
    for root in find_roots(residual, (float(lo), float(hi))):
        f = int(round(root))
        if f % 2 == 0 and lo <= f <= hi and abs(residual(f)) < settings.avc_tol:
            found.add(f)
    return sorted(found)


# Closed forms for the sporadic tiles


def s12_1_gamma() -> AngleValue:
    """tan γ = −√3/√5 with γ ∈ (π/2, π)."""
    return AngleValue.numeric(math.pi - math.atan(math.sqrt(3.0) / math.sqrt(5.0)))


def s16_1_gamma() -> AngleValue:
    """tan γ = 2 − √5 − √(7 − 3√5) with γ ∈ (π/2, π)."""
    t = 2.0 - math.sqrt(5.0) - math.sqrt(7.0 - 3.0 * math.sqrt(5.0))
    return AngleValue.numeric(math.pi + math.atan(t))


def s16_2_beta() -> AngleValue:
    """cos β = (√2 − 1)/2."""
    return AngleValue.numeric(math.acos((math.sqrt(2.0) - 1.0) / 2.0))


def s16_4_gamma() -> AngleValue:
    """tan γ = 2 + √2 with γ ∈ (0, π/2)."""
    return AngleValue.numeric(math.atan(2.0 + math.sqrt(2.0)))


# Necessary conditions


def _status(hypothesis: bool, conclusion: bool) -> str:
    if not hypothesis:
        return "vacuous"
    return "satisfied" if conclusion else "violated"


def geometry_predicates(spec: QuadSpec, tol: float = 1e-12) -> Dict[str, str]:
    """Necessary conditions on a simple almost equilateral tile.

    Each entry is "vacuous" (hypothesis fails), "satisfied" or "violated".
    """
    al, be, ga, de = (spec.angle(l).radians for l in ("α", "β", "γ", "δ"))
    pi = math.pi
    lt = lambda x, y: x < y - tol  # noqa: E731
    same = lambda p, q: p == q  # noqa: E731
    return {
        "alpha_plus_two_beta": _status(lt(ga, pi), al + 2 * be > pi and al + 2 * de > pi),
        "two_alpha_plus_beta": _status(lt(de, pi), 2 * al + be > pi and be + 2 * ga > pi),
        "beta_gamma_bound": _status(lt(al, pi) and lt(be, pi) and lt(ga, pi), be + ga < de + pi and ga + de < be + pi),
        "alpha_gamma_order": _status(lt(ga, pi) and lt(de, pi), same(al > ga + tol, be > de + tol)),
        "alpha_beta_order": _status(True, same(lt(al, be), lt(ga, de)) and same(lt(be, al), lt(de, ga))),
        "half_angle_order": _status(ga <= pi + tol and de <= pi + tol, same(lt(al, 2 * ga), lt(be, 2 * de))),
    }


# Dispatcher


def solve(quad_class: QuadClass, angles: Sequence[AngleValue]) -> SolveReport:
    """Solve the tile of the given class and report the identities it satisfies."""
    n_expected = len(quad_class.angle_names)
    if len(angles) != n_expected:
        raise SolveError(f"{quad_class.value} needs {n_expected} angle(s), got {len(angles)}")
    residuals: Dict[str, float] = {}
    notes: List[str] = []
    try:
        if quad_class in (QuadClass.EQUILATERAL_TRIANGLE, QuadClass.SQUARE, QuadClass.REGULAR_PENTAGON):
            spec = solve_regular(quad_class, angles[0])
        elif quad_class == QuadClass.ISOSCELES_TRIANGLE:
            spec = solve_isosceles(*angles)
        elif quad_class == QuadClass.TRIANGLE:
            spec = solve_general_triangle(*angles)
        elif quad_class in (QuadClass.KITE, QuadClass.RHOMBUS):
            spec = solve_kite_rhombus(quad_class, angles)
        elif quad_class == QuadClass.ALMOST_EQUILATERAL:
            residuals["sine_balance"] = abs(sine_balance_residual(*angles))
            spec = solve_almost_equilateral(*angles)
            a = spec.a.radians
            residuals["edge_a_alt"] = abs(solve_edge_a_alt(*angles).radians - a)
            cross = edge_a_cross_check(*angles)
            if cross is not None:
                residuals["edge_a_cross"] = abs(cross - math.cos(a))
            if spec.b.radians >= math.pi:
                notes.append("b is not below π")
        else:
            candidates = solve_general_quad(*angles)
            spec = candidates[0]
            if len(candidates) > 1:
                notes.append(f"{len(candidates)} tiles share these angles; reporting the first")
    except SolveError as exc:
        logger.error(f"solve {quad_class.value} failed: {exc.message}")
        raise
    polygon = build_tile(spec)
    residuals["holonomy"] = sphercore.identity_defect(
        sphercore.polygon_holonomy(spec.edge_lengths(), spec.corner_angles()))
    simple = sphercore.is_simple(polygon.vertices)
    success = simple and all(0.0 < e.radians < math.pi for e in spec.edge_values().values())
    logger.info(f"solved {quad_class.value} tile: " + ", ".join(f"{k}={v}" for k, v in spec.edge_values().items()))
    return SolveReport(spec=spec, residuals=residuals, simple=simple, success=success, notes=notes)


def edges_in_pi(spec: QuadSpec) -> Dict[str, float]:
    return {k: v.radians / math.pi for k, v in spec.edge_values().items()}


def exact_fraction(value: float, max_den: int = 720) -> Optional[Fraction]:
    """The rational p/q (q ≤ max_den) equal to value within 1e-12, if any."""
    fr = Fraction(value).limit_denominator(max_den)
    return fr if abs(float(fr) - value) < 1e-12 else None
