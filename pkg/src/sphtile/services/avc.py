"""Anglewise vertex combinations and the counting lemmas around them."""

import math
from collections import Counter
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Union

from loguru import logger

from ..config import settings
from ..exceptions import CombinatorialError
from ..models import (
    ANGLE_LABELS,
    AngleValue,
    AVCSet,
    CheckResult,
    DegreeHistogram,
    QuadClass,
    TilingComplex,
    VerificationReport,
    VertexCombo,
)

AngleInput = Union[Sequence[AngleValue], Dict[str, AngleValue]]

_MIN_F = {3: 4, 4: 6, 5: 12}


def angle_sum_target(f: int, quad_class: QuadClass) -> AngleValue:
    """Angle sum of one tile in a tiling by f tiles: (n − 2 + 4/f)π."""
    n = quad_class.n_sides
    if f < _MIN_F[n]:
        raise CombinatorialError(f"a tiling by {n}-gons needs f ≥ {_MIN_F[n]}, got {f}", f=f)
    if f % 2:
        raise CombinatorialError(f"f must be even, got {f}", f=f)
    return AngleValue.pi(Fraction(n - 2) + Fraction(4, f))


def _as_mapping(angles: AngleInput) -> Dict[str, AngleValue]:
    if isinstance(angles, dict):
        mapping = dict(angles)
    else:
        mapping = dict(zip(ANGLE_LABELS, angles))
    for label, value in mapping.items():
        if value.radians <= 0.0:
            raise CombinatorialError(f"angle {label} must be positive, got {value}")
    return mapping


def parity_check(combo: VertexCombo, quad_class: Optional[QuadClass]) -> bool:
    """Angles bounded by the same pair of distinct edges share parity at a vertex."""
    if quad_class == QuadClass.GENERAL:
        return combo.l % 2 == combo.m % 2 == combo.n % 2
    if quad_class == QuadClass.ALMOST_EQUILATERAL:
        return combo.m % 2 == combo.n % 2
    if quad_class == QuadClass.TRIANGLE:
        return combo.k % 2 == combo.l % 2 == combo.m % 2
    if quad_class == QuadClass.ISOSCELES_TRIANGLE:
        return combo.l % 2 == 0
    return True


def _no_alpha_gamma_only(combo: VertexCombo) -> bool:
    return not (combo.k > 0 and combo.m > 0 and combo.l == 0 and combo.n == 0)


def enumerate_avc(
    angles: AngleInput,
    max_degree: Optional[int] = None,
    quad_class: Optional[QuadClass] = None,
    f: Optional[int] = None,
    tol: Optional[float] = None,
) -> AVCSet:
    """All vertices kα + lβ + mγ + nδ = 2π of degree at least 3.

    Exact angles are summed as fractions of π; numeric angles are accepted
    within ``tol`` of 2π. The parity filter of ``quad_class`` is applied, and
    for general quadrilaterals vertices made only of α and γ are dropped.
    """
    values = _as_mapping(angles)
    tol = settings.avc_tol if tol is None else tol
    labels = [l for l in ANGLE_LABELS if l in values]
    exact = all(values[l].is_exact for l in labels)
    if max_degree is None:
        max_degree = math.ceil(2.0 * math.pi / min(values[l].radians for l in labels) - 1e-12)
    if max_degree < 3:
        max_degree = 3
    target = Fraction(2) if exact else 2.0 * math.pi
    units = [values[l].fraction if exact else values[l].radians for l in labels]

    found: List[VertexCombo] = []

    def walk(i: int, counts: List[int], total) -> None:
        if i == len(labels):
            hit = total == target if exact else abs(total - target) <= tol
            if hit and sum(counts) >= 3:
                combo = VertexCombo.from_counts(dict(zip(labels, counts)).get(l, 0) for l in ANGLE_LABELS)
                if parity_check(combo, quad_class) and (
                    quad_class != QuadClass.GENERAL or _no_alpha_gamma_only(combo)
                ):
                    found.append(combo)
            return
        used = sum(counts)
        count = 0
        running = total
        while used + count <= max_degree:
            if exact and running > target:
                break
            if not exact and running > target + tol:
                break
            walk(i + 1, counts + [count], running)
            count += 1
            running = running + units[i]

    walk(0, [], Fraction(0) if exact else 0.0)
    found.sort(key=lambda c: (c.degree, c.sort_key()))
    logger.debug(f"enumerate_avc: {len(found)} vertex type(s) up to degree {max_degree}")
    return AVCSet(combos=found, f=f, quad_class=quad_class)


def enumerate_avc_per_f(
    angle_formulas: Callable[[int], AngleInput],
    quad_class: QuadClass,
    max_f: Optional[int] = None,
    min_f: Optional[int] = None,
) -> Dict[int, AVCSet]:
    """The AVC for every even f up to ``max_f`` at which the formulas give valid angles."""
    max_f = settings.max_f if max_f is None else max_f
    start = _MIN_F[quad_class.n_sides] if min_f is None else min_f
    start += start % 2
    result: Dict[int, AVCSet] = {}
    for f in range(start, max_f + 1, 2):
        try:
            result[f] = enumerate_avc(angle_formulas(f), quad_class=quad_class, f=f)
        except CombinatorialError as exc:
            logger.debug(f"f={f} skipped: {exc.message}")
    return result


def _equal_count_pairs(quad_class: QuadClass) -> List[tuple]:
    counts = Counter(quad_class.corner_labels)
    names = quad_class.angle_names
    return [
        (x, y) for i, x in enumerate(names) for y in names[i + 1:] if counts[x] == counts[y]
    ]


def _join(combos: Sequence[VertexCombo]) -> str:
    return ", ".join(str(c) for c in combos)


def counting_balance_audit(
    avc: AVCSet, quad_class: Optional[QuadClass] = None, angles: Optional[AngleInput] = None
) -> VerificationReport:
    """Apply the counting lemma to every equal-count angle pair, then the balance lemmas.

    A failed check means no tiling can use only the vertices of ``avc``.
    Reductions forced by the lemmas are listed in ``notes``.
    """
    quad_class = quad_class or avc.quad_class
    if quad_class is None:
        raise CombinatorialError("counting audit needs a tile class")
    report = VerificationReport()
    combos = list(avc.combos)
    if not combos:
        report.add("counting", False, detail="empty vertex set")
        return report

    for theta, rho in _equal_count_pairs(quad_class):
        heavy_theta = [c for c in combos if c.count(theta) > c.count(rho)]
        heavy_rho = [c for c in combos if c.count(rho) > c.count(theta)]
        balanced = [c for c in combos if c.count(rho) == c.count(theta)]
        name = f"counting:{theta}{rho}"
        if not balanced and (not heavy_theta or not heavy_rho):
            report.add(name, False, detail=f"every vertex has more {theta if heavy_theta else rho}")
            continue
        report.add(name, True)
        for heavy, other in ((heavy_theta, heavy_rho), (heavy_rho, heavy_theta)):
            if heavy and not other:
                report.notes.append(f"{_join(heavy)} cannot be vertices")
        if not balanced and heavy_theta and heavy_rho:
            for side in (heavy_theta, heavy_rho):
                if len(side) == 1:
                    report.notes.append(f"{side[0]} is a vertex")

    def squared(label: str) -> bool:
        return any(c.count(label) >= 2 for c in combos)

    if quad_class == QuadClass.GENERAL:
        present = {l: squared(l) for l in ("β", "γ", "δ")}
        if any(present.values()) and not all(present.values()):
            missing = ", ".join(f"{l}²⋯" for l, ok in present.items() if not ok)
            report.add("balance", False, detail=f"missing {missing}")
        else:
            report.add("balance", True)
            if not any(present.values()):
                report.notes.append("only vertices are α^k and βγδ")
    elif quad_class == QuadClass.ALMOST_EQUILATERAL:
        values = _as_mapping(angles) if angles is not None else None
        symmetric = values is not None and values["γ"].close_to(values["δ"], settings.avc_tol)
        if not symmetric:
            present = {l: squared(l) for l in ("γ", "δ")}
            if any(present.values()) and not all(present.values()):
                missing = ", ".join(f"{l}²⋯" for l, ok in present.items() if not ok)
                report.add("balance", False, detail=f"missing {missing}")
            else:
                report.add("balance", True)
                if not any(present.values()):
                    report.notes.append("only vertices are α^kβ^l and α^kβ^lγδ")
    return report


def euler_audit(hist: DegreeHistogram, n: int) -> CheckResult:
    """Vertex counting identities for a tiling by n-gons."""
    if n not in _MIN_F:
        return CheckResult(name="euler", passed=False, detail=f"no tiling of the sphere by {n}-gons")
    f, e, v = hist.f, hist.e, hist.v
    degree_total = sum(k * count for k, count in hist.counts.items())
    checks = [
        ("v − e + f = 2", v - e + f == 2),
        ("nf = 2e", n * f == 2 * e),
        ("Σ k·v_k = 2e", degree_total == 2 * e),
        ("v = Σ v_k", v == sum(hist.counts.values())),
        ("(6 − n)f = 12 + Σ 2(k − 3)v_k",
         (6 - n) * f == 12 + sum(2 * (k - 3) * c for k, c in hist.counts.items() if k >= 4)),
    ]
    if any(k < 3 for k, c in hist.counts.items() if c):
        checks.append(("every vertex has degree ≥ 3", False))
    if n == 4:
        checks.append(("f = 6 + Σ (k − 3)v_k", f == 6 + sum((k - 3) * c for k, c in hist.counts.items() if k >= 4)))
        checks.append(("v₃ = 8 + Σ (k − 4)v_k", hist.v_k(3) == 8 + sum((k - 4) * c for k, c in hist.counts.items() if k >= 4)))
    elif n == 3:
        checks.append(("3f = 12 + Σ 2(k − 3)v_k", 3 * f == 12 + sum(2 * (k - 3) * c for k, c in hist.counts.items() if k >= 4)))
        checks.append(("f = 8 + Σ (k − 4)v_k", f == 8 + sum((k - 4) * c for k, c in hist.counts.items())))
    for name, ok in checks:
        if not ok:
            return CheckResult(name="euler", passed=False, detail=name)
    return CheckResult(name="euler", passed=True)


def census_of(complex_: TilingComplex) -> Counter:
    """Multiset of vertex types of a complex."""
    return Counter(complex_.vertex_combo(v) for v in complex_.vertices())


def census_string(census: Counter) -> str:
    """Distinct vertex types, α-heavy first within each degree."""
    return ", ".join(str(c) for c in sorted(census, key=lambda c: (c.degree, c.sort_key())))


def degree_histogram(complex_: TilingComplex) -> DegreeHistogram:
    counts = Counter(complex_.degrees().values())
    return DegreeHistogram(counts=dict(sorted(counts.items())), f=complex_.f, e=complex_.e, v=complex_.v)


def has_degree4_vertex(complex_: TilingComplex) -> bool:
    return any(d == 4 for d in complex_.degrees().values())


def count_aaa_bound(complex_: TilingComplex) -> bool:
    """If α appears once per tile and α³ is the only degree 3 vertex, then f ≥ 24.

    At f = 24 all vertices then have degree 3 or 4. True when the hypothesis fails.
    """
    if complex_.tile_size != 4:
        return True
    if any(t.angle_labels().count("α") != 1 for t in complex_.tiles):
        return True
    census = census_of(complex_)
    degree3 = {c for c in census if c.degree == 3}
    if degree3 != {VertexCombo(k=3)}:
        return True
    if complex_.f < 24:
        return False
    if complex_.f == 24:
        return all(c.degree <= 4 for c in census)
    return True


def degree3_miss_check(complex_: TilingComplex, theta: str, rho: str) -> bool:
    """If θ and ρ are absent from degree 3 vertices, some degree 4 vertex carries three of
    them or some degree 5 vertex carries five."""
    census = census_of(complex_)
    together = lambda c: c.count(theta) + (c.count(rho) if rho != theta else 0)  # noqa: E731
    if any(c.degree == 3 and together(c) > 0 for c in census):
        return True
    return any((c.degree == 4 and together(c) >= 3) or (c.degree == 5 and together(c) == 5) for c in census)
