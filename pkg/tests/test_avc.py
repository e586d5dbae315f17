"""Tests for vertex enumeration and the counting identities."""

from collections import Counter

import pytest

from sphtile.exceptions import CombinatorialError
from sphtile.models import AngleValue, AVCSet, DegreeHistogram, QuadClass, Tile, TilingComplex, VertexCombo
from sphtile.services import avc
from sphtile.services.catalog import build_platonic, subdivide

pi = AngleValue.pi


def combos(*texts):
    return [VertexCombo.parse(text) for text in texts]


class TestAngleSum:
    """Test the tile angle sum for a given tile count."""

    def test_quadrilaterals(self):
        """Six quadrilaterals have angle sum 8π/3."""
        assert avc.angle_sum_target(6, QuadClass.RHOMBUS) == pi(8, 3)

    def test_triangles(self):
        """Twenty triangles have angle sum 6π/5."""
        assert avc.angle_sum_target(20, QuadClass.EQUILATERAL_TRIANGLE) == pi(6, 5)

    def test_odd_f(self):
        """An odd tile count is rejected."""
        with pytest.raises(CombinatorialError):
            avc.angle_sum_target(5, QuadClass.ALMOST_EQUILATERAL)

    def test_too_few_tiles(self):
        """Four quadrilaterals cannot tile the sphere."""
        with pytest.raises(CombinatorialError):
            avc.angle_sum_target(4, QuadClass.KITE)


class TestEnumeration:
    """Test the anglewise vertex combination."""

    def test_rhombus(self):
        """Angles 2π/3 and 4π/9 make α³ and αβ³."""
        result = avc.enumerate_avc([pi(2, 3), pi(4, 9)], quad_class=QuadClass.RHOMBUS)
        assert result.combos == combos("α³", "αβ³")
        assert str(result) == "α³, αβ³"

    def test_s36_5(self):
        """The S36 5 angles admit every vertex its tiling uses."""
        result = avc.enumerate_avc([pi(4, 9), pi(7, 9), pi(1, 3), pi(5, 9)], quad_class=QuadClass.ALMOST_EQUILATERAL)
        for combo in combos("αβ²", "α²δ²", "αγ³δ", "γδ³", "γ⁶"):
            assert combo in result

    def test_parity_filter_applies(self):
        """A vertex with odd γ and even δ is dropped for almost equilateral tiles."""
        result = avc.enumerate_avc([pi(4, 9), pi(7, 9), pi(1, 3), pi(5, 9)], quad_class=QuadClass.ALMOST_EQUILATERAL)
        assert all(c.m % 2 == c.n % 2 for c in result.combos)

    def test_numeric_angles(self):
        """Numeric angles are matched within the tolerance."""
        result = avc.enumerate_avc([AngleValue.numeric(2.0943951023931953)])
        assert result.combos == combos("α³")

    def test_degree_bound(self):
        """max_degree limits the search."""
        result = avc.enumerate_avc([pi(1, 4), pi(1, 2)], max_degree=4)
        assert all(c.degree <= 4 for c in result.combos)
        assert VertexCombo.parse("β⁴") in result
        assert VertexCombo.parse("α⁸") not in result

    def test_nonpositive_angle(self):
        """Angles must be positive."""
        with pytest.raises(CombinatorialError):
            avc.enumerate_avc([pi(0), pi(1, 2)])

    def test_per_f(self):
        """E□4 angles α = 4/f, β = 1 − 2/f give α^p and αβ² for every even f."""
        table = avc.enumerate_avc_per_f(lambda f: [pi(4, f), pi(1) - pi(2, f)], QuadClass.RHOMBUS, max_f=12)
        assert sorted(table) == [6, 8, 10, 12]
        for f, found in table.items():
            assert VertexCombo(k=f // 2) in found
            assert VertexCombo(k=1, l=2) in found


class TestParity:
    """Test the parity lemma."""

    @pytest.mark.parametrize(
        "text, quad_class, expected",
        [
            ("βγδ", QuadClass.GENERAL, True),
            ("β²δ²", QuadClass.GENERAL, True),
            ("β²γ", QuadClass.GENERAL, False),
            ("αγδ", QuadClass.ALMOST_EQUILATERAL, True),
            ("γ³", QuadClass.ALMOST_EQUILATERAL, False),
            ("αβγ", QuadClass.TRIANGLE, True),
            ("α²β", QuadClass.TRIANGLE, False),
            ("αβ³", QuadClass.ISOSCELES_TRIANGLE, False),
            ("γ³", None, True),
        ],
    )
    def test_parity(self, text, quad_class, expected):
        """Parity depends on the tile class."""
        assert avc.parity_check(VertexCombo.parse(text), quad_class) is expected


class TestCountingAudit:
    """Test the counting and balance lemmas."""

    def test_unbalanced_general(self):
        """For a²bc tiles, β²⋯ without γ²⋯ and δ²⋯ is impossible."""
        avc_set = AVCSet(combos=combos("α³", "β²γδ"), quad_class=QuadClass.GENERAL)
        report = avc.counting_balance_audit(avc_set)
        assert report.check("balance").passed is False

    def test_every_vertex_heavier(self):
        """If every vertex has more β than δ, the counting lemma fails."""
        avc_set = AVCSet(combos=combos("β³", "αβ²δ"), quad_class=QuadClass.GENERAL)
        report = avc.counting_balance_audit(avc_set)
        assert report.check("counting:βδ").passed is False

    def test_cube_census_passes(self):
        """α³ with βγδ passes for a²bc tiles."""
        avc_set = AVCSet(combos=combos("α³", "βγδ"), quad_class=QuadClass.GENERAL)
        report = avc.counting_balance_audit(avc_set)
        assert report.passed
        assert "only vertices are α^k and βγδ" in report.notes

    def test_needs_a_class(self):
        """The audit needs to know the tile class."""
        with pytest.raises(CombinatorialError):
            avc.counting_balance_audit(AVCSet(combos=combos("α³")))


class TestEulerAudit:
    """Test the vertex counting identities."""

    def test_cube(self):
        """The cube satisfies every identity."""
        hist = avc.degree_histogram(build_platonic(6))
        assert hist.v_k(3) == 8
        assert avc.euler_audit(hist, 4).passed

    def test_icosahedron(self):
        """The icosahedron satisfies the triangle identities."""
        assert avc.euler_audit(avc.degree_histogram(build_platonic(20)), 3).passed

    def test_bad_counts(self):
        """Counts that break v − e + f = 2 fail."""
        hist = DegreeHistogram(counts={3: 9}, f=6, e=12, v=9)
        result = avc.euler_audit(hist, 4)
        assert not result.passed

    def test_hexagons(self):
        """No tiling of the sphere uses hexagons."""
        assert not avc.euler_audit(DegreeHistogram(counts={3: 4}, f=2, e=6, v=4), 6).passed


class TestCensus:
    """Test vertex censuses of complexes."""

    def test_icosahedron(self):
        """The icosahedron has twelve α⁵ vertices."""
        assert avc.census_of(build_platonic(20)) == Counter({VertexCombo(k=5): 12})

    def test_census_string_order(self):
        """Lower degrees first."""
        census = Counter(combos("αβ³", "α³", "α³"))
        assert avc.census_string(census) == "α³, αβ³"

    def test_degree_four(self):
        """The octahedron has degree four vertices and the cube does not."""
        assert avc.has_degree4_vertex(build_platonic(8))
        assert not avc.has_degree4_vertex(build_platonic(6))

    def test_aaa_bound_on_cube_subdivision(self):
        """With α³ the only degree 3 vertex, the quadrilateral cube at f = 24 satisfies the bound."""
        t = subdivide(build_platonic(6), "quadrilateral", labels=("α", "β", "γ", "δ"), quad_class=QuadClass.GENERAL)
        assert set(avc.census_of(t)) == set(combos("α³", "β²δ²", "γ⁴"))
        assert avc.count_aaa_bound(t)

    def test_aaa_bound_violated(self):
        """Three tiles around α³ and nothing else fall short of 24 tiles."""
        fan = TilingComplex(tiles=tuple(
            Tile.build([0, 3 * i + 1, 3 * i + 2, 3 * i + 3], ["α", "β", "β", "β"], ["a"] * 4) for i in range(3)
        ))
        assert not avc.count_aaa_bound(fan)

    def test_degree3_miss(self):
        """γ and δ missing from degree 3 vertices show up at γ⁴."""
        t = subdivide(build_platonic(6), "quadrilateral", labels=("α", "β", "γ", "δ"), quad_class=QuadClass.GENERAL)
        assert avc.degree3_miss_check(t, "γ", "δ")
        assert not avc.degree3_miss_check(build_platonic(6), "β", "γ")
