"""Tests for the tile solvers."""

import math

import numpy as np
import pytest
from hypothesis import given, settings as hyp_settings
from hypothesis import strategies as st

from sphtile.config import settings as app_settings
from sphtile.exceptions import SolveError
from sphtile.models import AngleValue, QuadClass, QuadSpec
from sphtile.services import quadsolve, sphercore
from sphtile.services.catalog.sporadic import SPORADIC, sporadic_angles

pi = AngleValue.pi


class TestSineBalance:
    """Test the sine balance identity of almost equilateral tiles."""

    def test_symmetric_angles_balance(self):
        """α = β with γ = δ always balances."""
        assert quadsolve.sine_balance_residual(0.7, 0.7, 1.9, 1.9) == pytest.approx(0.0, abs=1e-15)

    def test_coolsaet_name(self):
        """The identity is also published as coolsaet_residual."""
        angles = [pi(4, 9), pi(7, 9), pi(1, 3), pi(5, 9)]
        assert quadsolve.coolsaet_residual(*angles) == quadsolve.sine_balance_residual(*angles)

    @pytest.mark.parametrize("name", sorted(SPORADIC))
    def test_sporadic_tiles_balance(self, name):
        """Every sporadic tile satisfies the identity."""
        assert abs(quadsolve.sine_balance_residual(*sporadic_angles(name))) < 1e-10

    def test_perturbed_angles_fail(self):
        """Moving δ of S36 5 breaks the identity."""
        angles = [pi(4, 9), pi(7, 9), pi(1, 3), pi(5, 9) + pi(1, 100)]
        assert abs(quadsolve.sine_balance_residual(*angles)) > 1e-3
        with pytest.raises(SolveError):
            quadsolve.solve_edge_a(*angles)


class TestAlmostEquilateral:
    """Test the a³b solver."""

    def test_s36_5_edges(self):
        """S36 5 has a ≈ 0.1741π with cos a a root of 3t³ + 27t² − 3t − 19."""
        spec = quadsolve.solve_almost_equilateral(pi(4, 9), pi(7, 9), pi(1, 3), pi(5, 9))
        t = math.cos(spec.a.radians)
        assert spec.a.pi_units == pytest.approx(0.1741, abs=1e-4)
        assert spec.b.pi_units == pytest.approx(0.2584, abs=1e-4)
        assert 3 * t**3 + 27 * t**2 - 3 * t - 19 == pytest.approx(0.0, abs=1e-9)

    def test_sin_b_threshold_has_its_own_setting(self, monkeypatch):
        """The sin b cut-off follows degeneracy_tol, not the verification tolerance."""
        angles = (pi(4, 9), pi(7, 9), pi(1, 3), pi(5, 9))
        monkeypatch.setattr(app_settings, "tolerance", 1.0)
        assert quadsolve.solve_almost_equilateral(*angles).b.pi_units == pytest.approx(0.2584, abs=1e-4)
        monkeypatch.setattr(app_settings, "degeneracy_tol", 1.0)
        with pytest.raises(SolveError):
            quadsolve.solve_almost_equilateral(*angles)

    def test_s36_6_edge_a(self):
        """S36 6 has cos a = 4 cos(π/9) − 3."""
        a = quadsolve.solve_edge_a(pi(1, 3), pi(5, 9), pi(7, 18), pi(5, 6))
        t = math.cos(a.radians)
        assert t == pytest.approx(4 * math.cos(math.pi / 9) - 3, abs=1e-10)
        assert t**3 + 9 * t**2 + 15 * t - 17 == pytest.approx(0.0, abs=1e-9)

    def test_s16_4_edges(self):
        """S16 4 has a = π/4 and cos b = (2√2 − 1)/4."""
        spec = quadsolve.solve_almost_equilateral(*sporadic_angles("S16 4"))
        assert spec.a.radians == pytest.approx(math.pi / 4, abs=1e-9)
        assert math.cos(spec.b.radians) == pytest.approx((2 * math.sqrt(2) - 1) / 4, abs=1e-9)

    def test_s12_1_edge_b(self):
        """S12 1 has cos b = 3√5 − 6."""
        spec = quadsolve.solve_almost_equilateral(*sporadic_angles("S12 1"))
        assert math.cos(spec.b.radians) == pytest.approx(3 * math.sqrt(5) - 6, abs=1e-9)

    def test_cube_subdivision_tile(self):
        """α = 2π/3, γ = π/2, cos β = (1−√3)/(2√3) gives cos a = 1/√(5−2√3) and a + b = π/2."""
        beta = math.acos((1 - math.sqrt(3)) / (2 * math.sqrt(3)))
        spec = quadsolve.solve_almost_equilateral(pi(2, 3), beta, pi(1, 2), math.pi - beta)
        assert math.cos(spec.a.radians) == pytest.approx(1 / math.sqrt(5 - 2 * math.sqrt(3)), abs=1e-10)
        assert spec.a.radians + spec.b.radians == pytest.approx(math.pi / 2, abs=1e-10)

    def test_companion_formula_agrees(self):
        """The exchanged formula gives the same edge."""
        angles = [pi(1, 3), pi(5, 9), pi(7, 18), pi(5, 6)]
        a = quadsolve.solve_edge_a(*angles).radians
        assert quadsolve.solve_edge_a_alt(*angles).radians == pytest.approx(a, abs=1e-10)
        assert quadsolve.edge_a_cross_check(*angles) == pytest.approx(math.cos(a), abs=1e-9)

    def test_built_tile_closes_and_is_simple(self):
        """The S36 6 tile closes and its boundary does not cross itself."""
        spec = quadsolve.solve_almost_equilateral(pi(1, 3), pi(5, 9), pi(7, 18), pi(5, 6))
        polygon = quadsolve.build_tile(spec)
        assert np.allclose(polygon.vertices[0], sphercore.E_Z)
        assert polygon.is_simple()
        assert polygon.area() == pytest.approx(4 * math.pi / 36, abs=1e-9)


class TestTriangles:
    """Test triangle solving."""

    def test_octant(self):
        """Three right angles give three quarter-circle sides."""
        sides = quadsolve.solve_triangle(math.pi / 2, math.pi / 2, math.pi / 2)
        assert [s.radians for s in sides] == pytest.approx([math.pi / 2] * 3)

    def test_icosahedron_face(self):
        """Equal angles 2π/5 give sides arccos(cos x/(1 − cos x))."""
        x = 2 * math.pi / 5
        sides = quadsolve.solve_triangle(x, x, x)
        expected = math.acos(math.cos(x) / (1 - math.cos(x)))
        assert [s.radians for s in sides] == pytest.approx([expected] * 3)

    def test_flat_triangle_does_not_exist(self):
        """Angles summing to π give no spherical triangle."""
        third = math.pi / 3
        assert not quadsolve.triangle_exists(third, third, third)
        with pytest.raises(SolveError):
            quadsolve.solve_triangle(third, third, third)

    def test_regular_square(self):
        """The cube face has edge arccos(1/3)."""
        spec = quadsolve.solve_regular(QuadClass.SQUARE, pi(2, 3))
        assert spec.a.radians == pytest.approx(math.acos(1 / 3))
        vertices = quadsolve.build_tile(spec).vertices
        assert float(np.dot(vertices[0], vertices[1])) == pytest.approx(1 / 3)
        assert float(np.dot(vertices[0], vertices[2])) == pytest.approx(-1 / 3)


class TestKitesAndRhombi:
    """Test kite and rhombus solving."""

    def test_rhombus_edge(self):
        """A rhombus with both angles 2π/3 has edge arccos(1/3)."""
        spec = quadsolve.solve_kite_rhombus(QuadClass.RHOMBUS, [pi(2, 3), pi(2, 3)])
        assert spec.a.radians == pytest.approx(math.acos(1 / 3))

    def test_kite_without_half_triangle(self):
        """Small kite angles leave no half triangle."""
        with pytest.raises(SolveError):
            quadsolve.solve_kite_rhombus(QuadClass.KITE, [pi(2, 5), pi(3, 10), pi(2, 5)])

    def test_kite_tile_closes(self):
        """A solved kite closes."""
        spec = quadsolve.solve_kite_rhombus(QuadClass.KITE, [pi(2, 3), pi(1, 2), pi(1, 2)])
        h = sphercore.polygon_holonomy(spec.edge_lengths(), spec.corner_angles())
        assert sphercore.identity_defect(h) < 1e-9


class TestModuli:
    """Test the two-parameter family of E□1 tiles."""

    def test_mid_meridian_gives_kite(self):
        """C on the mid-meridian gives b = c."""
        rhombus = quadsolve.solve_kite_rhombus(QuadClass.RHOMBUS, [pi(1, 2), pi(3, 4)])
        spec = quadsolve.moduli_general_quad(8, quadsolve.moduli_point(8, 0.0, rhombus.a.radians))
        assert spec.b.radians == pytest.approx(spec.c.radians, abs=1e-9)

    def test_odd_f_rejected(self):
        """Quadrilateral tilings need even f."""
        with pytest.raises(SolveError):
            quadsolve.moduli_general_quad(9, quadsolve.moduli_point(8, 0.0, 1.0))

    @hyp_settings(max_examples=30, deadline=None)
    @given(
        st.sampled_from([8, 12]),
        st.floats(min_value=-0.5, max_value=0.5),
        st.floats(min_value=0.3 * math.pi, max_value=0.4 * math.pi),
    )
    def test_area_is_four_pi_over_f(self, f, phi, a):
        """Every admissible C gives a closed tile of area 4π/f."""
        try:
            spec = quadsolve.moduli_general_quad(f, quadsolve.moduli_point(f, phi, a))
        except SolveError:
            return
        assert (spec.angle_sum().radians - 2 * math.pi) == pytest.approx(4 * math.pi / f, abs=1e-7)
        assert quadsolve.build_tile(spec).area() == pytest.approx(4 * math.pi / f, abs=1e-7)


class TestRootFinding:
    """Test the bracketing root finder."""

    def test_linear_root(self):
        """x − ½ has its root at ½."""
        assert quadsolve.find_root(lambda x: x - 0.5, (0.0, 1.0)) == pytest.approx(0.5, abs=1e-12)

    def test_no_sign_change(self):
        """A positive function has no root."""
        with pytest.raises(SolveError):
            quadsolve.find_root(lambda x: 1.0 + x * x, (0.0, 1.0))

    def test_several_roots(self):
        """sin has roots at π and 2π inside (3, 7)."""
        roots = quadsolve.find_roots(math.sin, (3.0, 7.0))
        assert roots == pytest.approx([math.pi, 2 * math.pi], abs=1e-10)

    def test_add_bbb_gamma(self):
        """The γ of the αδ², βββ case is about 0.4568π."""
        assert quadsolve.add_bbb_gamma().pi_units == pytest.approx(0.4568, abs=1e-4)

    def test_abb_abdd_only_at_sixteen(self):
        """With αβδ² the only even solution is f = 16."""
        assert quadsolve.abb_acc_even_solutions()["αβδ²"] == [16]

    def test_abb_abdd_range(self):
        """Sixteen is found at the end of the range and not below it."""
        assert quadsolve.abb_acc_even_solutions(max_f=16)["αβδ²"] == [16]
        assert quadsolve.abb_acc_even_solutions(max_f=14)["αβδ²"] == []


class TestGeometryPredicates:
    """Test the necessary conditions on almost equilateral tiles."""

    def test_s36_5_satisfies_all(self):
        """A realized tile violates nothing."""
        spec = quadsolve.solve_almost_equilateral(pi(4, 9), pi(7, 9), pi(1, 3), pi(5, 9))
        assert "violated" not in quadsolve.geometry_predicates(spec).values()

    def test_symmetric_tile_satisfies_order(self):
        """α = β with γ = δ satisfies the order condition."""
        spec = QuadSpec(quad_class=QuadClass.ALMOST_EQUILATERAL, alpha=pi(1, 2), beta=pi(1, 2),
                        gamma=pi(2, 3), delta=pi(2, 3))
        assert quadsolve.geometry_predicates(spec)["alpha_beta_order"] == "satisfied"

    def test_inconsistent_order_violated(self):
        """α < β with γ > δ is impossible."""
        spec = QuadSpec(quad_class=QuadClass.ALMOST_EQUILATERAL, alpha=pi(1, 3), beta=pi(1, 2),
                        gamma=pi(2, 3), delta=pi(1, 2))
        assert quadsolve.geometry_predicates(spec)["alpha_beta_order"] == "violated"


class TestSolve:
    """Test the solve dispatcher."""

    def test_almost_equilateral_report(self):
        """The S36 6 report carries small residuals and a simple tile."""
        report = quadsolve.solve(QuadClass.ALMOST_EQUILATERAL, [pi(1, 3), pi(5, 9), pi(7, 18), pi(5, 6)])
        assert report.success and report.simple
        assert report.residuals["holonomy"] < 1e-9
        assert quadsolve.edges_in_pi(report.spec)["a"] == pytest.approx(0.2258, abs=1e-4)

    def test_wrong_angle_count(self):
        """A rhombus takes two angles."""
        with pytest.raises(SolveError):
            quadsolve.solve(QuadClass.RHOMBUS, [pi(2, 3)])

    def test_exact_fraction(self):
        """Near-rational values are recognized."""
        assert str(quadsolve.exact_fraction(5 / 18)) == "5/18"
        assert quadsolve.exact_fraction(math.sqrt(2) / 10) is None
