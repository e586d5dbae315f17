"""Tests for the spherical geometry kernel."""

import math

import numpy as np
import pytest
from hypothesis import assume, given, settings as hyp_settings
from hypothesis import strategies as st

from sphtile.exceptions import GeometryError
from sphtile.models import AngleValue
from sphtile.services import sphercore
from sphtile.services.sphercore import E_X, E_Y, E_Z

angles = st.floats(min_value=-10.0, max_value=10.0, allow_nan=False)


def _cube_face():
    return [sphercore.unit(p) for p in ((1, 1, 1), (-1, 1, 1), (-1, -1, 1), (1, -1, 1))]


class TestAxisRotation:
    """Test the axis rotations."""

    def test_zero_angle_is_identity(self):
        """Rotating by zero leaves every vector in place."""
        assert np.allclose(sphercore.axis_rotation("Y", 0.0), np.eye(3))
        assert np.allclose(sphercore.axis_rotation("z", 0.0), np.eye(3))

    def test_half_turn_about_z(self):
        """Z(π) negates x and y."""
        assert np.allclose(sphercore.axis_rotation("Z", math.pi), np.diag([-1.0, -1.0, 1.0]), atol=1e-12)

    def test_quarter_turn_about_y_sends_pole_to_x(self):
        """Y(π/2) takes e_z to e_x."""
        assert np.allclose(sphercore.rot_y(math.pi / 2) @ E_Z, E_X, atol=1e-12)

    def test_accepts_exact_angles(self):
        """An exact angle is converted to radians."""
        m = sphercore.axis_rotation("Z", AngleValue.pi(1, 2))
        assert np.allclose(m @ E_X, E_Y, atol=1e-12)

    def test_unknown_axis(self):
        """Only the y- and z-axes are supported."""
        with pytest.raises(GeometryError):
            sphercore.axis_rotation("X", 1.0)

    def test_non_finite_angle(self):
        """NaN is rejected."""
        with pytest.raises(GeometryError):
            sphercore.rot_z(float("nan"))

    @given(angles, angles)
    def test_rotations_compose_additively(self, s, t):
        """A(s)·A(t) = A(s+t) for both axes."""
        for axis in ("Y", "Z"):
            product = sphercore.axis_rotation(axis, s) @ sphercore.axis_rotation(axis, t)
            assert np.allclose(product, sphercore.axis_rotation(axis, s + t), atol=1e-9)

    @given(angles)
    def test_rotations_are_proper(self, t):
        """Axis rotations are orthogonal with determinant one."""
        assert sphercore.is_rotation(sphercore.rot_y(t))
        assert sphercore.is_rotation(sphercore.rot_z(t))


class TestHolonomy:
    """Test polygon holonomy."""

    def test_octahedron_face_closes(self):
        """Three right angles with quarter-circle edges close exactly."""
        m = sphercore.polygon_holonomy([math.pi / 2] * 3, [math.pi / 2] * 3)
        assert sphercore.identity_defect(m) < 1e-12

    def test_lune_closes(self):
        """A two-sided polygon with half-circle edges closes for any equal angles."""
        m = sphercore.polygon_holonomy([math.pi, math.pi], [0.3 * math.pi, 0.3 * math.pi])
        assert sphercore.identity_defect(m) < 1e-12

    def test_perturbed_triangle_does_not_close(self):
        """Opening one angle of the octahedron face breaks closure."""
        m = sphercore.polygon_holonomy([math.pi / 2] * 3, [math.pi / 2, math.pi / 2, 0.6 * math.pi])
        assert sphercore.identity_defect(m) > 0.1

    def test_length_mismatch(self):
        """Edges and angles must pair up."""
        with pytest.raises(GeometryError):
            sphercore.polygon_holonomy([1.0, 1.0, 1.0], [1.0, 1.0])

    def test_steps_end_with_full_product(self):
        """The last partial product is the holonomy."""
        edges, corners = [0.4, 0.7, 0.9], [1.1, 0.8, 1.5]
        steps = sphercore.holonomy_steps(edges, corners)
        assert len(steps) == 3
        assert np.allclose(steps[-1], sphercore.polygon_holonomy(edges, corners))

    @hyp_settings(max_examples=60, deadline=None)
    @given(
        st.tuples(
            st.floats(min_value=0.2, max_value=2.9),
            st.floats(min_value=0.0, max_value=6.28),
            st.floats(min_value=0.2, max_value=2.9),
            st.floats(min_value=0.0, max_value=6.28),
            st.floats(min_value=0.2, max_value=2.9),
            st.floats(min_value=0.0, max_value=6.28),
        )
    )
    def test_measured_triangles_close(self, coords):
        """Edges and angles measured from any triangle have identity holonomy."""
        points = [sphercore.from_spherical(coords[i], coords[i + 1]) for i in (0, 2, 4)]
        for i in range(3):
            d = sphercore.arc_length(points[i], points[(i + 1) % 3])
            assume(0.05 < d < math.pi - 0.05)
        excess = sphercore.spherical_excess(sphercore.counter_clockwise(points))
        assume(0.01 < excess < 2 * math.pi - 0.01)
        pts = sphercore.counter_clockwise(points)
        m = sphercore.polygon_holonomy(sphercore.edge_lengths(pts), sphercore.interior_angles(pts))
        assert sphercore.identity_defect(m) < 1e-9


class TestArcs:
    """Test arc lengths, corner angles and intersections."""

    def test_quarter_circle(self):
        """e_x to e_y is a quarter circle."""
        assert sphercore.arc_measure(E_X, E_Y).radians == pytest.approx(math.pi / 2)

    def test_cube_edge(self):
        """Adjacent cube vertices are arccos(1/3) apart."""
        p, q = sphercore.unit((1, 1, 1)), sphercore.unit((1, 1, -1))
        assert sphercore.arc_measure(p, q).radians == pytest.approx(math.acos(1 / 3))

    def test_identical_points(self):
        """Identical points do not determine an arc."""
        with pytest.raises(GeometryError):
            sphercore.arc_measure(E_X, E_X)

    def test_antipodal_points(self):
        """Antipodal points do not determine an arc."""
        with pytest.raises(GeometryError):
            sphercore.arc_measure(E_X, -E_X)

    def test_corner_angle_at_pole(self):
        """From e_x to e_y at the north pole is a counter-clockwise quarter turn."""
        assert sphercore.corner_angle(E_X, E_Z, E_Y).radians == pytest.approx(math.pi / 2)

    def test_corner_angle_swap(self):
        """Swapping the outer points gives 2π minus the angle."""
        assert sphercore.corner_angle(E_Y, E_Z, E_X).radians == pytest.approx(3 * math.pi / 2)

    def test_octant_interior_angles(self):
        """The octant is a triangle with three right angles."""
        assert sphercore.interior_angles([E_X, E_Y, E_Z]) == pytest.approx([math.pi / 2] * 3)
        assert sphercore.spherical_excess([E_X, E_Y, E_Z]) == pytest.approx(math.pi / 2)

    def test_crossing_arcs(self):
        """An equator arc and a meridian arc cross at e_x."""
        p1, p2 = sphercore.unit((1, -0.5, 0)), sphercore.unit((1, 0.5, 0))
        q1, q2 = sphercore.unit((1, 0, -0.5)), sphercore.unit((1, 0, 0.5))
        assert sphercore.arcs_intersect(p1, p2, q1, q2)

    def test_disjoint_arcs(self):
        """The meridian arc on the far side misses the equator arc."""
        p1, p2 = sphercore.unit((1, -0.5, 0)), sphercore.unit((1, 0.5, 0))
        q1, q2 = sphercore.unit((-1, 0, -0.5)), sphercore.unit((-1, 0, 0.5))
        assert not sphercore.arcs_intersect(p1, p2, q1, q2)

    def test_arc_points_endpoints(self):
        """Sampled arcs start and end at the given points and stay on the sphere."""
        points = sphercore.arc_points(E_X, E_Y, 8)
        assert len(points) == 9
        assert np.allclose(points[0], E_X) and np.allclose(points[-1], E_Y)
        assert all(abs(np.linalg.norm(p) - 1.0) < 1e-12 for p in points)


class TestSimplePolygons:
    """Test the simplicity predicate."""

    def test_octant_is_simple(self):
        """The octant triangle is simple."""
        assert sphercore.is_simple([E_X, E_Y, E_Z])

    def test_cube_face_is_simple(self):
        """A cube face is simple in either orientation."""
        face = _cube_face()
        assert sphercore.is_simple(face)
        assert sphercore.is_simple(face[::-1])

    def test_bowtie_is_not_simple(self):
        """Visiting the cube face corners diagonally crosses the boundary."""
        a, b, c, d = _cube_face()
        assert not sphercore.is_simple([a, c, b, d])

    def test_repeated_point_is_not_simple(self):
        """A zero-length edge makes the polygon degenerate."""
        assert not sphercore.is_simple([E_X, E_X, E_Y, E_Z])

    def test_contains_point(self):
        """The octant contains its centre and not the opposite point."""
        centre = sphercore.unit((1, 1, 1))
        assert sphercore.contains_point([E_X, E_Y, E_Z], centre)
        assert not sphercore.contains_point([E_X, E_Y, E_Z], -centre)

    def test_contains_point_with_antipodal_vertex(self):
        """A vertex opposite the query point answers outside instead of failing."""
        for x in (-E_X, -E_Y, -E_Z):
            assert not sphercore.contains_point([E_X, E_Y, E_Z], x)

    def test_arc_polygon_angles(self):
        """Octant corners are right angles and cube face corners 2π/3, in either orientation."""
        octant = sphercore.ArcPolygon(vertices=(E_X, E_Y, E_Z))
        assert [a.radians for a in octant.angles] == pytest.approx([math.pi / 2] * 3)
        face = _cube_face()
        for points in (face, face[::-1]):
            angles = sphercore.ArcPolygon(vertices=tuple(points)).angles
            assert [a.radians for a in angles] == pytest.approx([2 * math.pi / 3] * 4)


class TestStereographic:
    """Test the stereographic projection."""

    def test_equator_lands_on_unit_circle(self):
        """Equator points project onto the unit circle."""
        assert np.allclose(sphercore.stereographic(E_X, E_Z), [1.0, 0.0])

    def test_antipode_lands_on_origin(self):
        """The point opposite the pole projects to the origin."""
        assert np.allclose(sphercore.stereographic(-E_Z, E_Z), [0.0, 0.0])

    def test_pole_has_no_image(self):
        """Projecting the pole itself fails."""
        with pytest.raises(GeometryError):
            sphercore.stereographic(E_Z, E_Z)

    @given(st.floats(min_value=0.5, max_value=math.pi), st.floats(min_value=0.0, max_value=2 * math.pi))
    def test_inverse(self, colatitude, longitude):
        """The inverse projection recovers the point."""
        p = sphercore.from_spherical(colatitude, longitude)
        for pole in (E_Z, -E_Z):
            if float(np.dot(p, pole)) > 0.9:
                continue
            q = sphercore.stereographic(p, pole)
            assert np.allclose(sphercore.inverse_stereographic(q, pole), p, atol=1e-10)


class TestIsometries:
    """Test isometries between point pairs."""

    def test_proper_isometry_maps_pairs(self):
        """The rotation takes p to p2 and q onto the arc toward q2."""
        p, q = E_X, E_Y
        p2, q2 = E_Z, E_X
        m = sphercore.isometry_between(p, q, p2, q2)
        assert sphercore.is_rotation(m)
        assert np.allclose(m @ p, p2) and np.allclose(m @ q, q2)

    def test_improper_isometry_reverses_orientation(self):
        """The improper map has determinant −1."""
        m = sphercore.isometry_between(E_X, E_Y, E_Z, E_X, proper=False)
        assert np.linalg.det(m) == pytest.approx(-1.0)
        assert np.allclose(m @ E_X, E_Z) and np.allclose(m @ E_Y, E_X)
