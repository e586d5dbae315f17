"""Tests for the independent verifier."""

import re

import numpy as np
import pytest

from sphtile.models import FamilyId, Tile, TilingComplex, VertexCombo
from sphtile.services.catalog import build_family, build_platonic, census, default_family, expected_census
from sphtile.services.verifier import (
    verify_census,
    verify_combinatorial,
    verify_geometric,
    verify_holonomy,
    verify_realization,
)


@pytest.fixture
def cube_realization():
    return build_family(FamilyId(name="P6"))


def _evaluate(expr, values):
    match = re.fullmatch(r"(\d*)([pq]?)(?:\+(\d+))?", expr)
    coefficient, name, offset = match.groups()
    base = int(coefficient or 1) * values[name] if name else int(coefficient)
    return base + int(offset or 0)


def _values(entry):
    values = dict(entry.defaults)
    if "f" in values:
        values.setdefault("p", values["f"] // 2)
    return values


def _listed_tile_count(entry):
    return _evaluate(entry.f, _values(entry))


def _listed_census(entry):
    """The listed vertex types with the default parameters filled in."""
    if not entry.defaults:
        return expected_census(entry.name)
    if "s" in entry.defaults:
        return None
    values = _values(entry)

    def power(match):
        n = _evaluate(match.group(1) or match.group(2), values)
        return "" if n == 1 else str(n)

    text = re.sub(r"\^\{([^}]*)\}|\^([pq])", power, entry.vertices)
    return {VertexCombo.parse(part) for part in text.split(",")}


def _moved(r, vertex, offset):
    coords = dict(r.coords)
    x = np.array(coords[vertex]) + np.array(offset)
    coords[vertex] = tuple(float(c) for c in x / np.linalg.norm(x))
    return r.model_copy(update={"coords": coords})


class TestCatalogPasses:
    """Test that catalog tilings verify."""

    @pytest.mark.parametrize("entry", census(), ids=lambda e: e.name)
    def test_family_verifies(self, entry):
        """Every listed family builds, verifies and shows its listed vertices."""
        r = build_family(default_family(entry.name))
        assert r.complex.f == _listed_tile_count(entry)
        report = verify_realization(r, expected_census=_listed_census(entry))
        assert report.passed, report.failures()

    def test_notes(self, cube_realization):
        """The report notes the census and the counts."""
        report = verify_realization(cube_realization)
        assert "census: α³" in report.notes
        assert "f=6 v=8 e=12" in report.notes


class TestCombinatorial:
    """Test the combinatorial checks."""

    def test_edge_label_mismatch(self):
        """Relabelling one side of an edge breaks the edge-label check."""
        cube = build_platonic(6)
        first = cube.tiles[0]
        corners = list(first.corners)
        corners[0] = corners[0].model_copy(update={"edge": "b"})
        broken = TilingComplex(tiles=(Tile(corners=tuple(corners)),) + cube.tiles[1:])
        report = verify_combinatorial(broken)
        assert not report.check("edge-label").passed
        assert report.check("edge-to-edge").passed

    def test_degree_two_vertices(self):
        """Two quadrilaterals glued along their boundary have degree-2 vertices."""
        labels = ["α"] * 4
        edges = ["a"] * 4
        pillow = TilingComplex(tiles=(Tile.build([0, 1, 2, 3], labels, edges), Tile.build([0, 3, 2, 1], labels, edges)))
        report = verify_combinatorial(pillow)
        assert report.check("edge-to-edge").passed
        assert not report.check("degree").passed
        assert not report.passed

    def test_unpaired_edge(self):
        """Removing a tile leaves unpaired edges."""
        cube = build_platonic(6)
        report = verify_combinatorial(TilingComplex(tiles=cube.tiles[1:]))
        assert not report.check("edge-to-edge").passed

    def test_mixed_sizes(self):
        """Tiles of different sizes fail the counting identities."""
        square = Tile.build([0, 1, 2, 3], ["α"] * 4, ["a"] * 4)
        triangle = Tile.build([3, 2, 4], ["α"] * 3, ["a"] * 3)
        report = verify_combinatorial(TilingComplex(tiles=(square, triangle)))
        assert not report.check("euler").passed


class TestGeometric:
    """Test the geometric checks."""

    def test_cube_passes(self, cube_realization):
        """The realized cube passes every geometric check."""
        assert verify_geometric(cube_realization).passed

    def test_moved_vertex(self, cube_realization):
        """Moving one vertex breaks congruence and area."""
        report = verify_geometric(_moved(cube_realization, 0, (0.05, -0.02, 0.03)))
        assert not report.check("congruence").passed
        assert not report.check("tile-area").passed

    def test_off_sphere(self, cube_realization):
        """A vertex off the unit sphere fails the coordinate check."""
        coords = dict(cube_realization.coords)
        coords[0] = tuple(1.1 * c for c in coords[0])
        report = verify_geometric(cube_realization.model_copy(update={"coords": coords}))
        assert not report.check("coords").passed

    def test_missing_coordinates(self, cube_realization):
        """A vertex without coordinates fails and stops the checks."""
        coords = dict(cube_realization.coords)
        del coords[0]
        report = verify_geometric(cube_realization.model_copy(update={"coords": coords}))
        assert not report.passed
        assert report.check("angle-sum") is None

    def test_loose_tolerance_accepts_small_moves(self, cube_realization):
        """A tiny displacement passes under a loose tolerance."""
        report = verify_geometric(_moved(cube_realization, 0, (1e-9, 0.0, 0.0)), tol=1e-6)
        assert report.passed


class TestHolonomy:
    """Test the holonomy check."""

    def test_cube_closes(self, cube_realization):
        """Every realized cube face closes."""
        report = verify_holonomy(cube_realization)
        assert report.passed
        assert report.check("holonomy").worst_residual < 1e-9


class TestCensus:
    """Test the census check."""

    def test_match(self):
        """The cube's only vertex type is α³."""
        assert verify_census(build_platonic(6), [VertexCombo(k=3)]).passed

    def test_mismatch(self):
        """A wrong census fails with a readable detail."""
        report = verify_census(build_platonic(6), [VertexCombo(k=4)])
        assert not report.passed
        assert "α⁴" in report.check("census").detail
