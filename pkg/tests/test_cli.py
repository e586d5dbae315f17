"""Tests for the command line interface."""

import json

import pytest
from click.testing import CliRunner

from sphtile import __version__
from sphtile.cli import angle_formula, main, parse_param

QUIET = ["--log-level", "CRITICAL"]


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def cube_document(runner):
    result = runner.invoke(main, QUIET + ["catalog", "--family", "P6"])
    assert result.exit_code == 0, result.stderr
    return result.stdout


class TestHelpers:
    """Test the argument helpers."""

    def test_parse_param(self):
        """Values become int, fraction or float."""
        assert parse_param("p=4") == ("p", 4)
        assert str(parse_param("beta=3/4")[1]) == "3/4"
        assert parse_param("phi=0.25") == ("phi", 0.25)

    def test_angle_formula(self):
        """Formulas in f evaluate exactly."""
        assert angle_formula("1-2/f")(8).fraction == pytest.approx(0.75)
        assert str(angle_formula("1/2+4/(3f)")(8).fraction) == "2/3"


class TestAvcCommand:
    """Test the avc command."""

    def test_rhombus(self, runner):
        """Rhombus angles 2π/3, 4π/9 make α³ and αβ³."""
        result = runner.invoke(main, QUIET + ["avc", "--angles", "2/3", "4/9", "--class", "a4"])
        assert result.exit_code == 0
        assert result.stdout.strip() == "α³, αβ³"

    def test_angle_sum_matches_f(self, runner):
        """With --f the tile must have the right angle sum."""
        good = runner.invoke(main, QUIET + ["avc", "--angles", "2/3", "4/9", "--class", "a4", "--f", "18"])
        assert good.exit_code == 0
        bad = runner.invoke(main, QUIET + ["avc", "--angles", "2/3", "4/9", "--class", "a4", "--f", "6"])
        assert bad.exit_code == 2

    def test_per_f_table(self, runner):
        """--max-f lists the AVC for each even f."""
        result = runner.invoke(main, QUIET + ["avc", "--class", "a4", "--max-f", "10", "4/f", "1-2/f"])
        assert result.exit_code == 0
        assert "f=8\tαβ², α⁴" in result.stdout.splitlines()

    def test_exclusive_options(self, runner):
        """--f and --max-f cannot be combined."""
        result = runner.invoke(main, QUIET + ["avc", "--class", "a4", "--f", "8", "--max-f", "10", "1/2", "3/4"])
        assert result.exit_code == 2


class TestSolveCommand:
    """Test the solve command."""

    def test_almost_equilateral(self, runner):
        """The S36 6 tile solves to a simple tile."""
        result = runner.invoke(main, QUIET + ["solve", "--class", "a3b", "--angles", "1/3", "5/9", "7/18", "5/6"])
        assert result.exit_code == 0
        assert result.stdout.startswith("a = 0.22")
        assert "simple: yes" in result.stdout

    def test_json(self, runner):
        """--json prints the whole report."""
        result = runner.invoke(main, QUIET + ["solve", "--class", "a4", "--json", "2/3", "2/3"])
        payload = json.loads(result.stdout)
        assert payload["class"] == "a4"
        assert payload["success"] is True
        assert payload["edges_pi"]["a"] == pytest.approx(0.3918, abs=1e-4)

    def test_flat_tile(self, runner):
        """Four right angles give no tile."""
        result = runner.invoke(main, QUIET + ["--json-errors", "solve", "--class", "a3b", "1/2", "1/2", "1/2", "1/2"])
        assert result.exit_code == 1
        assert json.loads(result.stderr)["error"] == "solve"

    def test_unknown_class(self, runner):
        """Unknown tile classes are usage errors."""
        result = runner.invoke(main, QUIET + ["solve", "--class", "hexagon", "1/2"])
        assert result.exit_code == 2


class TestCatalogCommand:
    """Test the catalog command."""

    def test_document(self, cube_document):
        """The document lists six tiles and eight points."""
        doc = json.loads(cube_document)
        assert doc["family"] == "P6"
        assert len(doc["complex"]) == 6
        assert len(doc["coords"]) == 8

    def test_parameters(self, runner):
        """--param sets the number of timezones."""
        result = runner.invoke(main, QUIET + ["catalog", "--family", "Eq4", "--param", "p=5"])
        assert result.exit_code == 0
        doc = json.loads(result.stdout)
        assert doc["params"] == {"p": 5}
        assert len(doc["complex"]) == 10

    def test_unknown_family(self, runner):
        """An unknown family exits 2 with a JSON error."""
        result = runner.invoke(main, QUIET + ["--json-errors", "catalog", "--family", "S99 9"])
        assert result.exit_code == 2
        assert json.loads(result.stderr)["error"] == "catalog"

    def test_listing(self, runner):
        """Without a family the census is listed."""
        result = runner.invoke(main, QUIET + ["catalog", "--list"])
        assert result.exit_code == 0
        rows = [line.split("\t") for line in result.stdout.splitlines()]
        assert any(row[0] == "QP₄" and "CP8" in row[-1] for row in rows)

    def test_obj_format(self, runner):
        """The catalog can print OBJ directly."""
        result = runner.invoke(main, QUIET + ["catalog", "--family", "P8", "--format", "obj"])
        assert result.exit_code == 0
        lines = result.stdout.splitlines()
        assert sum(1 for line in lines if line.startswith("v ")) == 6
        assert sum(1 for line in lines if line.startswith("f ")) == 8


class TestVerifyCommand:
    """Test the verify command."""

    def test_cube_verifies(self, runner, cube_document):
        """A catalog document verifies from stdin."""
        result = runner.invoke(main, QUIET + ["verify", "-"], input=cube_document)
        assert result.exit_code == 0
        assert json.loads(result.stdout)["passed"] is True

    def test_without_coordinates(self, runner, cube_document):
        """Documents without coordinates get the combinatorial checks only."""
        doc = json.loads(cube_document)
        doc["coords"] = None
        result = runner.invoke(main, QUIET + ["verify", "-"], input=json.dumps(doc))
        assert result.exit_code == 0
        summary = json.loads(result.stdout)
        assert "no coordinates: combinatorial checks only" in summary["notes"]
        assert all(check["name"] != "angle-sum" for check in summary["checks"])

    def test_moved_vertex_fails(self, runner, cube_document):
        """Moving a point makes verification fail with exit 1."""
        doc = json.loads(cube_document)
        x, y, z = doc["coords"][0]
        norm = ((x + 0.05) ** 2 + (y - 0.02) ** 2 + (z + 0.03) ** 2) ** 0.5
        doc["coords"][0] = [(x + 0.05) / norm, (y - 0.02) / norm, (z + 0.03) / norm]
        result = runner.invoke(main, QUIET + ["verify", "-"], input=json.dumps(doc))
        assert result.exit_code == 1
        assert json.loads(result.stdout)["passed"] is False

    def test_malformed_document(self, runner):
        """Malformed input is a usage error."""
        result = runner.invoke(main, QUIET + ["--json-errors", "verify", "-"], input="{}")
        assert result.exit_code == 2
        assert json.loads(result.stderr)["error"] == "document"


class TestExportCommand:
    """Test the export command."""

    def test_obj(self, runner, cube_document):
        """OBJ export has one vertex record per point and one face per tile."""
        result = runner.invoke(main, QUIET + ["export", "-", "--format", "obj"], input=cube_document)
        assert result.exit_code == 0
        lines = result.stdout.splitlines()
        assert lines[0] == "# sphtile obj export"
        assert sum(1 for line in lines if line.startswith("v ")) == 8
        assert sum(1 for line in lines if line.startswith("f ")) == 6

    def test_svg(self, runner, cube_document):
        """SVG export draws every tile once."""
        result = runner.invoke(main, QUIET + ["export", "-", "--format", "svg"], input=cube_document)
        assert result.exit_code == 0
        assert result.stdout.startswith("<svg")
        assert result.stdout.count("<path") == 6

    def test_json_is_canonical(self, runner, cube_document):
        """Re-exporting a document as JSON reproduces it."""
        result = runner.invoke(main, QUIET + ["export", "-", "--format", "json"], input=cube_document)
        assert result.stdout == cube_document


class TestOtherCommands:
    """Test tables, aliases and version."""

    def test_sporadic_table(self, runner):
        """The fifth table lists the eight sporadic tilings."""
        result = runner.invoke(main, QUIET + ["tables", "--table", "5"])
        lines = [line for line in result.stdout.splitlines() if line]
        assert lines[0] == "# quadrilaterals: sporadic tilings"
        assert lines[1].split("\t") == ["name", "f", "angles", "vertices", "aliases"]
        assert len(lines) == 10

    def test_all_tables(self, runner):
        """All five tables are printed by default."""
        result = runner.invoke(main, QUIET + ["tables"])
        assert sum(1 for line in result.stdout.splitlines() if line.startswith("# ")) == 5

    def test_aliases(self, runner):
        """CP8 resolves to QP4."""
        result = runner.invoke(main, QUIET + ["aliases", "CP8"])
        assert result.stdout.strip() == "QP4"

    def test_version(self, runner):
        """--version prints the package version."""
        result = runner.invoke(main, ["--version"])
        assert __version__ in result.stdout
