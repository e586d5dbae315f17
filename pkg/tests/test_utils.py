"""Tests for caching, documents and settings."""

import json

import pytest

from sphtile.config import Settings
from sphtile.exceptions import DocumentError
from sphtile.models import FamilyId
from sphtile.services.catalog import build_family
from sphtile.utils.cache import ResultCache, cache_key, cached_result
from sphtile.utils.export import (
    complex_from_document,
    document_for,
    export_document,
    load_document,
    realization_from_document,
)


@pytest.fixture
def octahedron_document():
    return document_for(build_family(FamilyId(name="P8")), FamilyId(name="P8"))


class TestResultCache:
    """Test the result cache."""

    def test_set_and_get(self):
        """Stored values come back until cleared."""
        cache = ResultCache()
        cache.set("k", 3)
        assert "k" in cache and cache.get("k") == 3
        cache.clear()
        assert len(cache) == 0

    def test_key_ignores_kwarg_order(self):
        """Keyword order does not change the key."""
        assert cache_key("f", (1,), {"a": 1, "b": 2}) == cache_key("f", (1,), {"b": 2, "a": 1})

    def test_cached_result(self):
        """A cached function runs once per argument until cache_clear."""
        calls = []

        @cached_result
        def square(x):
            calls.append(x)
            return x * x

        assert square(3) == 9
        assert square(3) == 9
        assert calls == [3]
        square.cache_clear()
        square(3)
        assert calls == [3, 3]


class TestDocuments:
    """Test tiling documents."""

    def test_vertices_renumbered(self, octahedron_document):
        """Vertices are numbered from zero without gaps."""
        used = {corner[0] for row in octahedron_document.complex for corner in row}
        assert used == set(range(6))
        assert octahedron_document.template["class"] == "a3"

    def test_canonical_output_has_no_timestamp(self, octahedron_document):
        """Canonical documents carry no creation time."""
        assert "created" not in octahedron_document.provenance

    def test_reload(self, octahedron_document):
        """A written document loads back to the same complex."""
        doc = load_document(export_document(octahedron_document, "json").decode("utf-8"))
        r = realization_from_document(doc)
        assert r.complex.f == 8
        assert len(r.coords) == 6

    def test_malformed_json(self):
        """Broken JSON raises DocumentError."""
        with pytest.raises(DocumentError):
            load_document("{not json")

    def test_bad_mirror_flags(self, octahedron_document):
        """One mirror flag per tile is required."""
        doc = octahedron_document.model_copy(update={"mirrored": [False]})
        with pytest.raises(DocumentError):
            complex_from_document(doc)

    def test_obj_needs_coordinates(self, octahedron_document):
        """OBJ export of a bare complex fails."""
        with pytest.raises(DocumentError):
            export_document(octahedron_document.model_copy(update={"coords": None}), "obj")

    def test_unknown_format(self, octahedron_document):
        """Only json, obj and svg are known."""
        with pytest.raises(DocumentError):
            export_document(octahedron_document, "stl")

    def test_json_is_sorted(self, octahedron_document):
        """The JSON form has sorted keys."""
        text = export_document(octahedron_document, "json").decode("utf-8")
        keys = list(json.loads(text))
        assert keys == sorted(keys)


class TestSettings:
    """Test environment configuration."""

    def test_env_prefix(self, monkeypatch):
        """SPHTILE_ variables override the defaults."""
        monkeypatch.setenv("SPHTILE_TOLERANCE", "1e-6")
        monkeypatch.setenv("SPHTILE_MAX_F", "32")
        configured = Settings()
        assert configured.tolerance == pytest.approx(1e-6)
        assert configured.max_f == 32

    def test_defaults(self, monkeypatch):
        """Without overrides the tolerance is 1e-9."""
        monkeypatch.delenv("SPHTILE_TOLERANCE", raising=False)
        assert Settings().tolerance == pytest.approx(1e-9)
