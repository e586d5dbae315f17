"""Exception hierarchy for sphtile."""


class SphtileError(Exception):
    """Base error. `code` is the machine-readable name used by the CLI."""

    code = "sphtile-error"

    def __init__(self, message: str, **details):
        super().__init__(message)
        self.message = message
        self.details = details

    def to_dict(self) -> dict:
        return {"error": self.code, "message": self.message, **self.details}


class GeometryError(SphtileError):
    """Degenerate spherical input (identical or antipodal points, point at the pole)."""

    code = "geometry"


class SolveError(SphtileError):
    """Angle data does not produce a tile."""

    code = "solve"


class CombinatorialError(SphtileError):
    """Invalid counting input such as an odd tile count for quadrilaterals."""

    code = "combinatorial"


class CatalogError(SphtileError):
    """Unknown family, parameter outside its range, or inapplicable operation."""

    code = "catalog"


class RealizationError(SphtileError):
    """Tile placements disagree while propagating coordinates."""

    code = "realization"


class DocumentError(SphtileError):
    """Malformed tiling document or missing coordinates for an export."""

    code = "document"
