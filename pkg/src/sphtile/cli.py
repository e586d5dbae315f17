"""Command line interface for sphtile."""

import functools
import json
import re
from fractions import Fraction
from typing import Callable, List, Optional, Sequence, Tuple

import click
from loguru import logger

from . import __version__
from .config import settings
from .exceptions import CatalogError, CombinatorialError, DocumentError, SphtileError
from .models import AngleValue, FamilyId, QuadClass, VerificationReport
from .services import avc, quadsolve
from .services.catalog import build_family, census, default_family, expected_census, resolve_alias
from .services.verifier import verify_combinatorial, verify_realization
from .utils.export import (
    FORMATS,
    complex_from_document,
    document_for,
    export_document,
    load_document,
    realization_from_document,
)
from .utils.logger import setup_logging

# bad input exits 2 like a click usage error; failed computations exit 1
_USAGE_ERRORS = (CatalogError, CombinatorialError, DocumentError)

_TABLES: Tuple[Tuple[str, str, Tuple[str, ...]], ...] = (
    ("triangles", "triangle", ("platonic", "subdivision", "earth map", "flip")),
    ("quadrilaterals: Platonic solids and subdivisions", "quadrilateral", ("platonic",)),
    ("quadrilaterals: earth maps", "quadrilateral", ("earth map",)),
    ("quadrilaterals: flip modifications", "quadrilateral", ("flip",)),
    ("quadrilaterals: sporadic tilings", "quadrilateral", ("sporadic",)),
)


def _fail(exc: SphtileError) -> None:
    ctx = click.get_current_context()
    code = 2 if isinstance(exc, _USAGE_ERRORS) else 1
    if ctx.find_root().obj.get("json_errors"):
        click.echo(json.dumps(exc.to_dict(), ensure_ascii=False, default=str), err=True)
    else:
        click.echo(f"Error: {exc.message}", err=True)
    ctx.exit(code)


def reporting_errors(func: Callable) -> Callable:
    """Turn library errors into exit codes and (optionally) JSON on stderr."""

    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except SphtileError as exc:
            logger.debug(f"{func.__name__} failed: {exc.code}: {exc.message}")
            _fail(exc)

    return wrapper


def parse_param(text: str) -> Tuple[str, object]:
    """``key=value`` with an int, fraction or float value."""
    if "=" not in text:
        raise click.BadParameter(f"expected key=value, got '{text}'")
    key, value = (part.strip() for part in text.split("=", 1))
    for convert in (int, Fraction, float):
        try:
            return key, convert(value)
        except ValueError:
            continue
    return key, value


def parse_angles(texts: Sequence[str]) -> List[AngleValue]:
    try:
        return [AngleValue.parse(text) for text in texts]
    except ValueError as exc:
        raise click.BadParameter(str(exc), param_hint="--angles")


_TERM = re.compile(r"([+\-−]?)(\d+)(?:/(\d+))?(?:/\(?(\d*)f\)?)?")


def angle_formula(text: str) -> Callable[[int], AngleValue]:
    """An angle in units of π that may depend on f: "4/f", "1-2/f", "1/2+4/(3f)"."""
    body = text.replace(" ", "").replace("pi", "").replace("π", "")
    terms: List[Tuple[Fraction, bool]] = []
    position = 0
    while position < len(body):
        match = _TERM.match(body, position)
        if not match:
            raise click.BadParameter(f"cannot read angle formula '{text}'", param_hint="--angles")
        sign = -1 if match.group(1) in ("-", "−") else 1
        coefficient = Fraction(sign * int(match.group(2)), int(match.group(3) or 1))
        per_f = match.group(4) is not None
        if per_f:
            coefficient /= int(match.group(4) or 1)
        terms.append((coefficient, per_f))
        position = match.end()

    def value(f: int) -> AngleValue:
        return AngleValue.pi(sum((c / f if per_f else c for c, per_f in terms), Fraction(0)))

    return value


def _print_report(report: VerificationReport) -> None:
    click.echo(json.dumps(report.summary(), ensure_ascii=False, sort_keys=True, indent=2), err=True)


def _quad_class(class_name: Optional[str]) -> Optional[QuadClass]:
    if not class_name:
        return None
    try:
        return QuadClass.parse(class_name)
    except ValueError as exc:
        raise click.BadParameter(str(exc), param_hint="--class")


def _split(values: Sequence[str]) -> List[str]:
    return [part for value in values for part in value.replace(",", " ").split()]


@click.group()
@click.version_option(__version__, prog_name="sphtile")
@click.option("--log-level", default=None, help="Logging level (default from SPHTILE_LOG_LEVEL).")
@click.option("--json-errors", is_flag=True, help="Print errors as JSON on stderr.")
@click.pass_context
def main(ctx, log_level, json_errors):
    """sphtile - tilings of the sphere by congruent polygons."""
    setup_logging(log_level)
    ctx.ensure_object(dict)
    ctx.obj["json_errors"] = json_errors


@main.command("catalog")
@click.option("--family", "family_name", help="Family name, e.g. P6, QP4, E□4, E'q4, S16 4.")
@click.option("--param", "--params", "params", multiple=True, help="Family parameter as key=value (repeatable).")
@click.option("--list", "list_only", is_flag=True, help="List every family with its aliases.")
@click.option("--format", "fmt", type=click.Choice(FORMATS), default="json", show_default=True)
@click.option("--tol", type=float, default=None, help="Verification tolerance.")
@click.option("--no-verify", is_flag=True, help="Skip verification.")
@click.pass_context
@reporting_errors
def catalog_command(ctx, family_name, params, list_only, fmt, tol, no_verify):
    """Build a family, verify it and print its document."""
    if list_only or not family_name:
        for entry in census():
            aliases = ", ".join(entry.aliases)
            click.echo("\t".join([entry.display, entry.kind, entry.f, entry.vertices, aliases]))
        return
    family = default_family(family_name)
    if params:
        family = FamilyId(name=family.name, params={**family.params, **dict(parse_param(p) for p in params)})
    r = build_family(family)
    passed = True
    if not no_verify:
        report = verify_realization(r, tol, expected_census(family.name))
        passed = report.passed
        if not passed:
            _print_report(report)
    click.get_binary_stream("stdout").write(export_document(document_for(r, family), fmt))
    if not passed:
        ctx.exit(1)


@main.command("solve")
@click.option("--class", "class_name", required=True,
              help="Tile class: a2bc, a2b2, a3b, a4, square, abc, a2b, a3, a5.")
@click.option("--angles", "angles_flag", is_flag=True, help="Marks the start of the angle list.")
@click.argument("angles", nargs=-1, required=True)
@click.option("--json", "as_json", is_flag=True, help="Print the full report as JSON.")
@click.pass_context
@reporting_errors
def solve_command(ctx, class_name, angles_flag, angles, as_json):
    """Solve a tile from its distinct angles, in units of π (e.g. 1/3 5/9 7/18 5/6)."""
    quad_class = _quad_class(class_name)
    report = quadsolve.solve(quad_class, parse_angles(_split(angles)))
    edges = quadsolve.edges_in_pi(report.spec)
    if as_json:
        payload = {
            "class": quad_class.value,
            "angles": {k: str(v) for k, v in report.spec.angle_values().items()},
            "edges_pi": edges,
            "residuals": report.residuals,
            "simple": report.simple,
            "success": report.success,
            "notes": report.notes,
        }
        click.echo(json.dumps(payload, ensure_ascii=False, sort_keys=True, indent=2))
    else:
        for label, value in edges.items():
            click.echo(f"{label} = {value:.6f}π")
        for name, residual in sorted(report.residuals.items()):
            click.echo(f"{name} residual {residual:.3e}")
        click.echo(f"simple: {'yes' if report.simple else 'no'}")
        for note in report.notes:
            click.echo(f"note: {note}")
    if not report.success:
        ctx.exit(1)


@main.command("avc")
@click.option("--angles", "angles_flag", is_flag=True, help="Marks the start of the angle list.")
@click.argument("angles", nargs=-1, required=True)
@click.option("--class", "class_name", default=None, help="Tile class, for the parity filter.")
@click.option("--f", "f", type=int, default=None, help="Tile count; checks the angle sum of the tile.")
@click.option("--max-f", type=int, default=None, help="List the AVC for every even f up to this.")
@reporting_errors
def avc_command(angles_flag, angles, class_name, f, max_f):
    """List the vertices the given angles can form.

    Angles are in units of π; with --max-f they may depend on f, e.g. 4/f 1-2/f.
    """
    if f is not None and max_f is not None:
        raise click.UsageError("--f and --max-f are exclusive")
    quad_class = _quad_class(class_name)
    texts = _split(angles)
    if max_f is not None:
        if quad_class is None:
            raise click.UsageError("--max-f needs --class")
        formulas = [angle_formula(text) for text in texts]
        for n, found in avc.enumerate_avc_per_f(lambda k: [g(k) for g in formulas], quad_class, max_f).items():
            if len(found):
                click.echo(f"f={n}\t{found}")
        return
    values = parse_angles(texts)
    if f is not None and quad_class is not None:
        if len(values) != len(quad_class.angle_names):
            raise click.UsageError(f"{quad_class.value} has {len(quad_class.angle_names)} distinct angles")
        target = avc.angle_sum_target(f, quad_class)
        labels = dict(zip(quad_class.angle_names, values))
        total = sum(labels[label].radians for label in quad_class.corner_labels)
        if abs(total - target.radians) > settings.avc_tol:
            raise CombinatorialError(f"the tile angles sum to {total:.12g}, a tiling by {f} tiles needs {target}", f=f)
    click.echo(str(avc.enumerate_avc(values, quad_class=quad_class, f=f)))


@main.command("verify")
@click.argument("source", type=click.File("r", encoding="utf-8"))
@click.option("--tol", type=float, default=None, help="Tolerance (default from SPHTILE_TOLERANCE).")
@click.pass_context
@reporting_errors
def verify_command(ctx, source, tol):
    """Verify a tiling document (use - for stdin)."""
    doc = load_document(source.read())
    if doc.coords is None:
        report = verify_combinatorial(complex_from_document(doc))
        report.notes.append("no coordinates: combinatorial checks only")
    else:
        report = verify_realization(realization_from_document(doc), tol, expected_census(doc.family))
    click.echo(json.dumps(report.summary(), ensure_ascii=False, sort_keys=True, indent=2))
    if not report.passed:
        ctx.exit(1)


@main.command("tables")
@click.option("--table", "index", type=click.IntRange(1, len(_TABLES)), default=None, help="Print one table only.")
def tables_command(index):
    """Print the catalog as tab-separated tables."""
    rows = census()
    chosen = range(len(_TABLES)) if index is None else [index - 1]
    for i in chosen:
        title, group, kinds = _TABLES[i]
        click.echo(f"# {title}")
        click.echo("\t".join(["name", "f", "angles", "vertices", "aliases"]))
        for entry in rows:
            if entry.group == group and entry.kind in kinds:
                click.echo("\t".join([entry.display, entry.f, entry.angles, entry.vertices, ", ".join(entry.aliases)]))
        click.echo("")


@main.command("export")
@click.argument("source", type=click.File("r", encoding="utf-8"))
@click.option("--format", "fmt", type=click.Choice(FORMATS), required=True)
@click.option("--output", "-o", type=click.File("wb"), default="-", help="Output file (default stdout).")
@reporting_errors
def export_command(source, fmt, output):
    """Convert a tiling document to json, obj or svg."""
    output.write(export_document(load_document(source.read()), fmt))


@main.command("aliases")
@click.argument("name")
def aliases_command(name):
    """Print the catalog name a family name resolves to."""
    click.echo(resolve_alias(name))


if __name__ == '__main__':
    main()
