"""The catalog of tiling families: names, aliases, the census listing and one builder for all."""

import re
from typing import Any, Dict, List, NamedTuple, Optional, Set, Tuple

from loguru import logger

from ...exceptions import CatalogError
from ...models import CensusEntry, FamilyId, GeometricRealization, QuadClass, VertexCombo
from ...utils.cache import cached_result
from .earth_maps import QUAD_FAMILIES, TRIANGLE_FAMILIES, build_earth_map, earth_map_templates, timezones_for
from .flips import FLIP_NAMES, apply_flip
from .platonic import build_platonic, platonic_subdivision, platonic_template, simple_triangular_cube
from .realize import realize, realize_any
from .sporadic import SPORADIC, build_e_square_2_triple, realize_sporadic

# identical tilings; the value is the name the catalog lists
FAMILY_ALIASES: Dict[str, str] = {
    "CP6": "QP4",
    "CP8": "QP4",
    "QP8": "QP6",
    "BP4": "TP6",
    "BP8": "BP6",
    "BP20": "BP12",
    "CP20": "CP12",
    "QP20": "QP12",
    "CP4": "P6",
    "cube": "P6",
    "tetrahedron": "P4",
    "octahedron": "P8",
    "dodecahedron": "P12",
    "icosahedron": "P20",
}

# identifications that hold only for particular parameters
PARAMETER_ALIASES: Dict[str, List[str]] = {
    "P6": ["E□4(p=3)", "E□1(p=3)", "CP4"],
    "P8": ["E△1(p=2)"],
    "P20": ["E△4(p=5)"],
    "TP6": ["BP4", "E△5(p=3)"],
    "E′□2": ["E″□2(s′=p−s, t=1) when t=1"],
}

_PRIMES = (("'''", "‴"), ("''", "″"), ("'", "′"))
_EARTH = re.compile(r"^E([′″‴]?)(□|△|sq|q|tri|t)(\d)$")
_SPORADIC = re.compile(r"^S([′]?)_?(\d\d)[\s_-]*([′]?)[\s_-]*(\d)$")
_SUBDIVISION = re.compile(r"^([TBQCS])P([′]?)(\d+)$")


def normalize_name(name: str) -> str:
    """Accept ASCII spellings: E'q4 for E′□4, Et1 for E△1, S16'3 or S'_16 3 for S′16 3."""
    text = name.strip()
    for ascii_prime, prime in _PRIMES:
        text = text.replace(ascii_prime, prime)
    compact = text.replace(" ", "")
    match = _EARTH.match(compact)
    if match:
        shape = "△" if match.group(2) in ("△", "tri", "t") else "□"
        return f"E{match.group(1)}{shape}{match.group(3)}"
    match = _SPORADIC.match(text)
    if match:
        prime = "′" if match.group(1) or match.group(3) else ""
        return f"S{prime}{match.group(2)} {match.group(4)}"
    match = _SUBDIVISION.match(compact)
    if match:
        return f"{match.group(1)}P{match.group(2)}{match.group(3)}"
    return text


def resolve_alias(name: str) -> str:
    """The catalog name of ``name``."""
    text = normalize_name(name)
    return FAMILY_ALIASES.get(text, FAMILY_ALIASES.get(text.lower(), text))


class _Row(NamedTuple):
    name: str
    group: str
    kind: str
    f: str
    angles: str
    vertices: str
    defaults: Dict[str, Any] = {}


# angles in units of π
_ROWS: Tuple[_Row, ...] = (
    _Row("P4", "triangle", "platonic", "4", "α+β+γ=2", "αβγ (α³ regular)"),
    _Row("P8", "triangle", "platonic", "8", "α=1/2, β+γ=1", "α⁴, β²γ² (α⁴ regular)"),
    _Row("P20", "triangle", "platonic", "20", "α=2/5", "α⁵"),
    _Row("TP4", "triangle", "subdivision", "12", "α=2/3, β=1/3", "α³, β⁶"),
    _Row("TP6", "triangle", "subdivision", "24", "α=1/2, β=1/3", "α⁴, β⁶"),
    _Row("TP8", "triangle", "subdivision", "24", "α=2/3, β=1/4", "α³, β⁸"),
    _Row("TP12", "triangle", "subdivision", "60", "α=2/5, β=1/3", "α⁵, β⁶"),
    _Row("TP20", "triangle", "subdivision", "60", "α=2/3, β=1/5", "α³, β¹⁰"),
    _Row("BP6", "triangle", "subdivision", "48", "α=1/3, β=1/4, γ=1/2", "α⁶, β⁸, γ⁴"),
    _Row("BP12", "triangle", "subdivision", "120", "α=1/3, β=1/5, γ=1/2", "α⁶, β¹⁰, γ⁴"),
    _Row("SP6", "triangle", "subdivision", "12", "α=2/3, β=1/3", "α³, α²β², αβ⁴, β⁶"),
    _Row("SP′6", "triangle", "subdivision", "12", "α=2/3, β=1/3", "α³, α²β², αβ⁴, β⁶"),
    _Row("BP′8", "triangle", "flip", "48", "α=1/4, β=1/3, γ=1/2", "α⁸, β⁶, α⁴γ², γ⁴"),
    _Row("E△1", "triangle", "earth map", "4p", "α=4/f, β+γ=1", "α^{2p}, β²γ²", {"p": 4}),
    _Row("E△2", "triangle", "earth map", "4p", "α=1−4/f, β=4/f", "α²β², β^{2p}", {"p": 4}),
    _Row("E△3", "triangle", "earth map", "2p", "α=4/f, β=1/2", "α^p, β⁴", {"p": 4}),
    _Row("E△4", "triangle", "earth map", "4p", "α=8/f, β=1/2−2/f", "α^p, αβ⁴", {"p": 4}),
    _Row("E△5", "triangle", "earth map", "8p", "α=8/f, β=1/2−4/f, γ=1/2", "α^{2p}, α²β⁴, γ⁴", {"p": 4}),
    _Row("E′△1", "triangle", "flip", "8q+4", "α=4/f, β+γ=1", "β²γ², α^{2q+1}βγ", {"q": 1}),
    _Row("E″△1", "triangle", "flip", "8q+4", "α=4/f, β=1/2−2/f, γ=1/2+2/f",
         "β²γ², α^{2q+1}βγ, αβ³γ, α^{2q}γ²", {"q": 1}),
    _Row("E‴△1", "triangle", "flip", "8q+4", "α=4/f, β=1/2−2/f, γ=1/2+2/f", "β²γ², αβ³γ, α^{2q}γ²", {"q": 1}),
    _Row("E′△2", "triangle", "flip", "8q+4", "α=1−4/f, β=4/f", "α²β², αβ^{2q+2}", {"q": 1}),
    _Row("E′△3", "triangle", "flip", "4q", "α=4/f, β=1/2", "β⁴, α^qβ²", {"q": 2}),
    _Row("E′△4", "triangle", "flip", "8q+4", "α=8/f, β=1/2−2/f", "αβ⁴, α^{q+1}β²", {"q": 1}),
    _Row("E′△5", "triangle", "flip", "16q+8", "α=8/f, β=1/2−4/f, γ=1/2", "α²β⁴, γ⁴, α^{2q+2}β²", {"q": 1}),
    _Row("P6", "quadrilateral", "platonic", "6", "α=2/3, β+γ+δ=2", "α³, βγδ (α³ regular)"),
    _Row("QP4", "quadrilateral", "platonic", "12", "α=2/3, β=1/2", "α³, β⁴"),
    _Row("QP6", "quadrilateral", "platonic", "24", "α=2/3, β+δ=1, γ=1/2", "α³, β²δ², γ⁴"),
    _Row("QP12", "quadrilateral", "platonic", "60", "α=2/5, β=1/2, γ=2/3", "α⁵, β⁴, γ³"),
    _Row("CP12", "quadrilateral", "platonic", "30", "α=2/3, β=2/5", "α³, β⁵"),
    _Row("QP′6", "quadrilateral", "platonic", "24", "α=β=2/3, γ=1/2, δ=1/3", "α³, αβ², α²δ², β²δ², γ⁴"),
    _Row("QP′8", "quadrilateral", "platonic", "24", "α=2/3, β=γ=1/2", "α³, β⁴, β²γ², γ⁴"),
    _Row("E□1", "quadrilateral", "earth map", "2p", "α=4/f", "α^p, βγδ", {"p": 4}),
    _Row("E□2", "quadrilateral", "earth map", "2p", "α=4/f, 1/2<β<3/2", "α^p, βγδ", {"p": 4}),
    _Row("E□3", "quadrilateral", "earth map", "2p", "α=4/f, 2β+γ=2", "α^p, β²γ", {"p": 4}),
    _Row("E□4", "quadrilateral", "earth map", "2p", "α=4/f, β=1−2/f", "α^p, αβ²", {"p": 4}),
    _Row("E□5", "quadrilateral", "earth map", "8p", "α=1−8/f, β=1/2+4/f, γ=1/2, δ=8/f",
         "αβ², α²δ², γ⁴, δ^{2p}", {"p": 3}),
    _Row("E′□2", "quadrilateral", "flip", "2p", "α=4/f, β=4s/f, f/8<s<3f/8, st≤f/2",
         "βγδ, α^{p−st}β^t, α^sγδ", {"f": 16, "s": 3, "t": 1}),
    _Row("E″□2", "quadrilateral", "flip", "2p", "α=4/f, γ+δ=4s′/f, f/8<s′<3f/8, s′t≤f/2",
         "βγδ, α^{s′}β, α^{p−s′t}γ^tδ^t", {"f": 16, "s": 3, "t": 1}),
    _Row("E′□4", "quadrilateral", "flip", "4q+2", "α=4/f, β=1−2/f", "αβ², α^{q+1}β", {"q": 1}),
    _Row("E′□5", "quadrilateral", "flip", "16q+8", "α=1−8/f, β=1/2+4/f, γ=1/2, δ=8/f",
         "αβ², α²δ², γ⁴, αδ^{2q+2}, β²δ^{2q}", {"q": 1}),
    _Row("E″□5", "quadrilateral", "flip", "16q+8", "α=1−8/f, β=1/2+4/f, γ=1/2, δ=8/f",
         "αβ², α²δ², γ⁴, αδ^{2q+2}", {"q": 1}),
    _Row("E‴□2", "quadrilateral", "flip", "6q+4", "α=4/f, β=4/3−4/(3f), γ=2/f, δ=2/3−2/(3f)",
         "βγδ, γδ³, α^{q+1}β, α^qβγ²", {"q": 1}),
) + tuple(
    _Row(name, "quadrilateral", "sporadic", str(entry.f), ", ".join(
        f"{label}: {value}" for label, value in zip("αβγδ", entry.angles)), ", ".join(entry.vertices))
    for name, entry in SPORADIC.items()
)


def _display(name: str) -> str:
    subscripts = str.maketrans("0123456789", "₀₁₂₃₄₅₆₇₈₉")
    match = re.match(r"^([A-Z]+[′]?)(\d+)(.*)$", name)
    if name.startswith("E") or not match:
        return name
    return match.group(1) + match.group(2).translate(subscripts) + match.group(3)


def census(group: Optional[str] = None) -> List[CensusEntry]:
    """Every family, with the names identified with it."""
    aliases: Dict[str, List[str]] = {}
    for alias, canonical in FAMILY_ALIASES.items():
        if alias[0].isupper():
            aliases.setdefault(canonical, []).append(alias)
    for canonical, extra in PARAMETER_ALIASES.items():
        for alias in extra:
            if alias not in aliases.setdefault(canonical, []):
                aliases[canonical].append(alias)
    return [
        CensusEntry(name=row.name, display=_display(row.name), kind=row.kind, group=row.group, f=row.f,
                    angles=row.angles, vertices=row.vertices, aliases=aliases.get(row.name, []),
                    defaults=dict(row.defaults))
        for row in _ROWS
        if group is None or row.group == group
    ]


def family_names() -> List[str]:
    return [row.name for row in _ROWS]


# Building


def _timezones(name: str, params: Dict[str, Any]) -> int:
    if "p" in params:
        return int(params.pop("p"))
    if "f" in params:
        return timezones_for(name, int(params.pop("f")))
    raise CatalogError(f"{name} needs p (timezones) or f", family=name)


def _build(name: str, params: Dict[str, Any]) -> GeometricRealization:
    match = re.match(r"^P(\d+)$", name)
    if match:
        f = int(match.group(1))
        quad_class = QuadClass.parse(params.pop("class")) if "class" in params else None
        t = build_platonic(f, quad_class)
        return realize(t, platonic_template(f, quad_class, **params))
    match = re.match(r"^([TBQC])P(\d+)$", name)
    if match:
        t, specs = platonic_subdivision(match.group(1), int(match.group(2)), **params)
        return realize_any(t, specs)
    if name in ("SP6", "SP′6"):
        t, spec = simple_triangular_cube(prime=name == "SP′6")
        return realize(t, spec)
    if name == "E‴□2":
        q = int(params["q"]) if "q" in params else None
        if q is None and "f" in params:
            f = int(params["f"])
            if f < 10 or (f - 4) % 6:
                raise CatalogError("E‴□2 needs f = 6q+4", f=f)
            q = (f - 4) // 6
        return build_e_square_2_triple(q or 1, int(params.get("variant", 1)))
    if name in FLIP_NAMES:
        t, spec = apply_flip(name, **params)
        return realize(t, spec)
    if name in TRIANGLE_FAMILIES + QUAD_FAMILIES:
        p = _timezones(name, params)
        t = build_earth_map(name, p)
        return realize_any(t, earth_map_templates(name, p, **params))
    if name in SPORADIC:
        return realize_sporadic(name)
    raise CatalogError(f"unknown family '{name}'", known=family_names())


@cached_result
def build_family(family: FamilyId) -> GeometricRealization:
    """Build and realize any catalog family."""
    name = resolve_alias(family.name)
    params = dict(family.params)
    logger.info(f"Building {name}" + (f" with {params}" if params else ""))
    r = _build(name, params)
    label = str(FamilyId(name=name, params=family.params))
    return r.model_copy(update={"complex": r.complex.named(label)})


def default_family(name: str) -> FamilyId:
    """The family with the defaults the census lists."""
    canonical = resolve_alias(name)
    for row in _ROWS:
        if row.name == canonical:
            return FamilyId(name=canonical, params=dict(row.defaults))
    return FamilyId(name=canonical)


def expected_census(name: str) -> Optional[Set[VertexCombo]]:
    """The listed vertex types of a family without free parameters, when they are explicit."""
    canonical = resolve_alias(name)
    for row in _ROWS:
        if row.name != canonical:
            continue
        if row.defaults:
            return None
        try:
            return {VertexCombo.parse(text) for text in row.vertices.split(",")}
        except ValueError:
            return None
    return None
