"""Data models for congruent tiles and vertex combinations."""

import math
import re
from enum import Enum
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

from .angle import AngleValue

ANGLE_LABELS: Tuple[str, ...] = ("α", "β", "γ", "δ")
EDGE_LABELS: Tuple[str, ...] = ("a", "b", "c")

_ASCII_ANGLES = {"alpha": "α", "beta": "β", "gamma": "γ", "delta": "δ"}
_SUPERSCRIPTS = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")
_FROM_SUPERSCRIPTS = str.maketrans("⁰¹²³⁴⁵⁶⁷⁸⁹", "0123456789")
_ANGLE_FIELDS = {"α": "alpha", "β": "beta", "γ": "gamma", "δ": "delta"}


class QuadClass(str, Enum):
    """Edge arrangement of the tile.

    The value is the edge-length pattern used on the command line.
    """
    GENERAL = "a2bc"
    KITE = "a2b2"
    ALMOST_EQUILATERAL = "a3b"
    RHOMBUS = "a4"
    SQUARE = "square"
    TRIANGLE = "abc"
    ISOSCELES_TRIANGLE = "a2b"
    EQUILATERAL_TRIANGLE = "a3"
    REGULAR_PENTAGON = "a5"

    @property
    def n_sides(self) -> int:
        return len(_TEMPLATES[self][0])

    @property
    def corner_labels(self) -> Tuple[str, ...]:
        """Angle labels in template order."""
        return _TEMPLATES[self][0]

    @property
    def edge_labels(self) -> Tuple[str, ...]:
        """Edge labels in template order; edge i joins corner i to corner i+1."""
        return _TEMPLATES[self][1]

    @property
    def angle_names(self) -> Tuple[str, ...]:
        """Distinct angle labels, in alphabetical order."""
        return tuple(l for l in ANGLE_LABELS if l in self.corner_labels)

    @property
    def edge_names(self) -> Tuple[str, ...]:
        return tuple(l for l in EDGE_LABELS if l in self.edge_labels)

    @classmethod
    def parse(cls, text: str) -> "QuadClass":
        key = text.strip().lower().replace("²", "2").replace("³", "3").replace("⁴", "4")
        aliases = {
            "general": cls.GENERAL,
            "kite": cls.KITE,
            "almost-equilateral": cls.ALMOST_EQUILATERAL,
            "rhombus": cls.RHOMBUS,
            "triangle": cls.TRIANGLE,
            "isosceles": cls.ISOSCELES_TRIANGLE,
            "equilateral": cls.EQUILATERAL_TRIANGLE,
            "pentagon": cls.REGULAR_PENTAGON,
        }
        if key in aliases:
            return aliases[key]
        for member in cls:
            if member.value == key:
                return member
        raise ValueError(f"unknown tile class '{text}'")


_TEMPLATES: Dict[QuadClass, Tuple[Tuple[str, ...], Tuple[str, ...]]] = {
    QuadClass.GENERAL: (("α", "β", "γ", "δ"), ("a", "b", "c", "a")),
    QuadClass.KITE: (("α", "β", "γ", "β"), ("a", "b", "b", "a")),
    QuadClass.ALMOST_EQUILATERAL: (("α", "β", "γ", "δ"), ("a", "a", "b", "a")),
    QuadClass.RHOMBUS: (("α", "β", "α", "β"), ("a", "a", "a", "a")),
    QuadClass.SQUARE: (("α",) * 4, ("a",) * 4),
    QuadClass.TRIANGLE: (("α", "β", "γ"), ("a", "c", "b")),
    QuadClass.ISOSCELES_TRIANGLE: (("α", "β", "β"), ("a", "b", "a")),
    QuadClass.EQUILATERAL_TRIANGLE: (("α",) * 3, ("a",) * 3),
    QuadClass.REGULAR_PENTAGON: (("α",) * 5, ("a",) * 5),
}


class QuadSpec(BaseModel):
    """A congruent tile: class, angles and edge lengths."""

    model_config = ConfigDict(frozen=True, populate_by_name=True)

    quad_class: QuadClass = Field(alias="class")
    alpha: AngleValue
    beta: Optional[AngleValue] = None
    gamma: Optional[AngleValue] = None
    delta: Optional[AngleValue] = None
    a: Optional[AngleValue] = None
    b: Optional[AngleValue] = None
    c: Optional[AngleValue] = None

    def angle(self, label: str) -> AngleValue:
        value = getattr(self, _ANGLE_FIELDS[label])
        if value is None:
            raise KeyError(f"{self.quad_class.value} tile has no angle {label}")
        return value

    def edge(self, label: str) -> AngleValue:
        value = getattr(self, label)
        if value is None:
            raise KeyError(f"edge {label} not solved")
        return value

    def angle_values(self) -> Dict[str, AngleValue]:
        return {l: self.angle(l) for l in self.quad_class.angle_names}

    def edge_values(self) -> Dict[str, AngleValue]:
        return {l: getattr(self, l) for l in self.quad_class.edge_names if getattr(self, l) is not None}

    def corner_angles(self) -> List[AngleValue]:
        """Angles in template order."""
        return [self.angle(l) for l in self.quad_class.corner_labels]

    def edge_lengths(self) -> List[AngleValue]:
        """Edge lengths in template order."""
        return [self.edge(l) for l in self.quad_class.edge_labels]

    @property
    def has_edges(self) -> bool:
        return all(getattr(self, l) is not None for l in self.quad_class.edge_names)

    def angle_sum(self) -> AngleValue:
        total = AngleValue.pi(0)
        for value in self.corner_angles():
            total = total + value
        return total

    def implied_f(self) -> Optional[float]:
        """Tile count implied by the angle sum, (n−2+4/f)π."""
        excess = self.angle_sum().radians / math.pi - (self.quad_class.n_sides - 2)
        if excess <= 0:
            return None
        if self.angle_sum().is_exact:
            fr = self.angle_sum().fraction - (self.quad_class.n_sides - 2)
            return float(Fraction(4) / fr)
        return 4.0 / excess


class SolveReport(BaseModel):
    """Outcome of solving a tile from its angles."""

    spec: QuadSpec
    residuals: Dict[str, float] = Field(default_factory=dict)
    simple: bool = True
    success: bool = True
    notes: List[str] = Field(default_factory=list)


class VertexCombo(BaseModel):
    """A vertex type α^k β^l γ^m δ^n."""

    model_config = ConfigDict(frozen=True)

    k: int = Field(default=0, ge=0)
    l: int = Field(default=0, ge=0)
    m: int = Field(default=0, ge=0)
    n: int = Field(default=0, ge=0)

    @property
    def counts(self) -> Tuple[int, int, int, int]:
        return (self.k, self.l, self.m, self.n)

    @property
    def degree(self) -> int:
        return sum(self.counts)

    def count(self, label: str) -> int:
        return self.counts[ANGLE_LABELS.index(label)]

    @classmethod
    def from_counts(cls, counts) -> "VertexCombo":
        counts = list(counts)
        padded = counts + [0] * (4 - len(counts))
        return cls(k=padded[0], l=padded[1], m=padded[2], n=padded[3])

    @classmethod
    def from_labels(cls, labels) -> "VertexCombo":
        counts = [0, 0, 0, 0]
        for label in labels:
            counts[ANGLE_LABELS.index(label)] += 1
        return cls.from_counts(counts)

    @classmethod
    def parse(cls, text: str) -> "VertexCombo":
        """Parse "α²β" or "alpha^2 beta" style notation."""
        body = text.strip()
        for name, greek in _ASCII_ANGLES.items():
            body = re.sub(name, greek, body, flags=re.IGNORECASE)
        body = body.translate(_FROM_SUPERSCRIPTS).replace("^", "").replace(" ", "")
        counts = [0, 0, 0, 0]
        for label, exponent in re.findall(r"([αβγδ])(\d*)", body):
            counts[ANGLE_LABELS.index(label)] += int(exponent) if exponent else 1
        if re.sub(r"[αβγδ]\d*", "", body):
            raise ValueError(f"cannot parse vertex '{text}'")
        if sum(counts) == 0:
            raise ValueError(f"empty vertex '{text}'")
        return cls.from_counts(counts)

    def angle_sum(self, values: Dict[str, AngleValue]) -> AngleValue:
        total = AngleValue.pi(0)
        for label, count in zip(ANGLE_LABELS, self.counts):
            if count:
                total = total + values[label] * count
        return total

    def sort_key(self) -> Tuple[int, ...]:
        return tuple(-c for c in self.counts)

    def __str__(self) -> str:
        parts = []
        for label, count in zip(ANGLE_LABELS, self.counts):
            if count == 1:
                parts.append(label)
            elif count > 1:
                parts.append(label + str(count).translate(_SUPERSCRIPTS))
        return "".join(parts)

    def __repr__(self) -> str:
        return f"VertexCombo({self})"


class AVCSet(BaseModel):
    """An anglewise vertex combination."""

    combos: List[VertexCombo] = Field(default_factory=list)
    f: Optional[int] = None
    quad_class: Optional[QuadClass] = None

    def __contains__(self, combo: VertexCombo) -> bool:
        return combo in self.combos

    def __len__(self) -> int:
        return len(self.combos)

    def __str__(self) -> str:
        return ", ".join(str(c) for c in self.combos)


class DegreeHistogram(BaseModel):
    """Vertex counts per degree, with the totals v, e, f."""

    counts: Dict[int, int] = Field(default_factory=dict)
    f: int
    e: int
    v: int

    def v_k(self, k: int) -> int:
        return self.counts.get(k, 0)
