"""Angles as exact rational multiples of pi, with a numeric fallback."""

import math
import re
from fractions import Fraction
from typing import Any, Optional, Union

from pydantic import BaseModel, ConfigDict, model_validator

Scalar = Union[int, Fraction]

_PI_SUFFIX = re.compile(r"\s*(pi|π)\s*$", re.IGNORECASE)
_RAD_SUFFIX = re.compile(r"\s*rad\s*$", re.IGNORECASE)


class AngleValue(BaseModel):
    """An angle (or arc length) in radians.

    Exact angles keep ``num/den`` so that ``value = num/den * pi``; numeric
    angles keep ``rad``. Addition, subtraction and integer scaling of exact
    angles stay exact; anything trigonometric goes through ``radians``.
    """

    model_config = ConfigDict(frozen=True)

    num: Optional[int] = None
    den: Optional[int] = None
    rad: Optional[float] = None

    @model_validator(mode="before")
    @classmethod
    def _normalize(cls, data: Any) -> Any:
        if not isinstance(data, dict):
            return data
        num, den, rad = data.get("num"), data.get("den"), data.get("rad")
        if num is not None:
            if rad is not None:
                raise ValueError("angle is either exact or numeric, not both")
            if den is None:
                den = 1
            if den == 0:
                raise ValueError("zero denominator")
            fr = Fraction(int(num), int(den))
            return {"num": fr.numerator, "den": fr.denominator}
        if rad is None:
            raise ValueError("angle needs num/den or rad")
        rad = float(rad)
        if not math.isfinite(rad):
            raise ValueError(f"non-finite angle {rad}")
        return {"rad": rad}

    # Constructors

    @classmethod
    def pi(cls, p: Scalar = 1, q: int = 1) -> "AngleValue":
        """The exact angle (p/q)·π."""
        fr = Fraction(p) / q
        return cls(num=fr.numerator, den=fr.denominator)

    @classmethod
    def numeric(cls, radians: float) -> "AngleValue":
        return cls(rad=float(radians))

    @classmethod
    def from_pi_units(cls, value: Union[float, Fraction, int]) -> "AngleValue":
        """Exact for ints/Fractions, numeric for floats."""
        if isinstance(value, (int, Fraction)):
            return cls.pi(value)
        return cls.numeric(float(value) * math.pi)

    @classmethod
    def parse(cls, text: str) -> "AngleValue":
        """Parse "2/3", "2/3 pi", "0.4568pi" (units of pi) or "1.2 rad"."""
        raw = text.strip()
        if _RAD_SUFFIX.search(raw):
            return cls.numeric(float(_RAD_SUFFIX.sub("", raw)))
        body = _PI_SUFFIX.sub("", raw).strip()
        if not body:
            return cls.pi(1)
        try:
            return cls.pi(Fraction(body))
        except ValueError:
            pass
        try:
            return cls.from_pi_units(float(body))
        except ValueError as exc:
            raise ValueError(f"cannot parse angle '{text}'") from exc

    # Views

    @property
    def is_exact(self) -> bool:
        return self.num is not None

    @property
    def fraction(self) -> Optional[Fraction]:
        """The rational multiple of pi, or None for numeric angles."""
        if self.num is None:
            return None
        return Fraction(self.num, self.den)

    @property
    def radians(self) -> float:
        if self.num is not None:
            return self.num * math.pi / self.den
        return self.rad

    @property
    def pi_units(self) -> float:
        return self.radians / math.pi

    def __float__(self) -> float:
        return self.radians

    # Arithmetic

    def _combine(self, other: "AngleValue", sign: int) -> "AngleValue":
        if self.is_exact and other.is_exact:
            return AngleValue.pi(self.fraction + sign * other.fraction)
        return AngleValue.numeric(self.radians + sign * other.radians)

    def __add__(self, other: "AngleValue") -> "AngleValue":
        if not isinstance(other, AngleValue):
            return NotImplemented
        return self._combine(other, 1)

    def __sub__(self, other: "AngleValue") -> "AngleValue":
        if not isinstance(other, AngleValue):
            return NotImplemented
        return self._combine(other, -1)

    def __neg__(self) -> "AngleValue":
        if self.is_exact:
            return AngleValue.pi(-self.fraction)
        return AngleValue.numeric(-self.rad)

    def __mul__(self, k: Scalar) -> "AngleValue":
        if isinstance(k, (int, Fraction)) and not isinstance(k, bool):
            if self.is_exact:
                return AngleValue.pi(self.fraction * k)
            return AngleValue.numeric(self.rad * float(k))
        if isinstance(k, float):
            return AngleValue.numeric(self.radians * k)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, k: Scalar) -> "AngleValue":
        if isinstance(k, (int, Fraction)) and not isinstance(k, bool):
            return self * (Fraction(1) / Fraction(k))
        if isinstance(k, float):
            return AngleValue.numeric(self.radians / k)
        return NotImplemented

    # Comparisons are by value; equality of kinds stays the pydantic default

    def __lt__(self, other: "AngleValue") -> bool:
        return self.radians < other.radians

    def __le__(self, other: "AngleValue") -> bool:
        return self.radians <= other.radians

    def __gt__(self, other: "AngleValue") -> bool:
        return self.radians > other.radians

    def __ge__(self, other: "AngleValue") -> bool:
        return self.radians >= other.radians

    def close_to(self, other: "AngleValue", tol: float = 1e-9) -> bool:
        if self.is_exact and other.is_exact:
            return self.fraction == other.fraction
        return abs(self.radians - other.radians) <= tol

    def __str__(self) -> str:
        return format_angle(self)

    def __repr__(self) -> str:
        return f"AngleValue({format_angle(self)})"


def format_angle(angle: AngleValue) -> str:
    """"p/q pi" when exact, 12 significant digits of radians otherwise."""
    if angle.is_exact:
        fr = angle.fraction
        if fr == 0:
            return "0"
        if fr.denominator == 1:
            return f"{fr.numerator} pi"
        return f"{fr.numerator}/{fr.denominator} pi"
    return f"{angle.rad:.12g}"


def angle_from_document(value: Union[str, float, int]) -> AngleValue:
    """Inverse of ``format_angle``; bare numbers are radians."""
    if isinstance(value, (int, float)) and not isinstance(value, bool):
        return AngleValue.numeric(float(value))
    text = str(value).strip()
    if text == "0":
        return AngleValue.pi(0)
    if _PI_SUFFIX.search(text):
        return AngleValue.pi(Fraction(_PI_SUFFIX.sub("", text).strip()))
    return AngleValue.numeric(float(text))


PI = AngleValue.pi(1)
HALF_PI = AngleValue.pi(1, 2)
TWO_PI = AngleValue.pi(2)
