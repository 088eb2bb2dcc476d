"""JSON algebra files.

Schema::

    {
      "name": "su2",
      "dim": 3,
      "brackets": [{"i": 1, "j": 2, "k": 3, "value": "1"}, ...],
      "orientation": 1
    }

Indices are 1-based with ``i < j``; ``value`` is an exact rational written
as ``"p"`` or ``"p/q"`` (integers are also accepted).  Missing triples are
zero.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction

from .exalg import MAX_DIM, Orientation
from .liealg import MetricLieAlgebra

_RATIONAL = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


class SpecError(ValueError):
    """Malformed or invalid algebra file."""


def parse_rational(value) -> Fraction:
    if isinstance(value, bool):
        raise SpecError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        raise SpecError(f"floats are rejected, write {value!r} as a string 'p/q'")
    if not isinstance(value, str):
        raise SpecError(f"not a rational: {value!r}")
    m = _RATIONAL.match(value)
    if not m:
        raise SpecError(f"malformed rational {value!r} (expected 'p' or 'p/q')")
    num, den = int(m.group(1)), int(m.group(2) or 1)
    if den == 0:
        raise SpecError(f"zero denominator in {value!r}")
    return Fraction(num, den)


def format_rational(q) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


@dataclass
class AlgebraSpec:
    name: str
    dim: int
    brackets: dict = field(default_factory=dict)  # (i, j, k) 1-based -> Fraction
    orientation: int = 1

    def to_algebra(self) -> MetricLieAlgebra:
        return MetricLieAlgebra.from_brackets(
            self.dim, {(i - 1, j - 1, k - 1): v for (i, j, k), v in self.brackets.items()},
            self.name)

    @classmethod
    def from_algebra(cls, L: MetricLieAlgebra, orientation: int = 1) -> "AlgebraSpec":
        return cls(L.name, L.dim,
                   {(i + 1, j + 1, k + 1): v for (i, j, k), v in L.brackets().items()},
                   orientation)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "dim": self.dim,
            "brackets": [{"i": i, "j": j, "k": k, "value": format_rational(v)}
                         for (i, j, k), v in sorted(self.brackets.items())],
            "orientation": self.orientation,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def parse_algebra(data: bytes | str) -> AlgebraSpec:
    """Parse and validate an algebra file; raises :class:`SpecError`."""
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise SpecError(f"not UTF-8: {exc}") from None
    try:
        doc = json.loads(data, parse_float=_reject_float)
    except json.JSONDecodeError as exc:
        raise SpecError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise SpecError("top level must be an object")

    name = doc.get("name", "algebra")
    if not isinstance(name, str):
        raise SpecError("name must be a string")
    dim = doc.get("dim")
    if isinstance(dim, bool) or not isinstance(dim, int) or not 1 <= dim <= MAX_DIM:
        raise SpecError(f"dim must be an integer in [1, {MAX_DIM}], got {dim!r}")
    orientation = doc.get("orientation", 1)
    if orientation not in (1, -1) or isinstance(orientation, bool):
        raise SpecError(f"orientation must be 1 or -1, got {orientation!r}")

    raw = doc.get("brackets", [])
    if not isinstance(raw, list):
        raise SpecError("brackets must be a list")
    brackets = {}
    for n, rec in enumerate(raw):
        if not isinstance(rec, dict) or set(rec) != {"i", "j", "k", "value"}:
            raise SpecError(f"bracket #{n}: expected keys i, j, k, value")
        idx = tuple(rec[key] for key in "ijk")
        if any(isinstance(x, bool) or not isinstance(x, int) for x in idx):
            raise SpecError(f"bracket #{n}: indices must be integers")
        i, j, k = idx
        if not all(1 <= x <= dim for x in idx):
            raise SpecError(f"bracket #{n}: index out of range [1, {dim}]")
        if i >= j:
            raise SpecError(f"bracket #{n}: need i < j, got i={i}, j={j}")
        if idx in brackets:
            raise SpecError(f"duplicate triple {idx}")
        brackets[idx] = parse_rational(rec["value"])

    spec = AlgebraSpec(name, dim, {k: v for k, v in brackets.items() if v}, int(orientation))
    violations = spec.to_algebra().validate()
    if violations:
        shown = "; ".join(str(v) for v in violations[:5])
        raise SpecError(f"structure constants fail validation: {shown}")
    return spec


def _reject_float(text):
    raise SpecError(f"floats are rejected, write {text} as a string 'p/q'")
