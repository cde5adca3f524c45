"""JSON measure documents.

A document describes one measure::

    {
      "format_version": 1,
      "space": {"kind": "finite", "labels": ["a", "b"]},
      "atoms": [["a", "1/2"], ["b", "-3"]]
    }

Space descriptors: ``{"kind": "finite", "labels": [...]}``, ``{"kind": "integers"}``,
``{"kind": "rationals"}``, ``{"kind": "vector", "dimension": n}``,
``{"kind": "product", "factors": [...]}`` and ``{"kind": "measures", "base": {...}}``.

Point literals follow the space: a label string, a JSON integer, a rational
string (``"p/q"`` or ``"p"``), a list of rational strings for vectors, a list of
factor points for products, and ``{"atoms": [...]}`` for a measure on the base
space.  Weights are rational strings or JSON integers.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction

from ..errors import KindMismatch as _KindMismatch
from ..signed_measure import SignedMeasure
from ..spaces import (
    FiniteLabeled,
    IntegerLine,
    MeasureSpace,
    ProductSpace,
    RationalLine,
    RationalVector,
    Space,
)

FORMAT_VERSION = 1
_RATIONAL = re.compile(r"^[+-]?\d+(/\d+)?$")


class DocumentError(ValueError):
    """Base class for malformed measure documents."""


class ParseError(DocumentError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = f" at line {line}, column {column}" if line is not None else ""
        super().__init__(f"{message}{where}")


class SchemaError(DocumentError):
    """Well-formed JSON that does not follow the document schema."""


class MalformedRational(DocumentError):
    pass


class KindMismatch(DocumentError, _KindMismatch):
    """A point literal does not fit the declared space."""


def parse_rational(literal, where="") -> Fraction:
    if isinstance(literal, bool):
        raise MalformedRational(f"{where}: {literal!r} is not a rational literal")
    if isinstance(literal, int):
        return Fraction(literal)
    if not isinstance(literal, str) or not _RATIONAL.match(literal.strip()):
        raise MalformedRational(f"{where}: {literal!r} is not a rational literal (use p/q or an integer)")
    num, _, den = literal.strip().partition("/")
    if den and int(den) == 0:
        raise MalformedRational(f"{where}: zero denominator in {literal!r}")
    return Fraction(int(num), int(den) if den else 1)


def format_rational(q: Fraction) -> str:
    return str(q)


# ---------------------------------------------------------------------------
# spaces


def parse_space(desc, where="space") -> Space:
    if not isinstance(desc, dict) or "kind" not in desc:
        raise SchemaError(f"{where}: expected an object with a 'kind' field")
    kind = desc["kind"]
    if kind == "finite":
        labels = desc.get("labels")
        if not isinstance(labels, list) or not labels or not all(isinstance(x, str) for x in labels):
            raise SchemaError(f"{where}.labels: expected a non-empty list of strings")
        return FiniteLabeled(frozenset(labels))
    if kind == "integers":
        return IntegerLine()
    if kind == "rationals":
        return RationalLine()
    if kind == "vector":
        dim = desc.get("dimension")
        if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
            raise SchemaError(f"{where}.dimension: expected a positive integer")
        return RationalVector(dim)
    if kind == "product":
        factors = desc.get("factors")
        if not isinstance(factors, list) or not factors:
            raise SchemaError(f"{where}.factors: expected a non-empty list")
        return ProductSpace(tuple(parse_space(f, f"{where}.factors[{i}]") for i, f in enumerate(factors)))
    if kind == "measures":
        return MeasureSpace(parse_space(desc.get("base"), f"{where}.base"))
    raise SchemaError(f"{where}.kind: unknown space kind {kind!r}")


def dump_space(space: Space) -> dict:
    if isinstance(space, FiniteLabeled):
        return {"kind": "finite", "labels": sorted(space.labels)}
    if isinstance(space, IntegerLine):
        return {"kind": "integers"}
    if isinstance(space, RationalLine):
        return {"kind": "rationals"}
    if isinstance(space, RationalVector):
        return {"kind": "vector", "dimension": space.dimension}
    if isinstance(space, ProductSpace):
        return {"kind": "product", "factors": [dump_space(f) for f in space.factors]}
    if isinstance(space, MeasureSpace):
        return {"kind": "measures", "base": dump_space(space.base)}
    raise SchemaError(f"{space!r} has no document representation")


# ---------------------------------------------------------------------------
# points and measures


def parse_point(space: Space, literal, where="point"):
    if isinstance(space, FiniteLabeled):
        if not isinstance(literal, str) or literal not in space.labels:
            raise KindMismatch(f"{where}: {literal!r} is not one of the labels {sorted(space.labels)}")
        return literal
    if isinstance(space, IntegerLine):
        if not isinstance(literal, int) or isinstance(literal, bool):
            raise KindMismatch(f"{where}: expected an integer, got {literal!r}")
        return literal
    if isinstance(space, RationalLine):
        if isinstance(literal, (list, dict)):
            raise KindMismatch(f"{where}: expected a rational, got {literal!r}")
        return parse_rational(literal, where)
    if isinstance(space, RationalVector):
        if not isinstance(literal, list) or len(literal) != space.dimension:
            raise KindMismatch(f"{where}: expected a list of {space.dimension} rationals, got {literal!r}")
        return tuple(parse_rational(c, f"{where}[{i}]") for i, c in enumerate(literal))
    if isinstance(space, ProductSpace):
        if not isinstance(literal, list) or len(literal) != len(space.factors):
            raise KindMismatch(f"{where}: expected a list of {len(space.factors)} factor points")
        return tuple(parse_point(f, c, f"{where}[{i}]") for i, (f, c) in enumerate(zip(space.factors, literal)))
    if isinstance(space, MeasureSpace):
        if not isinstance(literal, dict) or "atoms" not in literal:
            raise KindMismatch(f"{where}: expected a nested measure {{'atoms': [...]}}")
        return _parse_atoms(space.base, literal["atoms"], f"{where}.atoms")
    raise SchemaError(f"{where}: unsupported space {space!r}")


def dump_point(space: Space, p):
    if isinstance(space, (FiniteLabeled, IntegerLine)):
        return p
    if isinstance(space, RationalLine):
        return format_rational(p)
    if isinstance(space, RationalVector):
        return [format_rational(c) for c in p]
    if isinstance(space, ProductSpace):
        return [dump_point(f, c) for f, c in zip(space.factors, p)]
    if isinstance(space, MeasureSpace):
        return {"atoms": _dump_atoms(p)}
    raise SchemaError(f"{space!r} has no document representation")


def _parse_atoms(space: Space, atoms, where) -> SignedMeasure:
    if not isinstance(atoms, list):
        raise SchemaError(f"{where}: expected a list of [point, weight] pairs")
    pairs = []
    for i, entry in enumerate(atoms):
        if not isinstance(entry, list) or len(entry) != 2:
            raise SchemaError(f"{where}[{i}]: expected a [point, weight] pair")
        pairs.append((parse_point(space, entry[0], f"{where}[{i}][0]"), parse_rational(entry[1], f"{where}[{i}][1]")))
    return SignedMeasure.from_atoms(space, pairs)


def _dump_atoms(mu: SignedMeasure) -> list:
    return [[dump_point(mu.space, p), format_rational(w)] for p, w in mu.atoms]


def measure_from_dict(doc) -> SignedMeasure:
    if not isinstance(doc, dict):
        raise SchemaError("document: expected a JSON object")
    version = doc.get("format_version")
    if version != FORMAT_VERSION:
        raise SchemaError(f"format_version: expected {FORMAT_VERSION}, got {version!r}")
    space = parse_space(doc.get("space"))
    return _parse_atoms(space, doc.get("atoms"), "atoms")


def measure_to_dict(mu: SignedMeasure) -> dict:
    return {"format_version": FORMAT_VERSION, "space": dump_space(mu.space), "atoms": _dump_atoms(mu)}


def parse_measure_document(text: str) -> SignedMeasure:
    """Parse a document into a canonical SignedMeasure."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from exc
    return measure_from_dict(doc)


def dump_measure_document(mu: SignedMeasure) -> str:
    return json.dumps(measure_to_dict(mu), indent=2) + "\n"
