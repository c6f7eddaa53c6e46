"""Built-in algebras and the JSON algebra document format.

Documents look like::

    {"name": "sl2", "dim": 3, "basis": ["h", "e", "f"],
     "brackets": [{"left": "h", "right": "e", "value": {"e": "2"}}, ...]}

Scalars are strings ``"p"`` or ``"p/q"``; unlisted pairs are zero and the
reversed pair is filled in by antisymmetry.
"""
from __future__ import annotations

import json
import re
from fractions import Fraction
from functools import lru_cache

from .algebra import Algebra, direct_sum
from .errors import (
    DuplicatePair,
    MalformedRational,
    ParseError,
    SelfBracket,
    UnknownBasisLabel,
)
from .linalg import unit_vector, vscale

_RATIONAL = re.compile(r"[+-]?\d+(/\d+)?")

# Oriented lines of the Fano plane: e_i e_j = e_k for each cyclic rotation.
FANO_TRIPLES = ((1, 2, 3), (1, 4, 5), (1, 7, 6), (2, 4, 6), (2, 5, 7), (3, 4, 7), (3, 6, 5))

NON_LIE = frozenset({"M7", "solv4", "sl2_plus_M7"})


def parse_rational(text) -> Fraction:
    if not isinstance(text, str) or not _RATIONAL.fullmatch(text.strip()):
        raise MalformedRational(f"expected a 'p' or 'p/q' string, got {text!r}")
    num, _, den = text.strip().partition("/")
    if den and int(den) == 0:
        raise MalformedRational(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den else 1)


def format_rational(x: Fraction) -> str:
    return str(Fraction(x))


def from_document(doc: dict) -> Algebra:
    if not isinstance(doc, dict):
        raise ParseError("an algebra document must be a JSON object")
    missing = {"name", "dim", "basis", "brackets"} - doc.keys()
    if missing:
        raise ParseError(f"missing fields: {', '.join(sorted(missing))}")
    name, dim, basis, entries = doc["name"], doc["dim"], doc["basis"], doc["brackets"]
    if not isinstance(name, str):
        raise ParseError("'name' must be a string")
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 0:
        raise ParseError("'dim' must be a non-negative integer")
    if not isinstance(basis, list) or not all(isinstance(b, str) for b in basis):
        raise ParseError("'basis' must be a list of strings")
    if len(basis) != dim:
        raise ParseError(f"'dim' is {dim} but {len(basis)} basis labels were given")
    if len(set(basis)) != dim:
        raise ParseError("basis labels must be distinct")
    if not isinstance(entries, list):
        raise ParseError("'brackets' must be a list")
    index = {b: k for k, b in enumerate(basis)}

    def lookup(label):
        if not isinstance(label, str) or label not in index:
            raise UnknownBasisLabel(f"unknown basis label {label!r}")
        return index[label]

    brackets = {}
    for entry in entries:
        if not isinstance(entry, dict) or {"left", "right", "value"} - entry.keys():
            raise ParseError("each bracket entry needs 'left', 'right' and 'value'")
        i, j = lookup(entry["left"]), lookup(entry["right"])
        if i == j:
            raise SelfBracket(f"[{basis[i]}, {basis[i]}] is zero and may not be listed")
        key = (min(i, j), max(i, j))
        if key in brackets:
            raise DuplicatePair(f"the pair {{{basis[i]}, {basis[j]}}} is listed twice")
        if not isinstance(entry["value"], dict):
            raise ParseError("'value' must map basis labels to rationals")
        v = [Fraction(0)] * dim
        for label, text in entry["value"].items():
            v[lookup(label)] += parse_rational(text)
        brackets[key] = v if i < j else vscale(-1, v)
    return Algebra.from_brackets(name, basis, brackets)


def parse(text: str) -> Algebra:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"not valid JSON: {exc}") from None
    return from_document(doc)


def to_document(a: Algebra) -> dict:
    entries = []
    for i in range(a.dim):
        for j in range(i + 1, a.dim):
            v = a.constants[i][j]
            if any(v):
                entries.append({
                    "left": a.basis_names[i],
                    "right": a.basis_names[j],
                    "value": {a.basis_names[k]: format_rational(x) for k, x in enumerate(v) if x},
                })
    return {"name": a.name, "dim": a.dim, "basis": list(a.basis_names), "brackets": entries}


def serialize(a: Algebra) -> str:
    return json.dumps(to_document(a), separators=(",", ":"), ensure_ascii=False)


def load(path) -> Algebra:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())


def save(a: Algebra, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize(a) + "\n")


def sl2() -> Algebra:
    return Algebra.from_brackets("sl2", ["h", "e", "f"], {
        ("h", "e"): [0, 2, 0],
        ("h", "f"): [0, 0, -2],
        ("e", "f"): [1, 0, 0],
    })


def cross3() -> Algebra:
    """R^3 with the cross product (so(3) over the rationals)."""
    return Algebra.from_brackets("cross3", ["e1", "e2", "e3"], {
        ("e1", "e2"): [0, 0, 1],
        ("e2", "e3"): [1, 0, 0],
        ("e3", "e1"): [0, 1, 0],
    })


def heisenberg3() -> Algebra:
    return Algebra.from_brackets("heisenberg3", ["x", "y", "z"], {("x", "y"): [0, 0, 1]})


def m7() -> Algebra:
    """Imaginary octonions under the commutator [x, y] = xy - yx."""
    brackets = {}
    for i, j, k in FANO_TRIPLES:
        for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
            brackets[(a - 1, b - 1)] = vscale(2, unit_vector(7, c - 1))
    return Algebra.from_brackets("M7", [f"e{k}" for k in range(1, 8)], brackets)


def solv4() -> Algebra:
    """Four-dimensional solvable Malcev algebra that is not Lie."""
    return Algebra.from_brackets("solv4", ["e1", "e2", "e3", "e4"], {
        ("e1", "e2"): [0, 1, 0, 0],
        ("e1", "e3"): [0, 0, 1, 0],
        ("e1", "e4"): [0, 0, 0, -1],
        ("e2", "e3"): [0, 0, 0, 2],
    })


@lru_cache(maxsize=None)
def _build() -> tuple:
    return (
        Algebra.abelian(1),
        Algebra.abelian(2),
        Algebra.abelian(3),
        sl2(),
        cross3(),
        heisenberg3(),
        m7(),
        solv4(),
        direct_sum(sl2(), m7(), name="sl2_plus_M7"),
    )


def catalog() -> list:
    return list(_build())


def names() -> list:
    return [a.name for a in _build()]


def get(name: str) -> Algebra:
    for a in _build():
        if a.name == name:
            return a
    raise KeyError(f"no catalog algebra named {name!r}; known: {', '.join(names())}")
