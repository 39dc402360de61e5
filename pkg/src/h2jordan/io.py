"""JSON file formats for algebras and graded bracket data.

Scalars are strings in the field's grammar.  Output is canonical: fixed key
order and one table entry per line, so identical objects give identical
bytes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field

from .algebra import Algebra, NoUnit
from .fields import FieldError, FieldSpec
from .graded import CONVENTIONS, GradedBracketAlgebra, GradingError
from .h2 import LinearMap

ALGEBRA_FORMAT = "h2jordan-algebra"
BRACKET_FORMAT = "h2jordan-bracket"
VERSION = 1


class ParseError(ValueError):
    pass


@dataclass
class AlgebraFile:
    """An algebra plus optional named linear maps (e.g. an involution)."""

    algebra: Algebra
    maps: dict = dc_field(default_factory=dict)

    def __eq__(self, other):
        if not isinstance(other, AlgebraFile):
            return NotImplemented
        a, b = self.algebra, other.algebra
        return (a.same_structure(b) and a.basis_names == b.basis_names and a.unit == b.unit
                and a.name == b.name and a.named == b.named and self.maps == other.maps)


# writing

def _vec(F, v):
    return [F.format(F(c)) for c in v]


def _sparse(F, table):
    """[[i, j, [[k, "c"], ...]], ...] sorted by (i, j), zero rows dropped."""
    out = []
    for (i, j) in sorted(table):
        terms = [[k, F.format(F(c))] for k, c in enumerate(table[(i, j)]) if F(c)]
        if terms:
            out.append([i, j, terms])
    return out


def _structure_rows(A: Algebra):
    F = A.field
    return [[i, j, [[k, F.format(c)] for k, c in terms]]
            for (i, j), terms in sorted(A.structure.items())]


def _dump(doc: dict, listy=("products", "b00", "b01", "b11")) -> str:
    lines = ["{"]
    keys = list(doc)
    for n, key in enumerate(keys):
        val = doc[key]
        end = "," if n < len(keys) - 1 else ""
        k = json.dumps(key)
        if key in listy and isinstance(val, list) and val:
            lines.append(f"  {k}: [")
            for m, row in enumerate(val):
                sep = "," if m < len(val) - 1 else ""
                lines.append("    " + json.dumps(row, ensure_ascii=False) + sep)
            lines.append("  ]" + end)
        elif isinstance(val, dict) and val:
            lines.append(f"  {k}: {{")
            items = sorted(val.items())
            for m, (name, v) in enumerate(items):
                sep = "," if m < len(items) - 1 else ""
                lines.append(f"    {json.dumps(name)}: {json.dumps(v, ensure_ascii=False)}{sep}")
            lines.append("  }" + end)
        else:
            lines.append(f"  {k}: {json.dumps(val, ensure_ascii=False)}{end}")
    lines.append("}")
    return "\n".join(lines) + "\n"


def dump_algebra(A: Algebra, maps=None) -> str:
    F = A.field
    doc = {
        "format": ALGEBRA_FORMAT,
        "version": VERSION,
        "name": A.name,
        "field": F.name,
        "dim": A.dim,
        "basis": list(A.basis_names),
        "unit": _vec(F, A.unit.coords) if A.unit is not None else None,
        "products": _structure_rows(A),
        "elements": {k: _vec(F, v.coords) for k, v in A.named.items()},
    }
    if maps:
        doc["maps"] = {k: [_vec(F, img) for img in m.images] for k, m in maps.items()}
    return _dump(doc)


def dump_bracket(S: GradedBracketAlgebra) -> str:
    A, F = S.algebra, S.field
    doc = {
        "format": BRACKET_FORMAT,
        "version": VERSION,
        "field": F.name,
        "s0_dim": S.even_dim,
        "s1_dim": S.odd_dim,
        "basis": list(A.basis_names),
        "unit": _vec(F, A.unit.coords) if A.unit is not None else None,
        "convention": S.convention,
        "epsilon": F.format(S.epsilon) if S.epsilon is not None else None,
        "products": _structure_rows(A),
        "b00": _sparse(F, S.b00()),
        "b01": _sparse(F, S.b01()),
    }
    if S.total:
        doc["b11"] = _sparse(F, S.b11())
    return _dump(doc)


# reading

def _need(doc, key, kind):
    if key not in doc:
        raise ParseError(f"missing key {key!r}")
    val = doc[key]
    if not isinstance(val, kind) or (kind is int and isinstance(val, bool)):
        raise ParseError(f"{key!r} has the wrong type")
    return val


def _load_json(text: str, fmt: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise ParseError("top level must be an object")
    if doc.get("format") != fmt:
        raise ParseError(f"expected format {fmt!r}, got {doc.get('format')!r}")
    if doc.get("version") != VERSION:
        raise ParseError(f"unsupported version {doc.get('version')!r}")
    return doc


def _field(doc) -> FieldSpec:
    try:
        return FieldSpec.from_name(_need(doc, "field", str))
    except FieldError as exc:
        raise ParseError(str(exc)) from None


def _scalar(F, s):
    if not isinstance(s, str):
        raise ParseError(f"scalar {s!r} must be a string")
    try:
        return F.parse(s)
    except FieldError as exc:
        raise ParseError(str(exc)) from None


def _parse_vec(F, v, n, what):
    if not isinstance(v, list) or len(v) != n:
        raise ParseError(f"{what} must be a list of {n} scalars")
    return tuple(_scalar(F, s) for s in v)


def _parse_table(F, rows, n, what, dense=False):
    if not isinstance(rows, list):
        raise ParseError(f"{what} must be a list")
    table = {}
    for row in rows:
        if (not isinstance(row, list) or len(row) != 3 or not all(
                isinstance(x, int) and not isinstance(x, bool) for x in row[:2])
                or not isinstance(row[2], list)):
            raise ParseError(f"bad {what} entry {row!r}")
        i, j, terms = row
        if not (0 <= i < n and 0 <= j < n):
            raise ParseError(f"{what} index ({i}, {j}) out of range")
        if (i, j) in table:
            raise ParseError(f"duplicate {what} entry ({i}, {j})")
        acc = {}
        for term in terms:
            if (not isinstance(term, list) or len(term) != 2 or not isinstance(term[0], int)
                    or isinstance(term[0], bool)):
                raise ParseError(f"bad term {term!r} in {what} ({i}, {j})")
            k, c = term
            if not 0 <= k < n:
                raise ParseError(f"{what} output index {k} out of range")
            if k in acc:
                raise ParseError(f"repeated output index {k} in {what} ({i}, {j})")
            acc[k] = _scalar(F, c)
        if dense:
            table[(i, j)] = tuple(acc.get(k, F.zero()) for k in range(n))
        else:
            table[(i, j)] = sorted(acc.items())
    return table


def _basis(doc, n):
    names = _need(doc, "basis", list)
    if len(names) != n or not all(isinstance(x, str) for x in names):
        raise ParseError(f"basis must list {n} names")
    if len(set(names)) != n:
        raise ParseError("basis names must be distinct")
    return names


def _algebra(F, doc, n, name=""):
    names = _basis(doc, n)
    products = _parse_table(F, _need(doc, "products", list), n, "products")
    unit = doc.get("unit")
    unit = None if unit is None else _parse_vec(F, unit, n, "unit")
    try:
        return Algebra(F, n, products, names, unit, name)
    except NoUnit as exc:
        raise ParseError(str(exc)) from None


def parse_algebra(text: str) -> AlgebraFile:
    doc = _load_json(text, ALGEBRA_FORMAT)
    F = _field(doc)
    n = _need(doc, "dim", int)
    if n < 1:
        raise ParseError("dim must be positive")
    name = doc.get("name", "")
    if not isinstance(name, str):
        raise ParseError("'name' must be a string")
    A = _algebra(F, doc, n, name)
    elements = doc.get("elements", {})
    if not isinstance(elements, dict):
        raise ParseError("'elements' must be an object")
    A.named.update({k: A.element(_parse_vec(F, v, n, f"element {k!r}"))
                    for k, v in elements.items()})
    maps = {}
    raw_maps = doc.get("maps", {})
    if not isinstance(raw_maps, dict):
        raise ParseError("'maps' must be an object")
    for k, rows in raw_maps.items():
        if not isinstance(rows, list) or len(rows) != n:
            raise ParseError(f"map {k!r} needs {n} image vectors")
        maps[k] = LinearMap(F, [_parse_vec(F, r, n, f"map {k!r}") for r in rows], n)
    return AlgebraFile(A, maps)


def parse_bracket(text: str) -> GradedBracketAlgebra:
    doc = _load_json(text, BRACKET_FORMAT)
    F = _field(doc)
    d0, d1 = _need(doc, "s0_dim", int), _need(doc, "s1_dim", int)
    if d0 < 0 or d1 < 0 or d0 + d1 < 1:
        raise ParseError("graded dimensions must be nonnegative with a positive sum")
    n = d0 + d1
    A = _algebra(F, doc, n, "S")
    convention = _need(doc, "convention", str)
    if convention not in CONVENTIONS:
        raise ParseError(f"convention must be one of {CONVENTIONS}")
    eps = doc.get("epsilon")
    eps = None if eps is None else _scalar(F, eps)
    b00 = _parse_table(F, doc.get("b00", []), n, "b00", dense=True)
    b01 = _parse_table(F, doc.get("b01", []), n, "b01", dense=True)
    b11 = doc.get("b11")
    b11 = None if b11 is None else _parse_table(F, b11, n, "b11", dense=True)
    try:
        return GradedBracketAlgebra(A, d0, b00, b01, b11, convention, eps)
    except GradingError as exc:
        raise ParseError(str(exc)) from None


def read_text(path) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except (OSError, UnicodeDecodeError) as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None


def load_algebra(path) -> AlgebraFile:
    return parse_algebra(read_text(path))


def load_bracket(path) -> GradedBracketAlgebra:
    return parse_bracket(read_text(path))


def write_text(path, text: str):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)
