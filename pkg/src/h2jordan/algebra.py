"""Finite-dimensional algebras given by structure constants.

An :class:`Algebra` stores ``b_i b_j = sum_k c_ij^k b_k`` as a sparse map
``(i, j) -> ((k, c), ...)``.  Elements are dense coordinate tuples wrapped in
:class:`Element`, which supports ``+ - *`` so identities can be written the
way they read on paper.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .fields import FieldSpec
from .linalg import Subspace, solve


class AlgebraMismatch(ValueError):
    pass


class NoUnit(ValueError):
    pass


@dataclass(frozen=True)
class Report:
    """Outcome of one certification check.

    ``witness`` names the offending basis tuple on failure and ``residual``
    is the nonzero value found there.
    """

    name: str
    passed: bool
    witness: tuple | None = None
    residual: object = None
    checked: int = 0
    detail: str = ""

    def __bool__(self):
        return self.passed

    def line(self) -> str:
        s = f"{self.name}: {'PASS' if self.passed else 'FAIL'}"
        if self.witness is not None:
            s += " at (" + ", ".join(str(w) for w in self.witness) + ")"
        if self.residual is not None:
            s += f" residual {self.residual}"
        if self.detail:
            s += f" [{self.detail}]"
        return s


class Element:
    __slots__ = ("algebra", "coords")

    def __init__(self, algebra: Algebra, coords):
        self.algebra = algebra
        self.coords = tuple(coords)

    def _same(self, other):
        if not isinstance(other, Element):
            return False
        if other.algebra is not self.algebra and not self.algebra.compatible(other.algebra):
            raise AlgebraMismatch("elements of different algebras")
        return True

    def __add__(self, other):
        if not self._same(other):
            return NotImplemented
        return Element(self.algebra, (a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        if not self._same(other):
            return NotImplemented
        return Element(self.algebra, (a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return Element(self.algebra, (-a for a in self.coords))

    def __mul__(self, other):
        if isinstance(other, Element):
            self._same(other)
            return Element(self.algebra, self.algebra.mul_coords(self.coords, other.coords))
        c = self.algebra.field(other)
        return Element(self.algebra, (c * a for a in self.coords))

    def __rmul__(self, other):
        c = self.algebra.field(other)
        return Element(self.algebra, (c * a for a in self.coords))

    def __truediv__(self, other):
        field = self.algebra.field
        return self * field.invert(field(other))

    def __eq__(self, other):
        if isinstance(other, Element):
            return self.coords == other.coords and self.algebra.dim == other.algebra.dim
        if other == 0:
            return not any(self.coords)
        return NotImplemented

    def __hash__(self):
        return hash(self.coords)

    def __bool__(self):
        return any(self.coords)

    def __repr__(self):
        terms = []
        fmt = self.algebra.field.format
        for name, c in zip(self.algebra.basis_names, self.coords):
            if not c:
                continue
            s = fmt(c)
            terms.append(name if s == "1" else f"-{name}" if s == "-1" else f"({s})*{name}")
        return " + ".join(terms) if terms else "0"


class Algebra:
    def __init__(self, field: FieldSpec, dim: int, structure, basis_names=None,
                 unit=None, name: str = "", elements=None):
        if dim < 1:
            raise ValueError("an algebra needs positive dimension")
        self.field = field
        self.dim = dim
        self.name = name
        self.basis_names = tuple(basis_names) if basis_names else tuple(f"b{i}" for i in range(dim))
        if len(self.basis_names) != dim:
            raise ValueError("wrong number of basis names")
        items = structure.items() if hasattr(structure, "items") else structure
        clean = {}
        for (i, j), terms in items:
            if not (0 <= i < dim and 0 <= j < dim):
                raise IndexError(f"product index ({i}, {j}) out of range")
            acc = {}
            for k, c in terms:
                if not 0 <= k < dim:
                    raise IndexError(f"output index {k} out of range")
                acc[k] = acc.get(k, field.zero()) + field(c)
            row = tuple(sorted((k, c) for k, c in acc.items() if c))
            if row:
                clean[(i, j)] = row
        self.structure = clean
        self._table = [[clean.get((i, j), ()) for j in range(dim)] for i in range(dim)]
        self.unit = None
        if unit is not None:
            u = self.element(unit)
            for b in self.basis():
                if u * b != b or b * u != b:
                    raise NoUnit(f"declared unit {u} fails on {b}")
            self.unit = u
        self.named = {k: self.element(v) for k, v in (elements or {}).items()}

    # construction helpers
    @classmethod
    def from_function(cls, field, names, product, unit=None, name="", elements=None):
        """Build from ``product(i, j) -> coords`` on basis indices."""
        n = len(names)
        structure = {}
        for i in range(n):
            for j in range(n):
                structure[(i, j)] = [(k, c) for k, c in enumerate(product(i, j)) if c]
        return cls(field, n, structure, names, unit, name, elements)

    def compatible(self, other: Algebra) -> bool:
        return self.dim == other.dim and self.field == other.field

    def element(self, coords) -> Element:
        if isinstance(coords, Element):
            coords = coords.coords
        coords = tuple(self.field(c) for c in coords)
        if len(coords) != self.dim:
            raise AlgebraMismatch(f"expected {self.dim} coordinates, got {len(coords)}")
        return Element(self, coords)

    def zero(self) -> Element:
        return Element(self, (self.field.zero(),) * self.dim)

    def one(self) -> Element:
        if self.unit is None:
            raise NoUnit(f"{self.name or 'algebra'} has no declared unit")
        return self.unit

    def basis(self, i=None):
        if i is None:
            return [self.basis(k) for k in range(self.dim)]
        zero, one = self.field.zero(), self.field.one()
        return Element(self, (one if k == i else zero for k in range(self.dim)))

    def __getitem__(self, key) -> Element:
        """Basis element by index or name; named elements take precedence."""
        if isinstance(key, str):
            if key in self.named:
                return self.named[key]
            if key in ("1", "unit"):
                return self.one()
            return self.basis(self.basis_names.index(key))
        return self.basis(key)

    # arithmetic
    def mul_coords(self, x, y):
        out = [self.field.zero()] * self.dim
        table = self._table
        nz_y = [(j, b) for j, b in enumerate(y) if b]
        for i, a in enumerate(x):
            if not a:
                continue
            row = table[i]
            for j, b in nz_y:
                terms = row[j]
                if terms:
                    ab = a * b
                    for k, c in terms:
                        out[k] = out[k] + ab * c
        return tuple(out)

    def _check(self, *xs):
        for x in xs:
            if not isinstance(x, Element) or (x.algebra is not self and not self.compatible(x.algebra)):
                raise AlgebraMismatch(f"{x!r} is not an element of this algebra")

    def multiply(self, x: Element, y: Element) -> Element:
        self._check(x, y)
        return Element(self, self.mul_coords(x.coords, y.coords))

    def associator(self, x: Element, y: Element, z: Element) -> Element:
        self._check(x, y, z)
        return (x * y) * z - x * (y * z)

    def commutator(self, x: Element, y: Element) -> Element:
        self._check(x, y)
        return x * y - y * x

    def right_matrix(self, y) -> list:
        """Matrix M with M x = x*y in coordinates (column convention)."""
        y = y.coords if isinstance(y, Element) else tuple(y)
        cols = [self.mul_coords(self.basis(i).coords, y) for i in range(self.dim)]
        return [list(r) for r in zip(*cols)]

    def left_matrix(self, x) -> list:
        x = x.coords if isinstance(x, Element) else tuple(x)
        cols = [self.mul_coords(x, self.basis(i).coords) for i in range(self.dim)]
        return [list(r) for r in zip(*cols)]

    def same_structure(self, other: Algebra) -> bool:
        return self.compatible(other) and self.structure == other.structure

    def with_constant(self, i: int, j: int, k: int, delta) -> Algebra:
        """Copy with c_ij^k shifted by ``delta`` (unit dropped); used for tampering."""
        structure = {key: list(v) for key, v in self.structure.items()}
        structure.setdefault((i, j), []).append((k, self.field(delta)))
        return Algebra(self.field, self.dim, structure, self.basis_names,
                       name=f"{self.name}~tampered",
                       elements={k: v.coords for k, v in self.named.items()})

    def __repr__(self):
        return f"Algebra({self.name or '?'}, dim={self.dim}, field={self.field})"


def plus_algebra(A: Algebra, name: str | None = None) -> Algebra:
    """The Jordan algebra on A with product (xy + yx)/2."""
    half = A.field.invert(A.field(2))

    def prod(i, j):
        return tuple(half * (a + b) for a, b in zip(A.mul_coords(A.basis(i).coords, A.basis(j).coords),
                                                      A.mul_coords(A.basis(j).coords, A.basis(i).coords)))

    unit = A.unit.coords if A.unit is not None else None
    return Algebra.from_function(A.field, A.basis_names, prod, unit,
                                 name or f"{A.name}+")


def is_commutative(A: Algebra) -> Report:
    zero = A.field.zero()
    for i in range(A.dim):
        for j in range(i + 1, A.dim):
            a = dict(A.structure.get((i, j), ()))
            b = dict(A.structure.get((j, i), ()))
            for k in sorted(set(a) | set(b)):
                if a.get(k, zero) != b.get(k, zero):
                    return Report("commutative", False,
                                  (A.basis_names[i], A.basis_names[j], A.basis_names[k]),
                                  A.field.format(a.get(k, zero) - b.get(k, zero)))
    return Report("commutative", True, checked=A.dim * (A.dim - 1) // 2)


def jordan_residual(x: Element, y: Element, z: Element, t: Element) -> Element:
    """(zt,x,y) + (yz,x,t) + (yt,x,z), the linearized Jordan identity."""
    A = x.algebra
    return (A.associator(z * t, x, y) + A.associator(y * z, x, t)
            + A.associator(y * t, x, z))


def is_jordan(A: Algebra) -> Report:
    comm = is_commutative(A)
    if not comm:
        return Report("jordan", False, comm.witness, comm.residual, detail="not commutative")
    b = A.basis()
    count = 0
    # the residual is symmetric in (y, z, t), so sorted triples cover every quadruple
    for x in range(A.dim):
        for y, z, t in itertools.combinations_with_replacement(range(A.dim), 3):
            r = jordan_residual(b[x], b[y], b[z], b[t])
            count += 1
            if r:
                names = A.basis_names
                return Report("jordan", False, (names[z], names[t], names[x], names[y]), r)
    return Report("jordan", True, checked=count)


def is_associative(A: Algebra) -> Report:
    b = A.basis()
    for i, j, k in itertools.product(range(A.dim), repeat=3):
        r = A.associator(b[i], b[j], b[k])
        if r:
            names = A.basis_names
            return Report("associative", False, (names[i], names[j], names[k]), r)
    return Report("associative", True, checked=A.dim ** 3)


def find_unit(A: Algebra) -> Element:
    """Solve u*b_j = b_j = b_j*u for the two-sided unit."""
    n = A.dim
    rows, rhs = [], []
    zero, one = A.field.zero(), A.field.one()
    for j in range(n):
        left = [A.mul_coords(A.basis(i).coords, A.basis(j).coords) for i in range(n)]
        right = [A.mul_coords(A.basis(j).coords, A.basis(i).coords) for i in range(n)]
        for k in range(n):
            target = one if k == j else zero
            rows.append([left[i][k] for i in range(n)])
            rhs.append(target)
            rows.append([right[i][k] for i in range(n)])
            rhs.append(target)
    u = solve(rows, rhs, A.field, n)
    if u is None:
        raise NoUnit("no two-sided unit")
    return A.element(u)


def span_closure(A: Algebra, gens) -> Subspace:
    """Smallest subspace containing ``gens`` and closed under the product."""
    space = Subspace.span(A.field, A.dim, [g.coords for g in gens])
    while True:
        basis = space.basis
        new = [A.mul_coords(a, b) for a in basis for b in basis]
        grown = Subspace.span(A.field, A.dim, list(basis) + new)
        if grown.dim == space.dim:
            return space
        space = grown


def pchelintsev_k(x: Element, y: Element, z: Element, t: Element) -> Element:
    """k(x,y;z,t) = (xy,z,t) - (x,z,t)y - x(y,z,t)."""
    A = x.algebra
    return A.associator(x * y, z, t) - A.associator(x, z, t) * y - x * A.associator(y, z, t)


def random_element(A: Algebra, rng: random.Random, bound: int = 5) -> Element:
    field = A.field
    if field.kind == "gaussian_rational":
        from .fields import GaussianRational
        return A.element(GaussianRational(rng.randint(-bound, bound), rng.randint(-bound, bound))
                         for _ in range(A.dim))
    return A.element(rng.randint(-bound, bound) for _ in range(A.dim))
