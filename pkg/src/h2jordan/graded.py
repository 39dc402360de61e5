"""Z2-graded Jordan algebras carrying a partial odd bracket, and the tensor
construction H2(F) (x) S0 + Fk (x) S1 built from them.

The graded algebra S has basis S0 followed by S1.  Brackets are stored as
dense tables indexed by basis pairs; an entry is ``None`` exactly on the
S1 x S1 slot when the bracket is partial.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .algebra import Algebra, Report

RAW = "raw"
RESCALED = "epsilon_rescaled"
CONVENTIONS = (RAW, RESCALED)


class WrongConvention(ValueError):
    pass


class BadEpsilon(ValueError):
    pass


class GradingError(ValueError):
    pass


class MissingBracketSlot(ValueError):
    pass


@dataclass(frozen=True)
class Suite:
    """A named list of reports; passes when every report passes."""

    name: str
    reports: tuple

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.reports)

    def __bool__(self):
        return self.passed

    def __getitem__(self, name) -> Report:
        for r in self.reports:
            if r.name == name:
                return r
        raise KeyError(name)

    def lines(self):
        return [r.line() for r in self.reports]


class GradedBracketAlgebra:
    """S = S0 + S1 with Jordan product ``algebra`` and a partial odd bracket.

    ``b00`` maps (i, j) with i, j < even_dim to a vector in S1, ``b01`` maps
    (i, j) with i < even_dim <= j to a vector in S0 and the optional ``b11``
    maps odd pairs to S1.  Missing keys mean zero.  Vectors are coordinate
    sequences over the full basis of S.
    """

    def __init__(self, algebra: Algebra, even_dim: int, b00=None, b01=None, b11=None,
                 convention: str = RAW, epsilon=None):
        if convention not in CONVENTIONS:
            raise WrongConvention(f"unknown convention {convention!r}")
        if not 0 <= even_dim <= algebra.dim:
            raise GradingError("even_dim out of range")
        self.algebra = algebra
        self.field = algebra.field
        self.even_dim = even_dim
        self.odd_dim = algebra.dim - even_dim
        self.convention = convention
        self.epsilon = None if epsilon is None else self.field(epsilon)
        self.total = b11 is not None
        n, d0 = algebra.dim, even_dim
        zero = (self.field.zero(),) * n
        table = [[None] * n for _ in range(n)]

        def put(src, rows, cols, target_parity, label):
            src = dict(src or {})
            for key in src:
                i, j = key
                if i not in rows or j not in cols:
                    raise GradingError(f"{label} key {key} outside its grading slot")
            for i in rows:
                for j in cols:
                    v = tuple(self.field(c) for c in src.get((i, j), zero))
                    if len(v) != n:
                        raise GradingError(f"{label}[{i},{j}] has wrong length")
                    if not self._in_part(v, target_parity):
                        raise GradingError(f"{label}[{i},{j}] leaves S{target_parity}")
                    table[i][j] = v

        evens, odds = range(d0), range(d0, n)
        put(b00, evens, evens, 1, "b00")
        put(b01, evens, odds, 0, "b01")
        for i in evens:
            for j in odds:
                table[j][i] = tuple(-c for c in table[i][j])
        if b11 is not None:
            put(b11, odds, odds, 1, "b11")
        self._br = table
        for i in range(n):
            for j in range(i, n):
                a, b = table[i][j], table[j][i]
                if a is None:
                    continue
                if any(x + y for x, y in zip(a, b)):
                    raise GradingError(f"bracket is not anticommutative at ({i}, {j})")
        for i in range(n):
            for j in range(n):
                p = self.parity(i) ^ self.parity(j)
                if not self._in_part(algebra.mul_coords(algebra.basis(i).coords,
                                                        algebra.basis(j).coords), p):
                    raise GradingError(f"product of basis {i}, {j} breaks the grading")

    def parity(self, i: int) -> int:
        return 0 if i < self.even_dim else 1

    def _in_part(self, v, parity) -> bool:
        rng = range(self.even_dim, len(v)) if parity == 0 else range(self.even_dim)
        return not any(v[k] for k in rng)

    @property
    def dim(self) -> int:
        return self.algebra.dim

    def bracket_entry(self, i: int, j: int):
        """Bracket of basis vectors i, j (a coordinate tuple), or None if undefined."""
        return self._br[i][j]

    def b00(self) -> dict:
        return {(i, j): self._br[i][j] for i in range(self.even_dim) for j in range(self.even_dim)}

    def b01(self) -> dict:
        return {(i, j): self._br[i][j] for i in range(self.even_dim)
                for j in range(self.even_dim, self.dim)}

    def b11(self) -> dict | None:
        if not self.total:
            return None
        return {(i, j): self._br[i][j] for i in range(self.even_dim, self.dim)
                for j in range(self.even_dim, self.dim)}

    def bracket_coords(self, x, y):
        """Bilinear extension; raises MissingBracketSlot on an odd-odd pair without b11."""
        out = [self.field.zero()] * self.dim
        for i, a in enumerate(x):
            if not a:
                continue
            for j, b in enumerate(y):
                if not b:
                    continue
                v = self._br[i][j]
                if v is None:
                    raise MissingBracketSlot("bracket of two odd elements is undefined")
                ab = a * b
                for k, c in enumerate(v):
                    if c:
                        out[k] = out[k] + ab * c
        return tuple(out)

    def even_algebra(self) -> Algebra:
        """S0 as an algebra in its own right (unit included when S has one)."""
        d0, A = self.even_dim, self.algebra
        if d0 == 0:
            raise GradingError("S0 is zero")
        structure = {(i, j): [(k, c) for k, c in A.structure.get((i, j), ()) if k < d0]
                     for i in range(d0) for j in range(d0)}
        unit = A.unit.coords[:d0] if A.unit is not None else None
        return Algebra(self.field, d0, structure, A.basis_names[:d0], unit, name="S0")

    @property
    def is_zero_bracket(self) -> bool:
        return not any(v is not None and any(v) for row in self._br for v in row)

    def replace(self, **changes) -> GradedBracketAlgebra:
        args = dict(algebra=self.algebra, even_dim=self.even_dim, b00=self.b00(),
                    b01=self.b01(), b11=self.b11(), convention=self.convention,
                    epsilon=self.epsilon)
        args.update(changes)
        return GradedBracketAlgebra(**args)

    def with_bracket_entry(self, i: int, j: int, vec) -> GradedBracketAlgebra:
        """Copy with {b_i, b_j} replaced (and {b_j, b_i} set to its negative)."""
        tables = {"b00": self.b00(), "b01": self.b01(), "b11": self.b11()}
        vec = tuple(self.field(c) for c in vec)
        neg = tuple(-c for c in vec)
        pi, pj = self.parity(i), self.parity(j)
        if pi == pj == 0:
            tables["b00"][(i, j)], tables["b00"][(j, i)] = vec, neg
        elif pi == pj == 1:
            if tables["b11"] is None:
                raise MissingBracketSlot("no odd-odd bracket to modify")
            tables["b11"][(i, j)], tables["b11"][(j, i)] = vec, neg
        elif pi == 0:
            tables["b01"][(i, j)] = vec
        else:
            tables["b01"][(j, i)] = neg
        return self.replace(**tables)

    def __eq__(self, other):
        if not isinstance(other, GradedBracketAlgebra):
            return NotImplemented
        return (self.algebra.same_structure(other.algebra)
                and self.algebra.unit == other.algebra.unit
                and self.even_dim == other.even_dim and self._br == other._br
                and self.convention == other.convention and self.epsilon == other.epsilon)

    __hash__ = None

    def __repr__(self):
        return (f"GradedBracketAlgebra(dims=({self.even_dim}, {self.odd_dim}), "
                f"{self.convention}, total={self.total}, field={self.field})")


def rescale_bracket(S: GradedBracketAlgebra, eps) -> GradedBracketAlgebra:
    """Multiply every bracket by eps (eps^2 = -1), switching to the rescaled convention."""
    eps = S.field(eps)
    if eps * eps != S.field(-1):
        raise BadEpsilon(f"{S.field.format(eps)} squared is not -1")
    if S.convention != RAW:
        raise WrongConvention("bracket is already rescaled")

    def scale(table):
        if table is None:
            return None
        return {key: tuple(eps * c for c in v) for key, v in table.items()}

    return S.replace(b00=scale(S.b00()), b01=scale(S.b01()), b11=scale(S.b11()),
                     convention=RESCALED, epsilon=eps)


# identity verification

class _Skip(Exception):
    pass


class _G:
    """Homogeneous element of S, tracked with its parity."""

    __slots__ = ("S", "v", "p")

    def __init__(self, S, v, p):
        self.S, self.v, self.p = S, v, p

    def __add__(self, o):
        return _G(self.S, tuple(a + b for a, b in zip(self.v, o.v)), self.p)

    def __sub__(self, o):
        return _G(self.S, tuple(a - b for a, b in zip(self.v, o.v)), self.p)

    def __mul__(self, o):
        if isinstance(o, _G):
            return _G(self.S, self.S.algebra.mul_coords(self.v, o.v), self.p ^ o.p)
        c = self.S.field(o)
        return _G(self.S, tuple(c * a for a in self.v), self.p)

    __rmul__ = __mul__


def _br(a: _G, b: _G) -> _G:
    if a.p == 1 and b.p == 1 and not a.S.total:
        raise _Skip
    return _G(a.S, a.S.bracket_coords(a.v, b.v), a.p ^ b.p ^ 1)


def _assoc(x, y, z):
    return (x * y) * z - x * (y * z)


def _families(sigma: int, rescaled: bool):
    """(name, slot parities or None for any, residual function)."""
    E, O = (0,), (1,)
    ANY = None

    def assoc_bracket(x, y, z):
        if rescaled:
            return _assoc(x, y, z) - 4 * _br(y, _br(x, z))
        return _assoc(x, y, z) - 4 * _br(_br(x, z), y)

    main = [
        ("associator-bracket", (ANY, ANY, ANY), assoc_bracket),
        ("leibniz", (ANY, ANY, ANY),
         lambda x, y, z: _br(x * y, z) - x * _br(y, z) - y * _br(x, z)),
        ("leibniz-right", (ANY, ANY, ANY),
         lambda x, y, z: _br(x * y, z) - _br(y, x * z) - _br(x, y * z)),
        ("three-term", (E, E, O, O),
         lambda z, u, m, n: _assoc(_br(z, u), m, n) + _assoc(_br(u, n), m, z)
         + _assoc(_br(n, z), m, u)),
    ]
    cross = [
        ("even-anticommutative", (E, E), lambda z, v: _br(z, v) + _br(v, z)),
        ("even-square-derivation", (E, E, E),
         lambda z, v, w: _br(z, v * w) - v * _br(z, w) - w * _br(z, v)),
        ("even-square-shift", (E, E, E),
         lambda z, v, w: _br(z, v * w) - _br(z * v, w) - _br(z * w, v)),
        ("mixed-derivation", (E, E, O),
         lambda z, w, n: z * _br(w, n) + w * _br(z, n) - _br(z * w, n)),
        ("mixed-shift", (E, E, O),
         lambda z, w, n: _br(z, w * n) + _br(w, z * n) - _br(z * w, n)),
        ("odd-square", (E, O, O),
         lambda z, n, m: _br(z, n * m) - n * _br(z, m) - m * _br(z, n)),
        ("even-double-bracket", (E, E, E),
         lambda u, v, w: _assoc(u, w, v) + sigma * 4 * _br(w, _br(u, v))),
        ("mixed-double-bracket", (E, E, O),
         lambda u, w, n: _assoc(u, w, n) + sigma * 4 * _br(w, _br(u, n))),
        ("odd-double-bracket", (E, O, O),
         lambda u, m, n: _assoc(u, n, m) - sigma * 4 * _br(_br(u, m), n)),
        ("module-shift", (E, E, O),
         lambda w, u, n: _br(w, u * n) - _br(u * w, n) - _br(n * w, u)),
        ("module-derivation", (E, E, O),
         lambda w, u, n: _br(w, u * n) - u * _br(w, n) - n * _br(w, u)),
        ("odd-shift", (O, O, O),
         lambda k, m, n: _br(k, m * n) - _br(k * m, n) - _br(k * n, m)),
    ]
    return main, cross


def verify_bracket_identities(S: GradedBracketAlgebra, cross_checks: bool = True) -> Suite:
    """Check the bracket identities exhaustively on basis tuples.

    Instantiations whose bracket chain needs the undefined odd-odd slot are
    skipped.  The first four families are the defining identities; the rest
    are the multilinear forms of the product/bracket relations they imply.
    """
    rescaled = S.convention == RESCALED
    main, cross = _families(-1 if rescaled else 1, rescaled)
    families = main + (cross if cross_checks else [])
    basis = [_G(S, S.algebra.basis(i).coords, S.parity(i)) for i in range(S.dim)]
    names = S.algebra.basis_names
    reports = []
    for name, slots, fn in families:
        choices = [[b for b in basis if s is None or b.p in s] for s in slots]
        checked, failure = 0, None
        for args in itertools.product(*choices):
            try:
                r = fn(*args)
            except _Skip:
                continue
            checked += 1
            if any(r.v):
                idx = [basis.index(a) for a in args]
                failure = (tuple(names[i] for i in idx), S.algebra.element(r.v))
                break
        if failure:
            reports.append(Report(name, False, failure[0], failure[1], checked))
        else:
            reports.append(Report(name, True, checked=checked))
    return Suite("bracket-identities", tuple(reports))


# M2(F) on the basis e = e11, f = e22, h = e12 + e21, k = e12 - e21

M2_NAMES = ("e", "f", "h", "k")


def _m2_coords(mat, field):
    (a, b), (c, d) = mat
    half = field.invert(field(2))
    return (a, d, half * (b + c), half * (b - c))


def _m2_matrix(coords, field):
    e, f, h, k = coords
    return ((e, h + k), (h - k, f))


def m2(field) -> Algebra:
    """Associative M2(F) on the basis (e, f, h, k)."""
    one, zero = field.one(), field.zero()

    def prod(i, j):
        a = _m2_matrix(tuple(one if t == i else zero for t in range(4)), field)
        b = _m2_matrix(tuple(one if t == j else zero for t in range(4)), field)
        c = tuple(tuple(a[r][0] * b[0][s] + a[r][1] * b[1][s] for s in range(2)) for r in range(2))
        return _m2_coords(c, field)

    return Algebra.from_function(field, M2_NAMES, prod, unit=(1, 1, 0, 0), name="M2")


def build_tensor_algebra(S: GradedBracketAlgebra, name: str = "") -> Algebra:
    """H2(F) (x) S0 + Fk (x) S1 with (a x)(b y) = a.b (x) xy + [a,b] (x) {x,y}.

    Basis order: e-block, f-block, h-block over S0, then the k-block over S1.
    """
    F = S.field
    M = m2(F)
    half = F.invert(F(2))
    d0, n = S.even_dim, S.dim
    mb = M.basis()
    jord = [[[half * (p + q) for p, q in zip((mb[a] * mb[b]).coords, (mb[b] * mb[a]).coords)]
             for b in range(4)] for a in range(4)]
    comm = [[(mb[a] * mb[b] - mb[b] * mb[a]).coords for b in range(4)] for a in range(4)]

    def index(m, s):
        return m * d0 + s if m < 3 else 3 * d0 + (s - d0)

    slots = [(m, s) for m in range(3) for s in range(d0)] + [(3, s) for s in range(d0, n)]
    names = [f"{M2_NAMES[m]}.{S.algebra.basis_names[s]}" for m, s in slots]
    sb = S.algebra.basis()
    structure = {}
    for p, (a, x) in enumerate(slots):
        for q, (b, y) in enumerate(slots):
            acc = {}
            xy = S.algebra.mul_coords(sb[x].coords, sb[y].coords)
            br = None
            if any(comm[a][b]):
                br = S.bracket_entry(x, y)
                if br is None:
                    raise MissingBracketSlot(f"bracket ({x}, {y}) needed but undefined")
            for coeffs, vec in ((jord[a][b], xy), (comm[a][b], br)):
                for m, c in enumerate(coeffs):
                    if not c:
                        continue
                    for s, v in enumerate(vec):
                        if not v:
                            continue
                        if (m == 3) != (s >= d0):
                            raise GradingError(f"term {M2_NAMES[m]} (x) basis {s} leaves the algebra")
                        r = index(m, s)
                        acc[r] = acc.get(r, F.zero()) + c * v
            structure[(p, q)] = list(acc.items())
    unit = None
    if S.algebra.unit is not None:
        u = [F.zero()] * len(slots)
        for s, c in enumerate(S.algebra.unit.coords[:d0]):
            u[index(0, s)] = c
            u[index(1, s)] = c
        unit = u
    elements = {}
    if unit is not None:
        one_s = S.algebra.unit.coords[:d0]
        e_el = [F.zero()] * len(slots)
        h_el = [F.zero()] * len(slots)
        for s, c in enumerate(one_s):
            e_el[index(0, s)] = c
            h_el[index(2, s)] = c
        elements = {"e": e_el, "h": h_el}
    return Algebra(F, len(slots), structure, names, unit, name or "H2(x)S",
                   elements=elements)

