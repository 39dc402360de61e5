"""Exact Gauss-Jordan elimination over a :class:`FieldSpec`.

Vectors are tuples of field scalars and matrices are lists of rows.  All
eliminations pivot on the leftmost column and take the first row with a
nonzero entry there, so bases come out the same on every run.
"""

from __future__ import annotations

from .fields import FieldSpec


class NotInSubspace(ValueError):
    pass


class SingularMatrix(ValueError):
    pass


def rref(rows, field: FieldSpec, ncols: int | None = None):
    """Reduced row-echelon form.  Returns ``(nonzero_rows, pivot_columns)``."""
    m = [[field(x) for x in r] for r in rows]
    if ncols is None:
        ncols = len(m[0]) if m else 0
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        row = m[r]
        inv = field.invert(row[c])
        if row[c] != 1:
            row = m[r] = [x * inv for x in row]
        nz = [j for j in range(c, ncols) if row[j]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                target = m[i]
                for j in nz:
                    target[j] = target[j] - f * row[j]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return [tuple(x) for x in m[:r]], pivots


def rank(rows, field: FieldSpec, ncols: int | None = None) -> int:
    return len(rref(rows, field, ncols)[1])


def mat_vec(matrix, vec, field: FieldSpec):
    zero = field.zero()
    out = []
    for row in matrix:
        s = zero
        for a, b in zip(row, vec):
            if a and b:
                s = s + field(a) * field(b)
        out.append(s)
    return tuple(out)


def identity_matrix(n: int, field: FieldSpec):
    zero, one = field.zero(), field.one()
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def transpose(matrix):
    return [list(col) for col in zip(*matrix)]


class Subspace:
    """Linear subspace of F^n kept as a reduced row-echelon basis."""

    def __init__(self, field: FieldSpec, n: int, basis=(), _echelon: bool = False):
        self.field = field
        self.n = n
        if _echelon:
            self.basis = tuple(tuple(b) for b in basis)
            self.pivots = [next(j for j, x in enumerate(b) if x) for b in self.basis]
        else:
            rows, pivots = rref(basis, field, n) if basis else ([], [])
            self.basis, self.pivots = tuple(rows), pivots

    @classmethod
    def span(cls, field: FieldSpec, n: int, vectors) -> Subspace:
        return cls(field, n, [tuple(v) for v in vectors])

    @classmethod
    def full(cls, field: FieldSpec, n: int) -> Subspace:
        return cls(field, n, identity_matrix(n, field), _echelon=True)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self):
        return self.dim

    def __iter__(self):
        return iter(self.basis)

    def coordinates(self, vec):
        """Coefficients of ``vec`` on the echelon basis; raises NotInSubspace."""
        vec = tuple(vec)
        coeffs = tuple(vec[p] for p in self.pivots)
        rest = list(vec)
        for c, row in zip(coeffs, self.basis):
            if c:
                for j, x in enumerate(row):
                    if x:
                        rest[j] = rest[j] - c * x
        if any(rest):
            raise NotInSubspace("vector is not in the subspace")
        return coeffs

    def __contains__(self, vec) -> bool:
        try:
            self.coordinates(vec)
        except NotInSubspace:
            return False
        return True

    def combine(self, coeffs):
        zero = self.field.zero()
        out = [zero] * self.n
        for c, row in zip(coeffs, self.basis):
            if c:
                for j, x in enumerate(row):
                    if x:
                        out[j] = out[j] + c * x
        return tuple(out)

    def __add__(self, other: Subspace) -> Subspace:
        return Subspace(self.field, self.n, list(self.basis) + list(other.basis))

    def intersect(self, other: Subspace) -> Subspace:
        # a in both iff a = sum x_i s_i = sum y_j o_j; solve for (x, y)
        if not self.basis or not other.basis:
            return Subspace(self.field, self.n)
        cols = list(self.basis) + [tuple(-x for x in o) for o in other.basis]
        sol = kernel(transpose(cols), self.field, len(cols))
        return Subspace.span(self.field, self.n,
                             [self.combine(s[:self.dim]) for s in sol.basis])

    def contains_subspace(self, other: Subspace) -> bool:
        return all(v in self for v in other.basis)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.n == other.n and self.basis == other.basis

    def __repr__(self):
        return f"Subspace(dim={self.dim}, n={self.n})"


def kernel(matrix, field: FieldSpec, ncols: int | None = None) -> Subspace:
    """Right null space {v : M v = 0}, returned in reduced echelon form."""
    if ncols is None:
        ncols = len(matrix[0])
    rows, pivots = rref(matrix, field, ncols) if matrix else ([], [])
    zero, one = field.zero(), field.one()
    free = [c for c in range(ncols) if c not in set(pivots)]
    vecs = []
    for f in free:
        v = [zero] * ncols
        v[f] = one
        for row, p in zip(rows, pivots):
            if row[f]:
                v[p] = -row[f]
        vecs.append(v)
    return Subspace(field, ncols, vecs)


def solve(matrix, rhs, field: FieldSpec, ncols: int | None = None):
    """One solution x of M x = rhs (free variables set to 0), or None."""
    if ncols is None:
        ncols = len(matrix[0])
    aug = [list(r) + [b] for r, b in zip(matrix, rhs)]
    rows, pivots = rref(aug, field, ncols + 1)
    if pivots and pivots[-1] == ncols:
        return None
    x = [field.zero()] * ncols
    for row, p in zip(rows, pivots):
        x[p] = row[ncols]
    return tuple(x)


def inverse(matrix, field: FieldSpec):
    n = len(matrix)
    aug = [list(r) + e for r, e in zip(matrix, identity_matrix(n, field))]
    rows, pivots = rref(aug, field, 2 * n)
    if pivots[:n] != list(range(n)):
        raise SingularMatrix("matrix is not invertible")
    return [list(r[n:]) for r in rows[:n]]
