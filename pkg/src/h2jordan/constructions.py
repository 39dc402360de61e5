"""Example algebras and the converse constructions.

Covers the shipped corpus (H2(F), M2(F), M2(F)+, H4(F), spin factors), the
hermitian 2x2 matrix algebras H2(A, *), the splitting of an involutive
algebra into a graded bracket algebra, the Cohn envelope going the other
way, bilinear-form algebras, and the M2(F) commutator table.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .algebra import Algebra, Report, is_associative, is_jordan, plus_algebra
from .fields import FieldSpec
from .graded import (RESCALED, GradedBracketAlgebra, MissingBracketSlot, Suite,
                     WrongConvention, build_tensor_algebra, m2)
from .h2 import H2Frame, LinearMap, verify_h2_frame
from .linalg import Subspace, kernel, solve, transpose


class NotInvolutive(ValueError):
    pass


class NotAssociative(ValueError):
    pass


class InvalidFormData(ValueError):
    pass


def _half(F):
    return F.invert(F(2))


# small commutative/associative algebras

def field_algebra(F: FieldSpec) -> Algebra:
    return Algebra(F, 1, {(0, 0): [(0, 1)]}, ["1"], unit=[1], name="F")


def dual_numbers(F: FieldSpec) -> Algebra:
    """F[t]/(t^2) on the basis (1, t)."""
    return Algebra(F, 2, {(0, 0): [(0, 1)], (0, 1): [(1, 1)], (1, 0): [(1, 1)]},
                   ["1", "t"], unit=[1, 0], name="F[t]/t^2")


def split_pair(F: FieldSpec) -> Algebra:
    """F + F on the idempotent basis (p, q)."""
    return Algebra(F, 2, {(0, 0): [(0, 1)], (1, 1): [(1, 1)]}, ["p", "q"],
                   unit=[1, 1], name="F+F")


def h2f(F: FieldSpec) -> Algebra:
    """H2(F) on the basis (e, f, h)."""
    half = _half(F)
    structure = {
        (0, 0): [(0, 1)], (1, 1): [(1, 1)],
        (0, 2): [(2, half)], (2, 0): [(2, half)],
        (1, 2): [(2, half)], (2, 1): [(2, half)],
        (2, 2): [(0, 1), (1, 1)],
    }
    return Algebra(F, 3, structure, ["e", "f", "h"], unit=[1, 1, 0], name="H2(F)",
                   elements={"e": [1, 0, 0], "h": [0, 0, 1]})


def m2_assoc(F: FieldSpec) -> Algebra:
    A = m2(F)
    A.named.update({"e": A["e"], "h": A["h"]})
    return A


def m2_plus(F: FieldSpec) -> tuple[Algebra, H2Frame]:
    J = plus_algebra(m2(F), name="M2(F)+")
    J.named.update({"e": J["e"], "h": J["h"]})
    return J, verify_h2_frame(J, J["e"], J["h"])


def jordan_matrix_algebra(F: FieldSpec, mats, names, elements=None, name="") -> Algebra:
    """Jordan algebra spanned by square matrices closed under (XY + YX)/2."""
    size = len(mats[0])
    flat = [[m[r][c] for r in range(size) for c in range(size)] for m in mats]
    cols = transpose(flat)
    half = _half(F)

    def matmul(a, b):
        return [[sum((a[r][t] * b[t][c] for t in range(size)), F.zero()) for c in range(size)]
                for r in range(size)]

    def coords(m):
        x = solve(cols, [m[r][c] for r in range(size) for c in range(size)], F, len(mats))
        if x is None:
            raise ValueError("matrices are not closed under the Jordan product")
        return x

    def prod(i, j):
        a, b = mats[i], mats[j]
        ab, ba = matmul(a, b), matmul(b, a)
        return coords([[half * (ab[r][c] + ba[r][c]) for c in range(size)] for r in range(size)])

    ident = [[F.one() if r == c else F.zero() for c in range(size)] for r in range(size)]
    el = {k: coords(v) for k, v in (elements or {}).items()}
    return Algebra.from_function(F, names, prod, coords(ident), name, el)


def symmetric_matrices(F: FieldSpec, size: int, elements=None) -> Algebra:
    """H_n(F) on E_ii then E_ij + E_ji (i < j)."""
    zero, one = F.zero(), F.one()
    mats, names = [], []
    pairs = [(i, i) for i in range(size)] + list(itertools.combinations(range(size), 2))
    for i, j in pairs:
        m = [[zero] * size for _ in range(size)]
        m[i][j] = one
        m[j][i] = one
        mats.append(m)
        names.append(f"s{i + 1}{j + 1}")
    return jordan_matrix_algebra(F, mats, names, elements, name=f"H{size}(F)")


def h4f(F: FieldSpec) -> Algebra:
    """H4(F) with the block frame e = diag(1,1,0,0), h = [[0,I],[I,0]]."""
    z, o = F.zero(), F.one()
    e = [[o, z, z, z], [z, o, z, z], [z, z, z, z], [z, z, z, z]]
    h = [[z, z, o, z], [z, z, z, o], [o, z, z, z], [z, o, z, z]]
    return symmetric_matrices(F, 4, {"e": e, "h": h})


# involutive algebras

class InvolutiveAlgebra:
    """Unital associative algebra with an involution, both certified on construction."""

    def __init__(self, A: Algebra, star: LinearMap):
        if A.unit is None:
            raise NotAssociative("involutive algebra must be unital")
        assoc = is_associative(A)
        if not assoc:
            raise NotAssociative(assoc.line())
        b = A.basis()
        for x in b:
            if star(star(x)) != x.coords:
                raise NotInvolutive(f"star is not an involution on {x}")
        if star(A.unit) != A.unit.coords:
            raise NotInvolutive("star does not fix 1")
        for x in b:
            for y in b:
                lhs = star(x * y)
                rhs = (A.element(star(y)) * A.element(star(x))).coords
                if lhs != rhs:
                    raise NotInvolutive(f"star(xy) != star(y)star(x) at ({x}, {y})")
        self.A = A
        self.star = star
        self.field = A.field

    def symmetric(self) -> Subspace:
        return self._eigen(1)

    def skew(self) -> Subspace:
        return self._eigen(-1)

    def _eigen(self, sign) -> Subspace:
        m = self.star.matrix()
        for i in range(self.A.dim):
            m[i][i] = m[i][i] - self.field(sign)
        return kernel(m, self.field, self.A.dim)


def _diag_map(F, signs):
    n = len(signs)
    return LinearMap(F, [[F(s) if k == i else F.zero() for k in range(n)]
                         for i, s in enumerate(signs)])


BASES = ("f", "ff", "m2", "dual")
STARS = ("identity", "exchange", "transpose", "symplectic")


def involutive(base: str, star: str, F: FieldSpec) -> InvolutiveAlgebra:
    """Stock involutive algebras: (f|dual, identity), (ff, exchange|identity),
    (m2, transpose|symplectic)."""
    if base == "f":
        A = field_algebra(F)
        maps = {"identity": _diag_map(F, [1])}
    elif base == "dual":
        A = dual_numbers(F)
        maps = {"identity": _diag_map(F, [1, 1])}
    elif base == "ff":
        A = split_pair(F)
        maps = {"identity": _diag_map(F, [1, 1]),
                "exchange": LinearMap(F, [[0, 1], [1, 0]])}
    elif base == "m2":
        A = m2(F)
        # e, f, h, k -> transpose fixes e, f, h; symplectic adjoint swaps e, f
        maps = {"transpose": _diag_map(F, [1, 1, 1, -1]),
                "symplectic": LinearMap(F, [[0, 1, 0, 0], [1, 0, 0, 0],
                                            [0, 0, -1, 0], [0, 0, 0, -1]])}
    else:
        raise ValueError(f"unknown base algebra {base!r}; choose from {BASES}")
    if star not in maps:
        raise ValueError(f"star {star!r} not available on {base!r}; choose from {sorted(maps)}")
    return InvolutiveAlgebra(A, maps[star])


def split_involution(inv: InvolutiveAlgebra, total: bool = False) -> GradedBracketAlgebra:
    """S = H + K with the Jordan product and the bracket (xy - yx)/4.

    With ``total=True`` the odd-odd slot is filled in as well, which is what
    the Cohn envelope needs.
    """
    A, F = inv.A, inv.field
    H, K = inv.symmetric(), inv.skew()
    d0 = H.dim
    basis = list(H) + list(K)
    n = len(basis)
    if n != A.dim:
        raise NotInvolutive("symmetric and skew parts do not span A")
    to_s = LinearMap(F, basis).inverse()
    half, quarter = _half(F), F.invert(F(4))
    elems = [A.element(v) for v in basis]

    def jordan(i, j):
        x, y = elems[i], elems[j]
        return to_s((half * (x * y + y * x)).coords)

    def bracket(i, j):
        x, y = elems[i], elems[j]
        return to_s((quarter * (x * y - y * x)).coords)

    names = [f"h{i}" for i in range(d0)] + [f"k{j}" for j in range(n - d0)]
    S = Algebra.from_function(F, names, jordan, to_s(A.unit.coords), name="A+")
    evens, odds = range(d0), range(d0, n)
    b00 = {(i, j): bracket(i, j) for i in evens for j in evens}
    b01 = {(i, j): bracket(i, j) for i in evens for j in odds}
    b11 = {(i, j): bracket(i, j) for i in odds for j in odds} if total else None
    return GradedBracketAlgebra(S, d0, b00, b01, b11, convention=RESCALED)


def cohn_envelope(S: GradedBracketAlgebra) -> InvolutiveAlgebra:
    """Associative algebra on S with x*y = xy + 2{x,y}; star fixes S0, negates S1."""
    if not S.total:
        raise MissingBracketSlot("the envelope needs the odd-odd bracket as well")
    if S.convention != RESCALED and not S.is_zero_bracket:
        raise WrongConvention("envelope expects the epsilon-rescaled bracket")
    F = S.field
    two = F(2)
    b = S.algebra.basis()

    def prod(i, j):
        xy = S.algebra.mul_coords(b[i].coords, b[j].coords)
        br = S.bracket_entry(i, j)
        return tuple(p + two * q for p, q in zip(xy, br))

    unit = S.algebra.unit.coords if S.algebra.unit is not None else None
    A = Algebra.from_function(F, S.algebra.basis_names, prod, unit, name="envelope")
    assoc = is_associative(A)
    if not assoc:
        raise NotAssociative(assoc.line())
    star = _diag_map(F, [1] * S.even_dim + [-1] * S.odd_dim)
    return InvolutiveAlgebra(A, star)


def build_h2_matrix(inv: InvolutiveAlgebra) -> tuple[Algebra, H2Frame]:
    """Hermitian 2x2 matrices over (A, star) with the product (XY + YX)/2.

    Computed directly in M2(A); the basis is e(x)H, f(x)H, h(x)H, k(x)K.
    """
    A, F = inv.A, inv.field
    H, K = inv.symmetric(), inv.skew()
    hb, kb = [A.element(v) for v in H], [A.element(v) for v in K]
    d0, d1 = len(hb), len(kb)
    zero = A.zero()
    half = _half(F)
    # 2x2 matrices with entries in A
    gens = []
    for x in hb:
        gens.append(((x, zero), (zero, zero)))
    for x in hb:
        gens.append(((zero, zero), (zero, x)))
    for x in hb:
        gens.append(((zero, x), (x, zero)))
    for y in kb:
        gens.append(((zero, y), (-y, zero)))
    names = ([f"e.{n}" for n in (f"h{i}" for i in range(d0))]
             + [f"f.h{i}" for i in range(d0)] + [f"h.h{i}" for i in range(d0)]
             + [f"k.k{j}" for j in range(d1)])

    def mm(X, Y):
        return tuple(tuple(X[r][0] * Y[0][c] + X[r][1] * Y[1][c] for c in range(2))
                     for r in range(2))

    def coords(X):
        (a, b), (c, d) = X
        p, q = half * (b + c), half * (b - c)
        out = []
        out += H.coordinates(a.coords)
        out += H.coordinates(d.coords)
        out += H.coordinates(p.coords)
        out += K.coordinates(q.coords)
        return tuple(out)

    def prod(i, j):
        X, Y = gens[i], gens[j]
        xy, yx = mm(X, Y), mm(Y, X)
        return coords(tuple(tuple(half * (xy[r][c] + yx[r][c]) for c in range(2))
                            for r in range(2)))

    one = A.one()
    unit = coords(((one, zero), (zero, one)))
    e_el = coords(((one, zero), (zero, zero)))
    h_el = coords(((zero, one), (one, zero)))
    J = Algebra.from_function(F, names, prod, unit, name="H2(A,*)",
                              elements={"e": e_el, "h": h_el})
    return J, verify_h2_frame(J, J["e"], J["h"])


# bilinear-form algebras

@dataclass
class BilinearFormData:
    """J = A + V with f: V x V -> A.

    ``gram[(p, q)]`` is f(v_p, v_q) as A-coordinates, ``action[(i, p)]`` is
    a_i v_p as V-coordinates, and u, v are V-coordinates of the pair with
    f(u,u) = f(v,v) = 1, f(u,v) = 0.
    """

    A: Algebra
    v_dim: int
    gram: dict
    action: dict
    u: tuple = None
    v: tuple = None

    def __post_init__(self):
        F = self.A.field
        if self.u is None:
            self.u = tuple(F.one() if k == 0 else F.zero() for k in range(self.v_dim))
        if self.v is None:
            self.v = tuple(F.one() if k == 1 else F.zero() for k in range(self.v_dim))

    @classmethod
    def free(cls, A: Algebra, rank: int, gram=None) -> BilinearFormData:
        """V = A^rank with an A-valued gram matrix on the free generators
        (identity when omitted); the F-basis of V is a_i g_r in order r, i."""
        F = A.field
        n = A.dim
        one = A.one().coords
        if gram is None:
            gram = [[one if r == s else A.zero().coords for s in range(rank)] for r in range(rank)]
        gram = [[A.element(g) for g in row] for row in gram]
        ab = A.basis()
        vd = rank * n
        fgram, action = {}, {}
        for r in range(rank):
            for i in range(n):
                for s in range(rank):
                    for j in range(n):
                        fgram[(r * n + i, s * n + j)] = (ab[i] * ab[j] * gram[r][s]).coords
        for i in range(n):
            for r in range(rank):
                for j in range(n):
                    prod = (ab[i] * ab[j]).coords
                    vec = [F.zero()] * vd
                    vec[r * n:(r + 1) * n] = prod
                    action[(i, r * n + j)] = tuple(vec)

        def gen(r):
            vec = [F.zero()] * vd
            vec[r * n:(r + 1) * n] = one
            return tuple(vec)

        return cls(A, vd, fgram, action, gen(0), gen(1) if rank > 1 else None)

    def validate(self):
        A, F = self.A, self.A.field
        if A.unit is None:
            raise InvalidFormData("A must be unital")
        if not is_associative(A):
            raise InvalidFormData("A must be associative")
        for (i, j), terms in A.structure.items():
            if dict(terms) != dict(A.structure.get((j, i), ())):
                raise InvalidFormData("A must be commutative")
        V = Algebra(F, self.v_dim, {}, name="V")  # only used for vector arithmetic
        zeroA = A.zero().coords
        zeroV = V.zero().coords
        g = lambda p, q: tuple(F(c) for c in self.gram.get((p, q), zeroA))
        act = lambda i, p: tuple(F(c) for c in self.action.get((i, p), zeroV))
        for p in range(self.v_dim):
            for q in range(self.v_dim):
                if g(p, q) != g(q, p):
                    raise InvalidFormData(f"gram not symmetric at ({p}, {q})")
        unit = A.unit.coords

        def act_vec(a, x):
            out = [F.zero()] * self.v_dim
            for i, c in enumerate(a):
                if c:
                    for p, xp in enumerate(x):
                        if xp:
                            out = [o + c * xp * w for o, w in zip(out, act(i, p))]
            return tuple(out)

        def form(x, y):
            out = A.zero()
            for p, xp in enumerate(x):
                for q, yq in enumerate(y):
                    if xp and yq:
                        out = out + (xp * yq) * A.element(g(p, q))
            return out

        vb = [tuple(F.one() if k == p else F.zero() for k in range(self.v_dim))
              for p in range(self.v_dim)]
        ab = A.basis()
        for p, x in enumerate(vb):
            if act_vec(unit, x) != x:
                raise InvalidFormData("1 does not act as the identity on V")
            for a in ab:
                for b in ab:
                    if act_vec((a * b).coords, x) != act_vec(a.coords, act_vec(b.coords, x)):
                        raise InvalidFormData("action is not an associative module law")
                for y in vb:
                    if form(act_vec(a.coords, x), y) != a * form(x, y):
                        raise InvalidFormData("form is not A-bilinear")
        one = A.one()
        if form(self.u, self.u) != one or form(self.v, self.v) != one or form(self.u, self.v):
            raise InvalidFormData("need f(u,u) = f(v,v) = 1 and f(u,v) = 0")


def build_bilinear_form_algebra(data: BilinearFormData) -> tuple[Algebra, H2Frame]:
    """(a + x)(b + y) = (ab + f(x, y)) + (ay + bx), with frame e = (1 - u)/2, h = v."""
    data.validate()
    A, F = data.A, data.A.field
    da, dv = A.dim, data.v_dim
    n = da + dv
    structure = {}
    for (i, j), terms in A.structure.items():
        structure[(i, j)] = list(terms)
    for (i, p), vec in data.action.items():
        terms = [(da + q, c) for q, c in enumerate(vec) if F(c)]
        structure[(i, da + p)] = terms
        structure[(da + p, i)] = terms
    for (p, q), vec in data.gram.items():
        structure[(da + p, da + q)] = [(k, c) for k, c in enumerate(vec) if F(c)]
    names = list(A.basis_names) + [f"v{p}" for p in range(dv)]
    unit = list(A.unit.coords) + [F.zero()] * dv
    u = [F.zero()] * da + [F(c) for c in data.u]
    v = [F.zero()] * da + [F(c) for c in data.v]
    half = _half(F)
    e = [half * (a - b) for a, b in zip(unit, u)]
    J = Algebra(F, n, structure, names, unit, name="A+V", elements={"e": e, "h": v, "u": u})
    jordan = is_jordan(J)
    if not jordan:
        raise InvalidFormData(f"bilinear-form algebra is not Jordan: {jordan.line()}")
    return J, verify_h2_frame(J, J["e"], J["h"])


def form_data_from_zero_bracket(S: GradedBracketAlgebra) -> tuple[BilinearFormData, LinearMap]:
    """Bilinear-form data whose algebra is the zero-bracket tensor algebra of S.

    With A = S0 and V = A u + A v + S1, the form is f(au, bu) = f(av, bv) = ab
    and f(n, m) = -nm.  Also returns the map from A + V onto
    ``build_tensor_algebra(S)``: a -> 1(x)a, au -> (e - f)(x)a, av -> h(x)a,
    n -> k(x)n.
    """
    if not S.is_zero_bracket:
        raise InvalidFormData("the bracket is not zero")
    F, d0, d1 = S.field, S.even_dim, S.odd_dim
    if S.algebra.unit is None or any(S.algebra.unit.coords[d0:]):
        raise InvalidFormData("S0 must contain the unit of S")
    sb = S.algebra.basis()
    prods = [[S.algebra.mul_coords(sb[i].coords, sb[j].coords) for j in range(S.dim)]
             for i in range(S.dim)]
    A = S.even_algebra()
    vd = 2 * d0 + d1
    zero_v = [F.zero()] * vd
    gram, action = {}, {}
    for i in range(d0):
        for j in range(d0):
            ab = prods[i][j][:d0]
            gram[(i, j)] = ab
            gram[(d0 + i, d0 + j)] = ab
            for block in (0, d0):
                v = list(zero_v)
                v[block:block + d0] = ab
                action[(i, block + j)] = tuple(v)
        for m in range(d1):
            v = list(zero_v)
            v[2 * d0:] = prods[i][d0 + m][d0:]
            action[(i, 2 * d0 + m)] = tuple(v)
    for n in range(d1):
        for m in range(d1):
            gram[(2 * d0 + n, 2 * d0 + m)] = tuple(-c for c in prods[d0 + n][d0 + m][:d0])
    unit = S.algebra.unit.coords[:d0]
    u = tuple(unit) + (F.zero(),) * (d0 + d1)
    v = (F.zero(),) * d0 + tuple(unit) + (F.zero(),) * d1
    data = BilinearFormData(A, vd, gram, action, u, v)
    # tensor basis: e-block, f-block, h-block (each d0), then k-block (d1)
    n = 3 * d0 + d1
    images = []
    for i in range(d0):
        img = [F.zero()] * n
        img[i] = img[d0 + i] = F.one()
        images.append(img)
    for i in range(d0):
        img = [F.zero()] * n
        img[i], img[d0 + i] = F.one(), F(-1)
        images.append(img)
    for i in range(d0):
        img = [F.zero()] * n
        img[2 * d0 + i] = F.one()
        images.append(img)
    for m in range(d1):
        img = [F.zero()] * n
        img[3 * d0 + m] = F.one()
        images.append(img)
    return data, LinearMap(F, images)


def spin_factor(F: FieldSpec, v_dim: int, gram=None) -> tuple[Algebra, H2Frame]:
    """F1 + V for a diagonal or full gram matrix over F (identity by default)."""
    if v_dim < 2:
        raise InvalidFormData("need dim V >= 2 for an H2(F) frame")
    if gram is None:
        gram = [[1 if p == q else 0 for q in range(v_dim)] for p in range(v_dim)]
    A = field_algebra(F)
    data = BilinearFormData.free(A, v_dim, [[[g] for g in row] for row in gram])
    J, frame = build_bilinear_form_algebra(data)
    J.name = f"spin{v_dim}"
    return J, frame


# M2(F) commutator table

def verify_lemma4(F: FieldSpec, seed: int = 0, samples: int = 20) -> Suite:
    """The nine identities relating the Jordan product, commutator and trace on M2(F)."""
    M = m2(F)
    e, f, h, k = M.basis()
    one = M.one()
    half = _half(F)

    def jp(a, b):
        return half * (a * b + b * a)

    def com(a, b):
        return a * b - b * a

    def t(a):
        return a.coords[0] + a.coords[1]

    def jassoc(a, b, c):
        return jp(jp(a, b), c) - jp(a, jp(b, c))

    identities = [
        ("a.k = t(a)k/2", lambda a, b: jp(a, k) - half * t(a) * k),
        ("[a,k].k = 0", lambda a, b: jp(com(a, k), k)),
        ("[[k,a],k] = 4a - 2t(a)", lambda a, b: com(com(k, a), k) - (4 * a - 2 * t(a) * one)),
        ("[a,[k,b]] = (t(a)t(b) - 2t(a.b))k",
         lambda a, b: com(a, com(k, b)) - (t(a) * t(b) - 2 * t(jp(a, b))) * k),
        ("[k,a].[k,b] = 2t(a.b) - t(a)t(b)",
         lambda a, b: jp(com(k, a), com(k, b)) - (2 * t(jp(a, b)) - t(a) * t(b)) * one),
        ("[[k,a],[k,b]] = [[[k,a],k],b] = 4[a,b]",
         lambda a, b: (com(com(k, a), com(k, b)) - 4 * com(a, b),
                       com(com(com(k, a), k), b) - 4 * com(a, b))),
        ("[[a,[k,b]],k] = 0", lambda a, b: com(com(a, com(k, b)), k)),
        ("([a,b],k,k)+ = 0", lambda a, b: jassoc(com(a, b), k, k)),
        ("2a.b = t(a)b + t(b)a - t(a)t(b) + t(a.b)",
         lambda a, b: 2 * jp(a, b) - (t(a) * b + t(b) * a - t(a) * t(b) * one
                                      + t(jp(a, b)) * one)),
    ]
    rng = random.Random(seed)
    basis = [("e", e), ("f", f), ("h", h)]
    randoms = []
    for _ in range(samples):
        a = rng.randint(-9, 9) * e + rng.randint(-9, 9) * f + rng.randint(-9, 9) * h
        b = rng.randint(-9, 9) * e + rng.randint(-9, 9) * f + rng.randint(-9, 9) * h
        randoms.append((a, b))
    reports = []
    for name, fn in identities:
        bad = None
        count = 0
        for (an, a), (bn, b) in itertools.product(basis, repeat=2):
            count += 1
            res = fn(a, b)
            if any(bool(r) for r in (res if isinstance(res, tuple) else (res,))):
                bad = (an, bn)
                break
        if bad is None and name.startswith("2a.b"):
            for a, b in randoms:
                count += 1
                if fn(a, b):
                    bad = (repr(a), repr(b))
                    break
        reports.append(Report(name, bad is None, bad, checked=count))
    return Suite("lemma4", tuple(reports))


def bracket_trivial(S: GradedBracketAlgebra) -> bool:
    return S.is_zero_bracket


__all__ = [
    "BASES", "STARS", "BilinearFormData", "InvalidFormData", "InvolutiveAlgebra",
    "NotAssociative", "NotInvolutive", "build_bilinear_form_algebra", "build_h2_matrix",
    "build_tensor_algebra", "cohn_envelope", "dual_numbers", "field_algebra", "form_data_from_zero_bracket",
    "h2f", "h4f",
    "involutive", "jordan_matrix_algebra", "m2_assoc", "m2_plus", "spin_factor",
    "split_involution", "split_pair", "symmetric_matrices", "verify_lemma4",
]
