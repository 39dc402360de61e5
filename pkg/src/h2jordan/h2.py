"""Coordinatization of Jordan algebras containing H2(F) as a unital subalgebra.

Given a frame (1, e, h) inside J, :func:`decompose` computes the coordinate
core Z, the odd part N, the Jordan algebra S = Z + N with its partial odd
bracket, and :func:`reconstruct` rebuilds J as H2(F) (x) Z + Fk (x) N.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import Algebra, Element, Report, is_jordan
from .fields import NoSqrtMinusOne
from .graded import (RAW, GradedBracketAlgebra, Suite, WrongConvention,
                     build_tensor_algebra, rescale_bracket, verify_bracket_identities)
from .linalg import NotInSubspace, SingularMatrix, Subspace, inverse, kernel, rank


class FrameError(ValueError):
    pass


class RelationFailed(FrameError):
    def __init__(self, relation: str):
        super().__init__(f"RelationFailed: {relation}")
        self.relation = relation


class DependentFrame(FrameError):
    pass


class BracketEscapesComponent(ValueError):
    pass


@dataclass(frozen=True)
class H2Frame:
    e: Element
    h: Element
    one: Element

    @property
    def f(self) -> Element:
        return self.one - self.e


def verify_h2_frame(J: Algebra, e: Element, h: Element) -> H2Frame:
    """Check e*e = e, h*h = 1, e*h = h/2 and independence of 1, e, h."""
    one = J.one()
    if e * e != e:
        raise RelationFailed("e*e=e")
    if h * h != one:
        raise RelationFailed("h*h=1")
    if e * h != h / 2:
        raise RelationFailed("e*h=h/2")
    if rank([one.coords, e.coords, h.coords], J.field, J.dim) < 3:
        raise DependentFrame("1, e, h are linearly dependent")
    return H2Frame(e, h, one)


class LinearMap:
    """Linear map given by the images of the domain basis (codomain coordinates)."""

    def __init__(self, field, images, codim: int | None = None):
        self.field = field
        self.images = tuple(tuple(field(c) for c in img) for img in images)
        self.dim = len(self.images)
        self.codim = codim if codim is not None else (len(self.images[0]) if self.images else 0)

    def __call__(self, x):
        coords = x.coords if isinstance(x, Element) else x
        out = [self.field.zero()] * self.codim
        for c, img in zip(coords, self.images):
            if c:
                for k, v in enumerate(img):
                    if v:
                        out[k] = out[k] + c * v
        return tuple(out)

    def matrix(self):
        """Column convention: column i is the image of basis vector i."""
        return [list(row) for row in zip(*self.images)]

    def inverse(self) -> LinearMap:
        inv = inverse(self.matrix(), self.field)
        return LinearMap(self.field, [list(col) for col in zip(*inv)])

    def __eq__(self, other):
        return isinstance(other, LinearMap) and self.images == other.images

    __hash__ = None


def _associator_matrix(J: Algebra, a: Element, b: Element):
    """Matrix of z -> (z, a, b) = (za)b - z(ab)."""
    cols = [J.associator(z, a, b).coords for z in J.basis()]
    return [list(r) for r in zip(*cols)]


def compute_Z(J: Algebra, frame: H2Frame) -> Subspace:
    """{z : (z, a, b) = 0 for a, b in H2(F)}; the pairs from {e, h} suffice."""
    rows = []
    for a in (frame.e, frame.h):
        for b in (frame.e, frame.h):
            rows.extend(_associator_matrix(J, a, b))
    return kernel(rows, J.field, J.dim)


def compute_N(J: Algebra, frame: H2Frame) -> Subspace:
    """{n : e n = n/2, h n = 0}."""
    half = J.field.invert(J.field(2))
    re = J.right_matrix(frame.e)
    for i in range(J.dim):
        re[i][i] = re[i][i] - half
    return kernel(re + J.right_matrix(frame.h), J.field, J.dim)


def check_module_decomposition(J: Algebra, frame: H2Frame, Z: Subspace, N: Subspace) -> Suite:
    reports = []
    expected = 3 * Z.dim + N.dim
    reports.append(Report("dimension", expected == J.dim,
                          detail=f"dim J={J.dim}, 3*dim Z + dim N={expected}"))
    vectors = []
    for z in Z:
        zel = J.element(z)
        vectors += [z, (frame.e * zel).coords, (frame.h * zel).coords]
    vectors += list(N)
    r = rank(vectors, J.field, J.dim) if vectors else 0
    reports.append(Report("independence", r == len(vectors),
                          detail=f"rank {r} of {len(vectors)} vectors"))
    for name, left, right, target in (("Z*Z<=Z", Z, Z, Z), ("N*N<=Z", N, N, Z),
                                      ("Z*N<=N", Z, N, N)):
        bad = None
        for i, a in enumerate(left):
            for j, b in enumerate(right):
                if J.mul_coords(a, b) not in target:
                    bad = (i, j)
                    break
            if bad:
                break
        reports.append(Report(name, bad is None, bad))
    return Suite("module-decomposition", tuple(reports))


def _s_coords(vec, space: Subspace, offset: int, total: int, field, what: str):
    try:
        coeffs = space.coordinates(vec)
    except NotInSubspace:
        raise BracketEscapesComponent(what) from None
    out = [field.zero()] * total
    out[offset:offset + len(coeffs)] = coeffs
    return tuple(out)


def extract_brackets(J: Algebra, frame: H2Frame, Z: Subspace, N: Subspace) -> GradedBracketAlgebra:
    """S = Z + N with {z, v} = (ev, z, h) and {z, n} = -h (z, e, n) (raw convention)."""
    F = J.field
    d0, d1 = Z.dim, N.dim
    n = d0 + d1
    zs = [J.element(z) for z in Z]
    ns = [J.element(v) for v in N]
    elems = zs + ns

    def to_s(vec, parity, what):
        return _s_coords(vec.coords, N if parity else Z, d0 if parity else 0, n, F, what)

    products = {}
    for i, x in enumerate(elems):
        for j, y in enumerate(elems):
            parity = (i >= d0) ^ (j >= d0)
            products[(i, j)] = [(k, c) for k, c in
                                enumerate(to_s(x * y, parity, f"product {i}*{j} leaves S"))
                                if c]
    unit = to_s(frame.one, 0, "unit of J is not in Z")
    names = [f"z{i}" for i in range(d0)] + [f"n{j}" for j in range(d1)]
    S = Algebra(F, n, products, names, unit, name="S")
    e, h = frame.e, frame.h
    b00, b01 = {}, {}
    for i, z in enumerate(zs):
        for j, v in enumerate(zs):
            b00[(i, j)] = to_s(J.associator(e * v, z, h), 1, f"(e z{j}, z{i}, h) is not in N")
        for j, m in enumerate(ns):
            b01[(i, d0 + j)] = tuple(-c for c in to_s(h * J.associator(z, e, m), 0,
                                                      f"h (z{i}, e, n{j}) is not in Z"))
    return GradedBracketAlgebra(S, d0, b00, b01, convention=RAW)


@dataclass(frozen=True)
class DecompositionResult:
    J: Algebra
    frame: H2Frame
    Z: Subspace
    N: Subspace
    S: GradedBracketAlgebra
    modules: Suite

    @property
    def embedding(self) -> dict:
        """Images in J of the tensor basis: z, e z, h z per Z-basis vector, and N."""
        zs = [self.J.element(z) for z in self.Z]
        return {"z": zs, "ez": [self.frame.e * z for z in zs],
                "hz": [self.frame.h * z for z in zs],
                "n": [self.J.element(v) for v in self.N]}


class DecompositionFailed(ValueError):
    def __init__(self, stage: str, detail: str):
        super().__init__(f"{stage}: {detail}")
        self.stage = stage


def decompose(J: Algebra, e: Element, h: Element) -> DecompositionResult:
    """Frame check, Z, N, module checks and bracket extraction in one call."""
    frame = verify_h2_frame(J, e, h)
    Z = compute_Z(J, frame)
    N = compute_N(J, frame)
    modules = check_module_decomposition(J, frame, Z, N)
    if not modules:
        bad = next(r for r in modules.reports if not r.passed)
        raise DecompositionFailed("module-decomposition", bad.line())
    S = extract_brackets(J, frame, Z, N)
    return DecompositionResult(J, frame, Z, N, S, modules)


def _epsilon_for(S: GradedBracketAlgebra):
    if S.epsilon is not None:
        return S.epsilon
    return S.field.sqrt_minus_one()


def reconstruct(S: GradedBracketAlgebra, source: DecompositionResult | None = None):
    """Rebuild H2(F) (x) S0 + Fk (x) S1 from a rescaled S.

    Returns ``(J2, f)`` where ``f`` maps the source algebra onto ``J2`` when
    ``source`` is given.  ``f`` is ``None`` without a source, and also when N
    is nonzero but the field has no square root of -1: the zero-bracket
    rebuild is still a Jordan algebra then, just not a twist of the source.
    """
    if S.convention == RAW and not S.is_zero_bracket:
        raise WrongConvention("rescale the bracket by a square root of -1 first")
    J2 = build_tensor_algebra(S, name="reconstructed")
    if source is None or (S.odd_dim and S.epsilon is None and not S.field.has_sqrt_minus_one):
        return J2, None
    return J2, isomorphism_from_decomposition(source, S, J2)


def isomorphism_from_decomposition(source: DecompositionResult, S: GradedBracketAlgebra,
                                   J2: Algebra) -> LinearMap:
    """f(a z + n) = a (x) z + eps k (x) n, as a map J -> J2."""
    J = source.J
    F = J.field
    emb = source.embedding
    images = []
    images += [x.coords for x in emb["ez"]]
    images += [(z - ez).coords for z, ez in zip(emb["z"], emb["ez"])]
    images += [x.coords for x in emb["hz"]]
    if emb["n"]:
        eps_inv = F.invert(_epsilon_for(S))
        images += [(eps_inv * n).coords for n in emb["n"]]
    g = LinearMap(F, images)  # J2 -> J
    if g.dim != J2.dim:
        raise ValueError("decomposition and reconstruction dimensions differ")
    return g.inverse()


def verify_isomorphism(A: Algebra, B: Algebra, L: LinearMap) -> bool:
    return bool(isomorphism_report(A, B, L))


def isomorphism_report(A: Algebra, B: Algebra, L: LinearMap) -> Report:
    if A.field != B.field or L.field != A.field:
        raise ValueError("field mismatch")
    if L.dim != A.dim or L.codim != B.dim or A.dim != B.dim:
        raise ValueError("dimension mismatch")
    if rank(L.images, A.field, B.dim) < A.dim:
        return Report("isomorphism", False, detail="map is singular")
    if A.unit is not None and B.unit is not None and L(A.unit) != B.unit.coords:
        return Report("isomorphism", False, detail="unit not preserved")
    imgs = [B.element(L(b)) for b in A.basis()]
    for i, x in enumerate(A.basis()):
        for j, y in enumerate(A.basis()):
            if L(x * y) != (imgs[i] * imgs[j]).coords:
                return Report("isomorphism", False, (A.basis_names[i], A.basis_names[j]))
    return Report("isomorphism", True, checked=A.dim * A.dim)


def transport(A: Algebra, L: LinearMap, names=None) -> Algebra:
    """The structure of A carried along an invertible L (product L(L^-1 x L^-1 y))."""
    try:
        Linv = L.inverse()
    except SingularMatrix:
        raise ValueError("cannot transport along a singular map") from None
    pre = [A.element(Linv(tuple(A.field.one() if k == i else A.field.zero()
                                for k in range(L.codim)))) for i in range(L.codim)]

    def prod(i, j):
        return L(pre[i] * pre[j])

    unit = L(A.unit) if A.unit is not None else None
    return Algebra.from_function(A.field, names or [f"b{i}" for i in range(L.codim)], prod,
                                 unit, name=f"{A.name}*")


def roundtrip(J: Algebra, e: Element, h: Element):
    """Decompose, rescale, reconstruct and verify.  Returns (result, J2, f, report)."""
    result = decompose(J, e, h)
    S = result.S
    if J.field.has_sqrt_minus_one:
        S = rescale_bracket(S, J.field.sqrt_minus_one())
    elif S.odd_dim:
        raise NoSqrtMinusOne(f"N is nonzero and -1 is not a square in {J.field}")
    J2, f = reconstruct(S, result)
    return result, J2, f, isomorphism_report(J, J2, f)


def certify_reconstruction(S: GradedBracketAlgebra) -> tuple[Suite, Report]:
    """Identity suite on S and the Jordan check on the tensor algebra built from it."""
    suite = verify_bracket_identities(S)
    return suite, is_jordan(build_tensor_algebra(S))


__all__ = [
    "BracketEscapesComponent", "DecompositionFailed", "DecompositionResult", "DependentFrame",
    "FrameError", "H2Frame", "LinearMap", "NoSqrtMinusOne", "RelationFailed",
    "check_module_decomposition", "compute_N", "compute_Z", "decompose", "extract_brackets",
    "isomorphism_from_decomposition", "isomorphism_report", "reconstruct", "roundtrip",
    "transport", "verify_h2_frame", "verify_isomorphism",
]
