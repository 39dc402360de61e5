import itertools
from fractions import Fraction

import pytest

from h2jordan import constructions as cons
from h2jordan.algebra import is_associative, is_commutative, is_jordan
from h2jordan.graded import (MissingBracketSlot, WrongConvention, m2, rescale_bracket,
                             verify_bracket_identities)
from h2jordan.h2 import LinearMap, decompose, isomorphism_report

from conftest import ALL_FIELDS, GF5, GF13, Q, QI


def test_h2_matrix_over_field_is_h2f():
    for F in ALL_FIELDS:
        J, frame = cons.build_h2_matrix(cons.involutive("f", "identity", F))
        assert J.same_structure(cons.h2f(F))
        assert J["e"] == frame.e and J.one() == cons.h2f(F).one()


def test_h2_matrix_over_m2_transpose_is_h4_by_block_embedding():
    F = GF13
    inv = cons.involutive("m2", "transpose", F)
    J, _ = cons.build_h2_matrix(inv)
    H4 = cons.h4f(F)
    assert J.dim == 10
    # basis of J: e(x)H, f(x)H, h(x)H, k(x)K with H = (E11, E22, E12+E21), K = (E12-E21)
    idx = {name: i for i, name in enumerate(H4.basis_names)}

    def sym(r, c):
        r, c = min(r, c), max(r, c)
        return idx[f"s{r + 1}{c + 1}"]

    images = []

    def block(entries):
        v = [F.zero()] * 10
        for (r, c), x in entries.items():
            if r <= c:
                v[sym(r, c)] += F(x)
        return v

    h_mats = [{(0, 0): 1}, {(1, 1): 1}, {(0, 1): 1, (1, 0): 1}]
    for off in (0, 2):  # upper-left block then lower-right block
        for m in h_mats:
            images.append(block({(r + off, c + off): x for (r, c), x in m.items()}))
    for m in h_mats:  # off-diagonal block [[0, x], [x^T, 0]] with x symmetric
        images.append(block({(r, c + 2): x for (r, c), x in m.items()}
                            | {(c + 2, r): x for (r, c), x in m.items()}))
    # x = E12 - E21 in the upper-right block
    images.append(block({(0, 3): 1, (3, 0): 1, (1, 2): -1, (2, 1): -1}))
    assert isomorphism_report(J, H4, LinearMap(F, images))


def test_involution_checks():
    F = Q
    A = m2(F)
    with pytest.raises(cons.NotInvolutive):
        cons.InvolutiveAlgebra(A, LinearMap(F, [[1, 0, 0, 0], [0, 1, 0, 0],
                                                [0, 0, 1, 0], [0, 0, 0, 1]]))  # not anti
    with pytest.raises(cons.NotInvolutive):
        cons.InvolutiveAlgebra(A, LinearMap(F, [[1, 0, 0, 0], [0, 1, 0, 0],
                                                [0, 0, 2, 0], [0, 0, 0, -1]]))
    with pytest.raises(cons.NotAssociative):
        cons.InvolutiveAlgebra(cons.h2f(F), LinearMap(F, [[1, 0, 0], [0, 1, 0], [0, 0, 1]]))
    with pytest.raises(ValueError):
        cons.involutive("m2", "exchange", F)


@pytest.mark.parametrize("F", ALL_FIELDS, ids=lambda F: F.name)
def test_envelope_of_m2_is_m2(F):
    S = cons.split_involution(cons.involutive("m2", "transpose", F), total=True)
    inv = cons.cohn_envelope(S)
    assert inv.A.same_structure(m2(F))
    assert is_associative(inv.A)
    assert inv.star == cons.involutive("m2", "transpose", F).star
    e, h = inv.A.basis(0), inv.A.basis(2)
    assert e * h == inv.A.element((0, 0, Fraction(1, 2), Fraction(1, 2)))  # e12
    J, _ = cons.build_h2_matrix(inv)
    assert J.same_structure(cons.build_h2_matrix(cons.involutive("m2", "transpose", F))[0])


def test_envelope_of_zero_bracket_is_s():
    F = GF5
    S = cons.split_involution(cons.involutive("ff", "identity", F), total=True)
    assert S.is_zero_bracket and S.odd_dim == 0
    inv = cons.cohn_envelope(S)
    assert inv.A.same_structure(S.algebra)
    assert inv.star == LinearMap(F, [[1, 0], [0, 1]])


def test_envelope_of_exchange_split():
    F = Q
    inv0 = cons.involutive("ff", "exchange", F)
    S = cons.split_involution(inv0, total=True)
    inv = cons.cohn_envelope(S)
    assert is_associative(inv.A) and is_commutative(inv.A) and inv.A.dim == 2
    # two orthogonal idempotents (1 +- k)/2 show the envelope is F + F
    one, k = inv.A.one(), inv.A.basis(1)
    p = (one + k) / 2
    assert p * p == p and p * (one - p) == 0


def test_envelope_preconditions():
    F = GF13
    S = cons.split_involution(cons.involutive("m2", "transpose", F))
    with pytest.raises(MissingBracketSlot):
        cons.cohn_envelope(S)
    raw = S.replace(convention="raw", b11={})
    with pytest.raises(WrongConvention):
        cons.cohn_envelope(raw)


def test_envelope_of_extracted_h4_bracket():
    """The rescaled bracket pulled out of H4(F) has the 1/4-commutator normalisation:
    its envelope is associative; doubling the bracket is caught."""
    F = GF13
    J = cons.h4f(F)
    R = rescale_bracket(decompose(J, J["e"], J["h"]).S, F.sqrt_minus_one()).replace(b11={})
    inv = cons.cohn_envelope(R)
    assert is_associative(inv.A) and not is_commutative(inv.A)
    doubled = R.replace(b00={k: tuple(2 * x for x in v) for k, v in R.b00().items()},
                        b01={k: tuple(2 * x for x in v) for k, v in R.b01().items()})
    with pytest.raises(cons.NotAssociative):
        cons.cohn_envelope(doubled)


@pytest.mark.parametrize("base,star", [("m2", "transpose"), ("m2", "symplectic"),
                                       ("ff", "exchange"), ("dual", "identity")])
def test_split_satisfies_identities_and_rebuilds(base, star):
    F = QI
    inv = cons.involutive(base, star, F)
    S = cons.split_involution(inv, total=True)
    assert verify_bracket_identities(S)
    assert cons.cohn_envelope(S).A.dim == inv.A.dim
    J, frame = cons.build_h2_matrix(inv)
    assert is_jordan(J)
    assert J.dim == 3 * inv.symmetric().dim + inv.skew().dim


@pytest.mark.parametrize("F", [Q, GF5, GF13], ids=lambda F: F.name)
def test_lemma4(F):
    suite = cons.verify_lemma4(F)
    assert len(suite.reports) == 9 and suite.passed


def test_m2_plus_commutator_identities():
    F = GF13
    M = m2(F)
    half = F.invert(F(2))
    jp = lambda a, b: half * (a * b + b * a)
    com = lambda a, b: a * b - b * a
    for a, b, c in itertools.product(M.basis(), repeat=3):
        jas = jp(jp(a, b), c) - jp(a, jp(b, c))
        assert 4 * jas == com(b, com(a, c))
        assert com(jp(a, b), c) == jp(a, com(b, c)) + jp(b, com(a, c))


def test_spin_factor_shapes():
    for n in (2, 3, 5):
        J, frame = cons.spin_factor(Q, n)
        assert J.dim == n + 1 and is_jordan(J)
        r = decompose(J, frame.e, frame.h)
        assert r.S.is_zero_bracket
        assert (r.Z.dim, r.N.dim) == (1, n - 2)
    with pytest.raises(cons.InvalidFormData):
        cons.spin_factor(Q, 1)
    J, _ = cons.spin_factor(Q, 3, [[1, 0, 0], [0, 1, 0], [0, 0, -3]])
    assert is_jordan(J)


def test_bilinear_form_over_dual_numbers():
    F = GF13
    A = cons.dual_numbers(F)
    for rank, dims in ((2, (2, 0)), (3, (2, 2))):
        data = cons.BilinearFormData.free(A, rank)
        J, frame = cons.build_bilinear_form_algebra(data)
        assert J.dim == 2 + 2 * rank
        r = decompose(J, frame.e, frame.h)
        assert (r.Z.dim, r.N.dim) == dims
        assert r.S.is_zero_bracket
        assert frame.e == (J.one() - J["u"]) / 2


def test_bilinear_form_validation():
    F = Q
    A = cons.field_algebra(F)
    good = cons.BilinearFormData.free(A, 2)
    bad = cons.BilinearFormData(A, 2, dict(good.gram), dict(good.action))
    bad.gram[(0, 1)] = (1,)
    with pytest.raises(cons.InvalidFormData):
        cons.build_bilinear_form_algebra(bad)
    skew = cons.BilinearFormData.free(A, 2, [[[1], [0]], [[0], [2]]])
    with pytest.raises(cons.InvalidFormData):  # f(v, v) = 2
        cons.build_bilinear_form_algebra(skew)
    with pytest.raises(cons.InvalidFormData):
        cons.build_bilinear_form_algebra(cons.BilinearFormData.free(cons.m2_assoc(F), 2))
