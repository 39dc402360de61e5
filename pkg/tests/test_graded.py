import itertools

import pytest
from hypothesis import given, strategies as st

from h2jordan import constructions as cons
from h2jordan.algebra import is_jordan
from h2jordan.graded import (RAW, RESCALED, BadEpsilon, GradedBracketAlgebra, GradingError,
                             MissingBracketSlot, WrongConvention, build_tensor_algebra,
                             rescale_bracket, verify_bracket_identities)
from h2jordan.h2 import decompose

from conftest import EPS_FIELDS, GF5, GF13, Q, QI
from corpus import h2_algebras

MAIN = ("associator-bracket", "leibniz", "leibniz-right", "three-term")


def extracted(F, name="h4f"):
    J = dict(h2_algebras(F))[name]
    return decompose(J, J["e"], J["h"]).S


def scaled(S, c):
    c = S.field(c)
    scale = lambda t: None if t is None else {k: tuple(c * x for x in v) for k, v in t.items()}
    return S.replace(b00=scale(S.b00()), b01=scale(S.b01()), b11=scale(S.b11()))


def test_h4_suite_has_all_families():
    suite = verify_bracket_identities(extracted(GF13))
    assert suite.passed
    names = [r.name for r in suite.reports]
    assert set(MAIN) <= set(names) and len(names) == 16
    assert all(r.checked > 0 for r in suite.reports)


@pytest.mark.parametrize("F", EPS_FIELDS + [Q], ids=lambda F: F.name)
def test_corpus_suites_pass_in_both_conventions(F):
    for name, J in h2_algebras(F):
        S = decompose(J, J["e"], J["h"]).S
        assert verify_bracket_identities(S), name
        if F.has_sqrt_minus_one:
            R = rescale_bracket(S, F.sqrt_minus_one())
            assert R.convention == RESCALED
            assert verify_bracket_identities(R), name


def test_tensor_of_raw_bracket_is_not_jordan():
    # the sign convention matters: the untwisted bracket gives a non-Jordan algebra
    assert not is_jordan(build_tensor_algebra(extracted(GF13)))


@pytest.mark.parametrize("c", range(1, 13))
def test_bracket_scaling_detected_by_suite_and_tensor(c):
    """Only c = +-1 keeps the quadratic associator identity; the main
    construction is Jordan exactly when the suite passes."""
    R = rescale_bracket(extracted(GF13), GF13.sqrt_minus_one())
    T = scaled(R, c)
    suite = verify_bracket_identities(T)
    assert suite.passed == (c in (1, 12))
    assert bool(is_jordan(build_tensor_algebra(T))) == suite.passed
    if not suite.passed:
        assert not suite["associator-bracket"]
        assert suite["leibniz"]  # linear in the bracket


def test_tampered_entry_fails_with_witness():
    R = rescale_bracket(extracted(GF5), GF5.sqrt_minus_one())
    v = R.bracket_entry(0, 2)
    T = R.with_bracket_entry(0, 2, tuple(2 * x for x in v))
    suite = verify_bracket_identities(T)
    bad = [r for r in suite.reports if not r.passed]
    assert bad and all(r.witness for r in bad)
    rep = is_jordan(build_tensor_algebra(T))
    assert not rep and rep.witness


def test_rescale_errors():
    S = extracted(GF13)
    with pytest.raises(BadEpsilon):
        rescale_bracket(S, 2)
    R = rescale_bracket(S, GF13.sqrt_minus_one())
    with pytest.raises(WrongConvention):
        rescale_bracket(R, GF13.sqrt_minus_one())
    assert R.epsilon == GF13(5)
    assert R.bracket_entry(0, 2) == tuple(GF13(5) * x for x in S.bracket_entry(0, 2))


def test_rescale_twice_returns_negated_bracket():
    S = extracted(QI)
    i = QI.sqrt_minus_one()
    R = rescale_bracket(S, i)
    back = rescale_bracket(R.replace(convention=RAW, epsilon=None), i)
    assert back.b00() == {k: tuple(-x for x in v) for k, v in S.b00().items()}


def test_grading_validation():
    A = cons.h2f(Q)
    ok = GradedBracketAlgebra(cons.m2_plus(Q)[0], 3)
    assert ok.is_zero_bracket and ok.odd_dim == 1
    with pytest.raises(GradingError):
        GradedBracketAlgebra(A, 1)  # f*h lands in S1 but the basis is (e | f, h)
    S = extracted(Q)
    with pytest.raises(GradingError):
        S.replace(b00={(0, 1): (1, 0, 0, 0)})  # must land in S1
    with pytest.raises(GradingError):
        S.replace(b01={(0, 3): (0, 0, 0, 1)})  # must land in S0
    with pytest.raises(GradingError):
        S.replace(b00={(0, 1): (0, 0, 0, 1)})  # not anticommutative
    with pytest.raises(WrongConvention):
        S.replace(convention="other")


def test_missing_odd_slot():
    S = extracted(GF13)
    assert S.bracket_entry(3, 3) is None and not S.total
    with pytest.raises(MissingBracketSlot):
        S.with_bracket_entry(3, 3, (0, 0, 0, 0))


def test_tensor_products_of_pure_tensors():
    """(a x)(b y) = a.b xy + [a,b]{x,y} on a few hand-picked pairs."""
    R = rescale_bracket(extracted(GF13), GF13.sqrt_minus_one())
    T = build_tensor_algebra(R)
    d0 = R.even_dim
    e_z = lambda s: T.basis(s)
    h_z = lambda s: T.basis(2 * d0 + s)
    k_n = lambda j: T.basis(3 * d0 + j)
    half = GF13.invert(GF13(2))
    # e.z0 * e.z0 = e (x) z0^2 and [e,e] = 0
    z0sq = R.algebra.basis(0) * R.algebra.basis(0)
    assert e_z(0) * e_z(0) == T.element(list(z0sq.coords[:d0]) + [0] * (T.dim - d0))
    # e.z_s * h.z_t: e.h = h/2 and [e,h] = k
    for s, t in itertools.product(range(d0), repeat=2):
        prod = e_z(s) * h_z(t)
        xy = (R.algebra.basis(s) * R.algebra.basis(t)).coords
        br = R.bracket_entry(s, t)
        expect = [0] * T.dim
        for q in range(d0):
            expect[2 * d0 + q] = half * xy[q]
        for j in range(R.odd_dim):
            expect[3 * d0 + j] = br[d0 + j]
        assert prod == T.element(expect)
    # k (x) n squared: k.k = -1, so the product lies in e and f blocks
    sq = k_n(0) * k_n(0)
    assert not any(sq.coords[2 * d0:])
    assert T.unit is not None and T["e"] * T["e"] == T["e"]


@given(st.integers(0, 12), st.integers(0, 12))
def test_tensor_is_bilinear_in_bracket_scale(a, b):
    """Adding scaled tables is linear: T(c1 + c2) - T(c1) - T(c2) + T(0) vanishes."""
    R = rescale_bracket(extracted(GF13), GF13.sqrt_minus_one())
    T = lambda c: build_tensor_algebra(scaled(R, c))
    ta, tb, tab, t0 = T(a), T(b), T(a + b), T(0)
    for i in range(10):
        for j in range(10):
            x = [tab.mul_coords(tab.basis(i).coords, tab.basis(j).coords),
                 ta.mul_coords(ta.basis(i).coords, ta.basis(j).coords),
                 tb.mul_coords(tb.basis(i).coords, tb.basis(j).coords),
                 t0.mul_coords(t0.basis(i).coords, t0.basis(j).coords)]
            assert all(p - q - r + s == 0 for p, q, r, s in zip(*x))
