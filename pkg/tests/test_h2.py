import pytest

from h2jordan import constructions as cons
from h2jordan.algebra import is_associative, is_jordan
from h2jordan.fields import NoSqrtMinusOne
from h2jordan.graded import RAW, WrongConvention, rescale_bracket
from h2jordan.h2 import (LinearMap, RelationFailed, check_module_decomposition, compute_N,
                         compute_Z, decompose, isomorphism_report,
                         reconstruct, roundtrip, transport, verify_h2_frame, verify_isomorphism)

from conftest import ALL_FIELDS, EPS_FIELDS, GF7, GF13, Q
from corpus import DIMS, h2_algebras


@pytest.mark.parametrize("F", ALL_FIELDS, ids=lambda F: F.name)
def test_corpus_dimensions(F):
    for name, J in h2_algebras(F):
        frame = verify_h2_frame(J, J["e"], J["h"])
        Z, N = compute_Z(J, frame), compute_N(J, frame)
        assert (J.dim, Z.dim, N.dim) == DIMS[name], name
        assert J.dim == 3 * Z.dim + N.dim
        assert check_module_decomposition(J, frame, Z, N)


def test_frame_relations_named():
    J = cons.h2f(Q)
    with pytest.raises(RelationFailed, match=r"e\*e=e"):
        verify_h2_frame(J, J["h"], J["h"])
    with pytest.raises(RelationFailed, match=r"h\*h=1"):
        verify_h2_frame(J, J["e"], J["e"])
    with pytest.raises(RelationFailed, match=r"e\*h=h/2"):
        verify_h2_frame(J, J["e"], J.one())
    assert str(RelationFailed("e*e=e")) == "RelationFailed: e*e=e"


def test_z_contains_unit_and_centralizes_frame():
    J = cons.h4f(GF13)
    frame = verify_h2_frame(J, J["e"], J["h"])
    Z = compute_Z(J, frame)
    assert J.one().coords in Z
    for z in Z:
        z = J.element(z)
        for a in (frame.e, frame.h, frame.f):
            for b in J.basis():
                assert J.associator(z, b, a) == 0  # (Z, J, A) = 0


def test_n_conditions():
    J = cons.h4f(Q)
    frame = verify_h2_frame(J, J["e"], J["h"])
    for n in compute_N(J, frame):
        n = J.element(n)
        assert frame.e * n == n / 2
        assert frame.h * n == 0


def test_extracted_s_is_graded_jordan_and_z_associative():
    J = cons.h4f(GF13)
    r = decompose(J, J["e"], J["h"])
    S = r.S
    assert S.convention == RAW
    assert (S.even_dim, S.odd_dim) == (3, 1)
    assert is_jordan(S.algebra)
    # Z is H2(F) itself here, which is not associative
    assert not is_associative(S.algebra)
    assert not S.is_zero_bracket


@pytest.mark.parametrize("F", EPS_FIELDS, ids=lambda F: F.name)
def test_roundtrip_corpus(F):
    for name, J in h2_algebras(F):
        result, J2, f, report = roundtrip(J, J["e"], J["h"])
        assert report, name
        assert verify_isomorphism(J, J2, f)
        # the reconstructed tensor equals the transported original exactly
        assert transport(J, f, J2.basis_names).same_structure(J2), name
        assert f(J.one()) == J2.one().coords


def test_roundtrip_over_q_needs_epsilon_only_with_n():
    J = cons.h2f(Q)
    assert roundtrip(J, J["e"], J["h"])[3]
    J = cons.h4f(Q)
    with pytest.raises(NoSqrtMinusOne):
        roundtrip(J, J["e"], J["h"])
    with pytest.raises(NoSqrtMinusOne):
        roundtrip(cons.h4f(GF7), *(cons.h4f(GF7)[k] for k in "eh"))


def test_reconstruct_refuses_raw_nonzero_bracket():
    J = cons.h4f(GF13)
    S = decompose(J, J["e"], J["h"]).S
    with pytest.raises(WrongConvention):
        reconstruct(S)
    J2, f = reconstruct(rescale_bracket(S, GF13.sqrt_minus_one()))
    assert f is None and J2.dim == 10 and is_jordan(J2)


def test_other_root_of_minus_one_also_works():
    J = cons.h4f(GF13)
    res = decompose(J, J["e"], J["h"])
    eps = GF13(8)  # the other root
    S = rescale_bracket(res.S, eps)
    J2, f = reconstruct(S, res)
    assert isomorphism_report(J, J2, f)


def test_isomorphism_negatives():
    J = cons.h4f(GF13)
    result, J2, f, _ = roundtrip(J, J["e"], J["h"])
    ident = LinearMap(GF13, [b.coords for b in J.basis()])
    assert not verify_isomorphism(J, J2, ident)
    singular = LinearMap(GF13, [J.zero().coords] * J.dim)
    rep = isomorphism_report(J, J2, singular)
    assert not rep and rep.detail == "map is singular"
    # a scalar multiple of f is linear and bijective but not multiplicative
    twice = LinearMap(GF13, [tuple(2 * c for c in img) for img in f.images])
    assert not verify_isomorphism(J, J2, twice)


def test_spin_factor_zero_bracket_over_q():
    J, frame = cons.spin_factor(Q, 4)
    r = decompose(J, frame.e, frame.h)
    assert r.S.is_zero_bracket
    J2, f = reconstruct(r.S, r)
    assert f is None  # no epsilon over Q, so no twist map
    assert J2.dim == J.dim == 3 * r.Z.dim + r.N.dim
    assert is_jordan(J2)
