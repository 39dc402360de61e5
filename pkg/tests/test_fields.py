from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from h2jordan.fields import (DivisionByZero, FieldError, FieldSpec, GaussianRational,
                             NoSqrtMinusOne, Residue, ScalarParseError)

from conftest import GF5, GF7, GF13, Q, QI


def test_parse_examples():
    assert Q.parse("1/2") == Fraction(1, 2)
    assert QI.parse("3+1/2i") == GaussianRational(3, Fraction(1, 2))
    assert GF13.parse("7") == Residue(7, 13)


@pytest.mark.parametrize("text,re,im", [
    ("-i", 0, -1), ("i", 0, 1), ("2/3", Fraction(2, 3), 0), ("-1/2i", 0, Fraction(-1, 2)),
    ("1-i", 1, -1), ("-3/4+5i", Fraction(-3, 4), 5),
])
def test_gaussian_grammar(text, re, im):
    assert QI.parse(text) == GaussianRational(re, im)


@pytest.mark.parametrize("F,text", [
    (Q, "1/0"), (Q, "x"), (Q, "1.5"), (GF13, "13"), (GF13, "-1"), (GF5, "1/2"),
    (QI, "1+"), (QI, "ii"), (QI, "1/0i"),
])
def test_parse_rejects(F, text):
    with pytest.raises(ScalarParseError):
        F.parse(text)


def test_char_two_and_composites_rejected():
    for p in (2, 9, 1, 0):
        with pytest.raises(FieldError):
            FieldSpec.prime(p)
    with pytest.raises(FieldError):
        FieldSpec.from_name("gf2")


def test_sqrt_minus_one():
    assert GF5.sqrt_minus_one() == Residue(2, 5)
    assert GF13.sqrt_minus_one() == Residue(5, 13)
    assert QI.sqrt_minus_one() == GaussianRational(0, 1)
    for F in (Q, GF7, FieldSpec.prime(3)):
        assert not F.has_sqrt_minus_one
        with pytest.raises(NoSqrtMinusOne):
            F.sqrt_minus_one()


@pytest.mark.parametrize("p", [5, 13, 17, 29, 37, 41])
def test_sqrt_minus_one_is_smallest_root(p):
    # independent scan
    roots = [x for x in range(p) if (x * x) % p == p - 1]
    assert FieldSpec.prime(p).sqrt_minus_one().value == min(roots)


def test_invert():
    assert Q.invert(Fraction(1, 2)) == 2
    for F in (Q, QI, GF13):
        with pytest.raises(DivisionByZero):
            F.invert(F.zero())


def test_names_roundtrip():
    for F in (Q, QI, GF5, GF13):
        assert FieldSpec.from_name(F.name) == F


def test_format_canonical():
    assert QI.format(GaussianRational(3, Fraction(1, 2))) == "3+1/2i"
    assert QI.format(GaussianRational(0, -1)) == "-i"
    assert QI.format(GaussianRational(Fraction(1, 2))) == "1/2"
    assert Q.format(Fraction(-6, 4)) == "-3/2"
    assert GF13.format(GF13(-1)) == "12"


fracs = st.fractions(max_denominator=50).filter(lambda x: abs(x) < 1000)
gauss = st.builds(GaussianRational, fracs, fracs)


@given(gauss, gauss, gauss)
def test_gaussian_field_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    if b:
        assert (a / b) * b == a


@given(fracs, fracs, fracs, fracs)
def test_gaussian_matches_pair_formula(a, b, c, d):
    # (a+bi)(c+di) = (ac-bd) + (ad+bc)i
    p = GaussianRational(a, b) * GaussianRational(c, d)
    assert (p.re, p.im) == (a * c - b * d, a * d + b * c)


@given(st.sampled_from([3, 5, 7, 13, 101]), st.integers(), st.integers())
def test_residues_match_integer_arithmetic(p, x, y):
    F = FieldSpec.prime(p)
    assert (F(x) * F(y)).value == (x * y) % p
    assert (F(x) - F(y)).value == (x - y) % p
    if x % p:
        assert F.invert(F(x)).value == pow(x, -1, p)


@given(st.sampled_from([Q, QI, GF13]), st.integers(-50, 50), st.integers(1, 50))
def test_format_parse_roundtrip(F, n, d):
    x = F(Fraction(n, d)) if F.kind != "prime" or d % 13 else F(n)
    assert F.parse(F.format(x)) == x


@given(gauss, gauss)
def test_gaussian_against_sympy(a, b):
    sympy = pytest.importorskip("sympy")
    to_sym = lambda g: sympy.Rational(g.re.numerator, g.re.denominator) + sympy.I * sympy.Rational(
        g.im.numerator, g.im.denominator)
    for ours, ref in ((a * b, to_sym(a) * to_sym(b)), (a - b, to_sym(a) - to_sym(b))):
        assert sympy.simplify(to_sym(ours) - ref) == 0
    if b:
        assert sympy.simplify(to_sym(a / b) - to_sym(a) / to_sym(b)) == 0
