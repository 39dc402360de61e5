"""Exact coefficient fields: Q, Q(i) and GF(p) for odd primes p.

Rationals are plain :class:`fractions.Fraction` values.  Gaussian rationals
and prime-field residues get small immutable classes of their own.  Nothing
here ever touches floating point.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd


class FieldError(ValueError):
    pass


class ScalarParseError(FieldError):
    pass


class NoSqrtMinusOne(FieldError):
    pass


class DivisionByZero(ZeroDivisionError):
    pass


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _fmt_fraction(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


class GaussianRational:
    """(a + b i) / d with integers a, b and d > 0 in lowest terms.

    ``re`` and ``im`` expose the parts as Fractions.
    """

    __slots__ = ("_a", "_b", "_d")

    def __init__(self, re=0, im=0):
        re, im = Fraction(re), Fraction(im)
        d = re.denominator * im.denominator // gcd(re.denominator, im.denominator)
        _init(self, re.numerator * (d // re.denominator), im.numerator * (d // im.denominator), d)

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @property
    def re(self) -> Fraction:
        return Fraction(self._a, self._d)

    @property
    def im(self) -> Fraction:
        return Fraction(self._b, self._d)

    @staticmethod
    def _coerce(other):
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, (int, Fraction)):
            return GaussianRational(other)
        return None

    def __add__(self, other):
        if not isinstance(other, GaussianRational):
            other = self._coerce(other)
            if other is None:
                return NotImplemented
        a, b, d = self._a, self._b, self._d
        c, e, f = other._a, other._b, other._d
        if d == f:
            return _gauss(a + c, b + e, d)
        return _gauss(a * f + c * d, b * f + e * d, d * f)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, GaussianRational):
            other = self._coerce(other)
            if other is None:
                return NotImplemented
        a, b, d = self._a, self._b, self._d
        c, e, f = other._a, other._b, other._d
        if d == f:
            return _gauss(a - c, b - e, d)
        return _gauss(a * f - c * d, b * f - e * d, d * f)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if not isinstance(other, GaussianRational):
            other = self._coerce(other)
            if other is None:
                return NotImplemented
        a, b, d = self._a, self._b, self._d
        c, e, f = other._a, other._b, other._d
        if not e:
            return _gauss(a * c, b * c, d * f)
        return _gauss(a * c - b * e, a * e + b * c, d * f)

    __rmul__ = __mul__

    def __neg__(self):
        return _gauss(-self._a, -self._b, self._d, reduced=True)

    def inverse(self):
        a, b, d = self._a, self._b, self._d
        norm = a * a + b * b
        if norm == 0:
            raise DivisionByZero("inverse of 0 in Q(i)")
        # d / (a + bi) = d (a - bi) / (a^2 + b^2)
        return _gauss(d * a, -d * b, norm)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __bool__(self):
        return bool(self._a) or bool(self._b)

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self._a == other._a and self._b == other._b and self._d == other._d
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self == o

    def __hash__(self):
        if self._b == 0:
            return hash(Fraction(self._a, self._d))
        return hash((self.re, self.im))

    def __str__(self):
        re, im = self.re, self.im
        if im == 0:
            return _fmt_fraction(re)
        ims = _fmt_fraction(abs(im))
        if ims == "1":
            ims = ""
        if re == 0:
            return f"-{ims}i" if im < 0 else f"{ims}i"
        sign = "-" if im < 0 else "+"
        return f"{_fmt_fraction(re)}{sign}{ims}i"

    def __repr__(self):
        return f"GaussianRational({self})"


_setattr = object.__setattr__


def _init(g, a, b, d):
    if d < 0:
        a, b, d = -a, -b, -d
    g_ = gcd(a, b, d)
    if g_ > 1:
        a, b, d = a // g_, b // g_, d // g_
    _setattr(g, "_a", a)
    _setattr(g, "_b", b)
    _setattr(g, "_d", d)


def _gauss(a: int, b: int, d: int, reduced: bool = False) -> GaussianRational:
    g = object.__new__(GaussianRational)
    if reduced:
        _setattr(g, "_a", a)
        _setattr(g, "_b", b)
        _setattr(g, "_d", d)
    else:
        _init(g, a, b, d)
    return g


class Residue:
    """Element of GF(p), stored as the canonical residue in [0, p)."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        object.__setattr__(self, "value", value % p)
        object.__setattr__(self, "p", p)

    def __setattr__(self, name, value):
        raise AttributeError("Residue is immutable")

    def _v(self, other):
        if isinstance(other, Residue):
            if other.p != self.p:
                raise FieldError(f"mixing GF({self.p}) and GF({other.p})")
            return other.value
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            if other.denominator % self.p == 0:
                raise DivisionByZero(f"{other} has no image in GF({self.p})")
            return other.numerator * pow(other.denominator, -1, self.p)
        return None

    def __add__(self, other):
        v = self._v(other)
        if v is None:
            return NotImplemented
        return Residue(self.value + v, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._v(other)
        if v is None:
            return NotImplemented
        return Residue(self.value - v, self.p)

    def __rsub__(self, other):
        v = self._v(other)
        if v is None:
            return NotImplemented
        return Residue(v - self.value, self.p)

    def __mul__(self, other):
        v = self._v(other)
        if v is None:
            return NotImplemented
        return Residue(self.value * v, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return Residue(-self.value, self.p)

    def inverse(self):
        if self.value == 0:
            raise DivisionByZero(f"inverse of 0 in GF({self.p})")
        return Residue(pow(self.value, -1, self.p), self.p)

    def __truediv__(self, other):
        v = self._v(other)
        if v is None:
            return NotImplemented
        return self * Residue(v, self.p).inverse()

    def __rtruediv__(self, other):
        v = self._v(other)
        if v is None:
            return NotImplemented
        return Residue(v, self.p) * self.inverse()

    def __bool__(self):
        return self.value != 0

    def __eq__(self, other):
        if isinstance(other, Residue):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return (other - self.value) % self.p == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __str__(self):
        return str(self.value)

    def __repr__(self):
        return f"Residue({self.value} mod {self.p})"


_INT = r"[+-]?\d+"
_RAT = rf"{_INT}(?:/\d+)?"
_RAT_RE = re.compile(rf"^{_RAT}$")
_RES_RE = re.compile(r"^\d+$")
_GAUSS_RE = re.compile(
    rf"^(?:(?P<re>{_RAT})(?P<sign>[+-])(?P<im>\d+(?:/\d+)?)?i"
    rf"|(?P<pure>[+-]?(?:\d+(?:/\d+)?)?)i"
    rf"|(?P<real>{_RAT}))$"
)


def _parse_fraction(text: str) -> Fraction:
    if not _RAT_RE.match(text):
        raise ScalarParseError(f"not a rational number: {text!r}")
    num, _, den = text.partition("/")
    if den and int(den) == 0:
        raise ScalarParseError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den else 1)


@dataclass(frozen=True)
class FieldSpec:
    """Descriptor of one of the supported fields.

    ``kind`` is ``"rational"``, ``"gaussian_rational"`` or ``"prime"``; ``p``
    is set exactly for the prime kind.
    """

    kind: str
    p: int | None = None

    def __post_init__(self):
        if self.kind not in ("rational", "gaussian_rational", "prime"):
            raise FieldError(f"unknown field kind {self.kind!r}")
        if self.kind == "prime":
            if self.p is None or not _is_prime(self.p):
                raise FieldError(f"GF(p) needs a prime p, got {self.p!r}")
            if self.p == 2:
                raise FieldError("characteristic 2 is not supported")
        elif self.p is not None:
            raise FieldError("p is only meaningful for prime fields")

    @classmethod
    def rational(cls) -> FieldSpec:
        return cls("rational")

    @classmethod
    def gaussian(cls) -> FieldSpec:
        return cls("gaussian_rational")

    @classmethod
    def prime(cls, p: int) -> FieldSpec:
        return cls("prime", p)

    @classmethod
    def from_name(cls, name: str) -> FieldSpec:
        """Parse the short names used in files and on the command line:
        ``q``, ``qi`` and ``gf<p>``."""
        name = name.strip().lower()
        if name in ("q", "rational"):
            return cls.rational()
        if name in ("qi", "q(i)", "gaussian_rational"):
            return cls.gaussian()
        m = re.fullmatch(r"gf\(?(\d+)\)?", name)
        if m:
            return cls.prime(int(m.group(1)))
        raise FieldError(f"unknown field {name!r} (expected q, qi or gf<p>)")

    @property
    def name(self) -> str:
        return {"rational": "q", "gaussian_rational": "qi"}.get(self.kind) or f"gf{self.p}"

    def __str__(self):
        return {"rational": "Q", "gaussian_rational": "Q(i)"}.get(self.kind) or f"GF({self.p})"

    def __call__(self, value):
        """Coerce an int, Fraction, string or scalar of this field."""
        if isinstance(value, str):
            return self.parse(value)
        if self.kind == "rational":
            if isinstance(value, (int, Fraction)):
                return Fraction(value)
        elif self.kind == "gaussian_rational":
            if isinstance(value, GaussianRational):
                return value
            if isinstance(value, (int, Fraction)):
                return GaussianRational(value)
        else:
            if isinstance(value, Residue):
                if value.p != self.p:
                    raise FieldError(f"{value!r} is not in {self}")
                return value
            if isinstance(value, int):
                return Residue(value, self.p)
            if isinstance(value, Fraction):
                return Residue(value.numerator, self.p) / value.denominator
        raise FieldError(f"cannot coerce {value!r} into {self}")

    def zero(self):
        return self(0)

    def one(self):
        return self(1)

    def contains(self, x) -> bool:
        if self.kind == "rational":
            return isinstance(x, Fraction)
        if self.kind == "gaussian_rational":
            return isinstance(x, GaussianRational)
        return isinstance(x, Residue) and x.p == self.p

    def parse(self, text: str):
        text = text.strip()
        if self.kind == "rational":
            return _parse_fraction(text)
        if self.kind == "prime":
            if not _RES_RE.match(text):
                raise ScalarParseError(f"not a canonical residue mod {self.p}: {text!r}")
            v = int(text)
            if v >= self.p:
                raise ScalarParseError(f"residue {v} is not reduced mod {self.p}")
            return Residue(v, self.p)
        m = _GAUSS_RE.match(text)
        if not m:
            raise ScalarParseError(f"not a Gaussian rational: {text!r}")
        if m.group("real") is not None:
            return GaussianRational(_parse_fraction(m.group("real")))
        if m.group("pure") is not None:
            coeff = m.group("pure")
            if coeff in ("", "+", "-"):
                coeff += "1"
            return GaussianRational(0, _parse_fraction(coeff))
        im = _parse_fraction(m.group("im") or "1")
        if m.group("sign") == "-":
            im = -im
        return GaussianRational(_parse_fraction(m.group("re")), im)

    def format(self, x) -> str:
        if self.kind == "rational":
            return _fmt_fraction(x)
        return str(x)

    def invert(self, x):
        if not x:
            raise DivisionByZero(f"0 has no inverse in {self}")
        if self.kind == "rational":
            return 1 / x
        return x.inverse()

    @property
    def has_sqrt_minus_one(self) -> bool:
        if self.kind == "rational":
            return False
        return self.kind == "gaussian_rational" or self.p % 4 == 1

    def sqrt_minus_one(self):
        """Return eps with eps*eps == -1 (the smaller residue over GF(p), i over Q(i))."""
        if self.kind == "gaussian_rational":
            return GaussianRational(0, 1)
        if not self.has_sqrt_minus_one:
            raise NoSqrtMinusOne(f"-1 is not a square in {self}")
        for x in range(1, self.p):
            if (x * x + 1) % self.p == 0:
                return Residue(x, self.p)
        raise AssertionError("unreachable for p = 1 mod 4")
