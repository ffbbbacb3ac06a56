"""Exact arithmetic in Q(sqrt2, sqrt3).

Elements are stored as four integer numerators over one shared positive
denominator, reduced so the five integers have gcd 1.  That makes the
representation canonical: equal values have identical integer tuples.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt
from numbers import Rational

__all__ = ["ExtScalar", "ZERO", "ONE", "SQRT2", "SQRT3", "SQRT6", "parse_scalar"]

_START_BITS = 48
_RATIONAL_TOKEN = re.compile(r"[+-]?\d+(/[1-9]\d*)?")


@lru_cache(maxsize=None)
def _root_floor(n: int, bits: int) -> int:
    """floor(sqrt(n) * 2**bits)."""
    return isqrt(n << (2 * bits))


def _reduce(n1, n2, n3, n6, den):
    if den < 0:
        n1, n2, n3, n6, den = -n1, -n2, -n3, -n6, -den
    g = gcd(gcd(gcd(n1, n2), gcd(n3, n6)), den)
    if g > 1:
        n1, n2, n3, n6, den = n1 // g, n2 // g, n3 // g, n6 // g, den // g
    return n1, n2, n3, n6, den


class ExtScalar:
    """An element c1 + c2*sqrt2 + c3*sqrt3 + c6*sqrt6 with rational c_i."""

    __slots__ = ("_n", "_hash")

    def __init__(self, c1=0, c2=0, c3=0, c6=0):
        fs = [Fraction(c) for c in (c1, c2, c3, c6)]
        den = 1
        for f in fs:
            den = den * f.denominator // gcd(den, f.denominator)
        nums = [f.numerator * (den // f.denominator) for f in fs]
        self._n = _reduce(*nums, den)
        self._hash = None

    @classmethod
    def _raw(cls, n1, n2, n3, n6, den) -> ExtScalar:
        obj = object.__new__(cls)
        obj._n = _reduce(n1, n2, n3, n6, den)
        obj._hash = None
        return obj

    @classmethod
    def coerce(cls, value) -> ExtScalar:
        if isinstance(value, ExtScalar):
            return value
        if isinstance(value, (int, Rational)):
            return cls(value)
        raise TypeError(f"cannot convert {type(value).__name__} to ExtScalar")

    # -- accessors -------------------------------------------------------

    @property
    def coeffs(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        """(c1, c2, c3, c6) as reduced fractions."""
        n1, n2, n3, n6, den = self._n
        return (Fraction(n1, den), Fraction(n2, den), Fraction(n3, den), Fraction(n6, den))

    @property
    def c1(self) -> Fraction:
        return self.coeffs[0]

    @property
    def c2(self) -> Fraction:
        return self.coeffs[1]

    @property
    def c3(self) -> Fraction:
        return self.coeffs[2]

    @property
    def c6(self) -> Fraction:
        return self.coeffs[3]

    @property
    def sort_key(self) -> tuple:
        """Total order on representations (not on values); used for canonical signatures."""
        return self._n

    def is_zero(self) -> bool:
        n1, n2, n3, n6, _ = self._n
        return n1 == 0 and n2 == 0 and n3 == 0 and n6 == 0

    def is_rational(self) -> bool:
        _, n2, n3, n6, _ = self._n
        return n2 == 0 and n3 == 0 and n6 == 0

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other):
        try:
            other = ExtScalar.coerce(other)
        except TypeError:
            return NotImplemented
        a1, a2, a3, a6, ad = self._n
        b1, b2, b3, b6, bd = other._n
        if ad == bd:
            return ExtScalar._raw(a1 + b1, a2 + b2, a3 + b3, a6 + b6, ad)
        return ExtScalar._raw(
            a1 * bd + b1 * ad, a2 * bd + b2 * ad, a3 * bd + b3 * ad, a6 * bd + b6 * ad, ad * bd
        )

    __radd__ = __add__

    def __neg__(self):
        n1, n2, n3, n6, den = self._n
        return ExtScalar._raw(-n1, -n2, -n3, -n6, den)

    def __pos__(self):
        return self

    def __sub__(self, other):
        try:
            other = ExtScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        try:
            other = ExtScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        try:
            other = ExtScalar.coerce(other)
        except TypeError:
            return NotImplemented
        a1, a2, a3, a6, ad = self._n
        b1, b2, b3, b6, bd = other._n
        # sqrt2*sqrt2=2, sqrt3*sqrt3=3, sqrt6*sqrt6=6, sqrt2*sqrt3=sqrt6,
        # sqrt2*sqrt6=2sqrt3, sqrt3*sqrt6=3sqrt2
        r1 = a1 * b1 + 2 * a2 * b2 + 3 * a3 * b3 + 6 * a6 * b6
        r2 = a1 * b2 + a2 * b1 + 3 * (a3 * b6 + a6 * b3)
        r3 = a1 * b3 + a3 * b1 + 2 * (a2 * b6 + a6 * b2)
        r6 = a1 * b6 + a6 * b1 + a2 * b3 + a3 * b2
        return ExtScalar._raw(r1, r2, r3, r6, ad * bd)

    __rmul__ = __mul__

    def conjugate(self, flip2: bool, flip3: bool) -> ExtScalar:
        """Galois conjugate: negate sqrt2 and/or sqrt3 (sqrt6 follows)."""
        n1, n2, n3, n6, den = self._n
        s2 = -1 if flip2 else 1
        s3 = -1 if flip3 else 1
        return ExtScalar._raw(n1, s2 * n2, s3 * n3, s2 * s3 * n6, den)

    def inv(self) -> ExtScalar:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(sqrt2, sqrt3)")
        # x * x(-s2) * x(-s3) * x(-s2,-s3) is the rational norm
        partial = self.conjugate(True, False) * self.conjugate(False, True) * self.conjugate(True, True)
        norm = self * partial
        assert norm.is_rational()
        return partial * ExtScalar(1 / norm.c1)

    def __truediv__(self, other):
        try:
            other = ExtScalar.coerce(other)
        except TypeError:
            return NotImplemented
        if other.is_rational():
            if other.is_zero():
                raise ZeroDivisionError("division by zero in Q(sqrt2, sqrt3)")
            q = other.c1
            n1, n2, n3, n6, den = self._n
            return ExtScalar._raw(
                n1 * q.denominator, n2 * q.denominator, n3 * q.denominator, n6 * q.denominator,
                den * q.numerator,
            )
        return self * other.inv()

    def __rtruediv__(self, other):
        try:
            other = ExtScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return other * self.inv()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inv() ** (-k)
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- sign and ordering -----------------------------------------------

    def enclosure(self, bits: int) -> tuple[Fraction, Fraction]:
        """Certified rational interval [lo, hi] containing the value."""
        lo, hi = self._scaled_bounds(bits)
        den = self._n[4] << bits
        return Fraction(lo, den), Fraction(hi, den)

    def _scaled_bounds(self, bits: int) -> tuple[int, int]:
        # bounds on value * den * 2**bits using floor(sqrt(k)*2**bits) <= sqrt(k)*2**bits < floor+1
        n1, n2, n3, n6, _ = self._n
        lo = hi = n1 << bits
        for n, k in ((n2, 2), (n3, 3), (n6, 6)):
            if n == 0:
                continue
            r = _root_floor(k, bits)
            if n > 0:
                lo += n * r
                hi += n * (r + 1)
            else:
                lo += n * (r + 1)
                hi += n * r
        return lo, hi

    def sign(self) -> int:
        if self.is_zero():
            return 0
        bits = _START_BITS
        while True:
            lo, hi = self._scaled_bounds(bits)
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            bits *= 2

    def __eq__(self, other):
        if isinstance(other, ExtScalar):
            return self._n == other._n
        if isinstance(other, (int, Rational)):
            return self._n == ExtScalar(other)._n
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(Fraction(self._n[0], self._n[4]))
            else:
                self._hash = hash(self._n)
        return self._hash

    def _cmp(self, other) -> int:
        return (self - ExtScalar.coerce(other)).sign()

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __bool__(self):
        return not self.is_zero()

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __float__(self):
        lo, hi = self.enclosure(64)
        return float((lo + hi) / 2)

    # -- text --------------------------------------------------------------

    def approx(self, digits: int) -> str:
        """Decimal string with `digits` significant digits, rounded to nearest."""
        if digits < 1:
            raise ValueError("digits must be >= 1")
        if self.is_zero():
            return "0" if digits == 1 else "0." + "0" * (digits - 1)
        bits = _START_BITS
        while True:
            lo, hi = self.enclosure(bits)
            if self.is_rational():
                lo = hi = self.c1
            found = _round_interval(lo, hi, digits)
            if found is not None:
                mantissa, exp10 = found
                return _format_decimal(mantissa, exp10, digits)
            bits *= 2

    def to_text(self) -> str:
        """Four space-separated rationals: c1 c2 c3 c6."""
        return " ".join(str(c) for c in self.coeffs)

    def __str__(self):
        terms = []
        for c, name in zip(self.coeffs, ("", "√2", "√3", "√6")):
            if c == 0:
                continue
            a = abs(c)
            if not name:
                body = str(a)
            elif a == 1:
                body = name
            elif a.denominator == 1:
                body = f"{a}{name}"
            else:
                body = f"({a}){name}"
            terms.append(("-" if c < 0 else "+", body))
        if not terms:
            return "0"
        first_sign, out = terms[0]
        out = ("-" if first_sign == "-" else "") + out
        for sgn, body in terms[1:]:
            out += f" {sgn} {body}"
        return out

    def __repr__(self):
        return f"ExtScalar({', '.join(str(c) for c in self.coeffs)})"


def _round_interval(lo: Fraction, hi: Fraction, digits: int):
    """Round to `digits` significant digits if both ends agree, else None."""
    if (lo < 0) != (hi < 0) or lo == 0 or hi == 0:
        return None
    neg = lo < 0
    if neg:
        lo, hi = -hi, -lo
    results = []
    for v in (lo, hi):
        e = _floor_log10(v)
        scaled = v * Fraction(10) ** (digits - 1 - e)
        m = round(scaled)
        if m == 10**digits:
            m, e = 10 ** (digits - 1), e + 1
        results.append((m, e))
    if results[0] != results[1]:
        return None
    m, e = results[0]
    return (-m if neg else m), e


def _floor_log10(v: Fraction) -> int:
    e = len(str(v.numerator)) - len(str(v.denominator))
    while Fraction(10) ** e > v:
        e -= 1
    while Fraction(10) ** (e + 1) <= v:
        e += 1
    return e


def _format_decimal(mantissa: int, exp10: int, digits: int) -> str:
    sign = "-" if mantissa < 0 else ""
    body = str(abs(mantissa)).rjust(digits, "0")
    point = exp10 + 1  # digits before the decimal point
    if point <= 0:
        text = "0." + "0" * (-point) + body
    elif point >= digits:
        text = body + "0" * (point - digits)
    else:
        text = body[:point] + "." + body[point:]
    return sign + text


def parse_scalar(tokens) -> ExtScalar:
    """Build an ExtScalar from four rational tokens (`p/q` or `p`)."""
    tokens = list(tokens)
    if len(tokens) != 4:
        raise ValueError(f"expected 4 rational tokens, got {len(tokens)}")
    for t in tokens:
        if not _RATIONAL_TOKEN.fullmatch(t):
            raise ValueError(f"malformed rational token {t!r}")
    return ExtScalar(*(Fraction(t) for t in tokens))


ZERO = ExtScalar(0)
ONE = ExtScalar(1)
SQRT2 = ExtScalar(0, 1)
SQRT3 = ExtScalar(0, 0, 1)
SQRT6 = ExtScalar(0, 0, 0, 1)
