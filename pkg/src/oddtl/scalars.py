"""Exact scalars: rationals, Laurent polynomials in ``q`` and rational functions.

Arithmetic is delegated to FLINT polynomials; this module only keeps track of
negative exponents and a canonical normal form so that results can be hashed
and compared.

>>> q = LaurentPoly.q()
>>> str(quantum_int(3))
'q^2 - 1 + q^-2'
>>> str(delta())
'-q + q^-1'
"""
from __future__ import annotations

import re
from collections.abc import Mapping
from enum import IntEnum
from fractions import Fraction
from numbers import Rational as _RationalABC

from flint import fmpq, fmpq_poly, fmpz_poly

Rational = Fraction


class Epsilon(IntEnum):
    """The sign parameter; ``ODD`` gives the super theory."""

    ODD = -1
    CLASSICAL = 1


def check_eps(eps: int) -> int:
    if eps not in (1, -1):
        raise ValueError(f"epsilon must be +1 or -1, got {eps!r}")
    return int(eps)


def _frac(c) -> Fraction:
    return Fraction(int(c.p), int(c.q))


def _fmpq(c) -> fmpq:
    c = Fraction(c)
    return fmpq(c.numerator, c.denominator)


Number = int | Fraction


class LaurentPoly:
    """A Laurent polynomial ``q^low * poly(q)`` with ``poly(0) != 0``.

    Parameters
    ----------
    coeffs : mapping or number, optional
        Either ``{exponent: coefficient}`` or a constant.
    """

    __slots__ = ("_hash", "_low", "_poly")

    def __init__(self, coeffs: Mapping[int, Number] | Number | None = None):
        if coeffs is None:
            self._set(0, fmpq_poly())
            return
        if not isinstance(coeffs, Mapping):
            self._set(0, fmpq_poly([_fmpq(coeffs)]))
            return
        items = {int(e): Fraction(c) for e, c in coeffs.items() if c}
        if not items:
            self._set(0, fmpq_poly())
            return
        low = min(items)
        dense = [fmpq(0)] * (max(items) - low + 1)
        for e, c in items.items():
            dense[e - low] = _fmpq(c)
        self._set(low, fmpq_poly(dense))

    def _set(self, low: int, poly: fmpq_poly) -> None:
        if poly == 0:
            low = 0
        else:
            cs = poly.coeffs()
            k = 0
            while cs[k] == 0:
                k += 1
            if k:
                poly = poly.right_shift(k)
                low += k
        self._low = low
        self._poly = poly
        self._hash = None

    @classmethod
    def _raw(cls, low: int, poly: fmpq_poly) -> LaurentPoly:
        obj = cls.__new__(cls)
        obj._set(low, poly)
        return obj

    @classmethod
    def q(cls, power: int = 1) -> LaurentPoly:
        return cls._raw(power, fmpq_poly([1]))

    @classmethod
    def coerce(cls, x) -> LaurentPoly:
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, (int, _RationalABC)):
            return cls(x)
        raise TypeError(f"cannot interpret {x!r} as a Laurent polynomial")

    @classmethod
    def from_fmpz(cls, poly: fmpz_poly, low: int = 0) -> LaurentPoly:
        return cls._raw(low, fmpq_poly(poly))

    # -- inspection -------------------------------------------------------
    @property
    def low_degree(self) -> int:
        return self._low

    @property
    def high_degree(self) -> int:
        return self._low + max(self._poly.degree(), 0)

    def coefficients(self) -> dict[int, Fraction]:
        return {self._low + i: _frac(c) for i, c in enumerate(self._poly.coeffs()) if c != 0}

    def is_zero(self) -> bool:
        return self._poly == 0

    def is_monomial(self) -> bool:
        return self._poly.degree() == 0

    def constant(self) -> Fraction | None:
        """The value if this is a constant, else ``None``."""
        if self._poly == 0:
            return Fraction(0)
        if self._low == 0 and self._poly.degree() == 0:
            return _frac(self._poly.coeffs()[0])
        return None

    def __bool__(self) -> bool:
        return self._poly != 0

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentPoly):
            try:
                other = LaurentPoly.coerce(other)
            except TypeError:
                return NotImplemented
        return self._low == other._low and self._poly == other._poly

    def __hash__(self) -> int:
        if self._hash is None:
            c = self.constant()
            self._hash = hash(c) if c is not None else hash(
                (self._low, tuple(self._poly.coeffs())))
        return self._hash

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        if isinstance(other, RatFunc):
            return NotImplemented
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        if other._poly == 0:
            return self
        if self._poly == 0:
            return other
        a, b = self, other
        if a._low > b._low:
            a, b = b, a
        return LaurentPoly._raw(a._low, a._poly + b._poly.left_shift(b._low - a._low))

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly._raw(self._low, -self._poly)

    def __sub__(self, other):
        if isinstance(other, RatFunc):
            return NotImplemented
        try:
            return self + (-LaurentPoly.coerce(other))
        except TypeError:
            return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, RatFunc):
            return NotImplemented
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return LaurentPoly._raw(self._low + other._low, self._poly * other._poly)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly:
        if n < 0:
            if not self.is_monomial():
                raise ValueError("only monomials have Laurent inverses")
            c = _frac(self._poly.coeffs()[0])
            return LaurentPoly({-self._low * (-n): Fraction(1) / c ** (-n)})
        return LaurentPoly._raw(self._low * n, self._poly ** n)

    def __truediv__(self, other):
        return RatFunc(self) / other

    def __rtruediv__(self, other):
        return RatFunc(other) / self

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by ``q**k``."""
        return LaurentPoly._raw(self._low + k, self._poly)

    def evaluate(self, q) -> Fraction:
        """Substitute a nonzero rational for ``q``."""
        q = Fraction(q)
        return sum((c * q ** e for e, c in self.coefficients().items()), Fraction(0))

    def to_fmpz(self) -> tuple[fmpz_poly, int, int]:
        """Return ``(poly, low, den)`` with ``self == q^low * poly / den``."""
        den = int(self._poly.denom())
        return fmpz_poly(self._poly.numer()), self._low, den

    # -- text -------------------------------------------------------------
    def __str__(self) -> str:
        cs = self.coefficients()
        if not cs:
            return "0"
        out = []
        for e in sorted(cs, reverse=True):
            c = cs[e]
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                mono = "q" if e == 1 else f"q^{e}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            out.append((sign, body))
        first_sign, first = out[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in out[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> LaurentPoly:
        """Inverse of ``str``; also accepts ``q**k`` and implicit products.

        >>> str(LaurentPoly.parse("q^2 - 3/2*q^-1 + 4"))
        'q^2 + 4 - 3/2*q^-1'
        """
        src = text.replace(" ", "").replace("**", "^")
        if not src:
            raise ValueError("empty polynomial")
        if src[0] not in "+-":
            src = "+" + src
        pos = 0
        out: dict[int, Fraction] = {}
        while pos < len(src):
            m = _TERM.match(src, pos)
            if m is None or m.end() == pos:
                raise ValueError(f"cannot parse Laurent polynomial {text!r}")
            sign, coef, var, exp = m.group("sign", "coef", "var", "exp")
            if coef is None and var is None:
                raise ValueError(f"cannot parse Laurent polynomial {text!r}")
            c = Fraction(coef) if coef else Fraction(1)
            if sign == "-":
                c = -c
            e = (int(exp) if exp else 1) if var else 0
            out[e] = out.get(e, Fraction(0)) + c
            pos = m.end()
        return cls(out)


_TERM = re.compile(
    r"(?P<sign>[+-])(?P<coef>\d+(?:/\d+)?)?\*?(?:(?P<var>q)(?:\^(?P<exp>[+-]?\d+))?)?")


class RatFunc:
    """A quotient of Laurent polynomials kept in lowest terms.

    The denominator is normalised to a polynomial with constant term ``1``.
    """

    __slots__ = ("_hash", "den", "num")

    def __init__(self, num=0, den=1):
        if isinstance(num, RatFunc):
            if den == 1:
                self.num, self.den, self._hash = num.num, num.den, None
                return
            num, den = num / den, 1
            self.num, self.den, self._hash = num.num, num.den, None
            return
        num = LaurentPoly.coerce(num)
        den = LaurentPoly.coerce(den)
        self.num, self.den = _normalise(num, den)
        self._hash = None

    @classmethod
    def _trusted(cls, num: LaurentPoly, den: LaurentPoly) -> RatFunc:
        obj = cls.__new__(cls)
        obj.num, obj.den, obj._hash = num, den, None
        return obj

    @classmethod
    def coerce(cls, x) -> RatFunc:
        return x if isinstance(x, RatFunc) else cls(x)

    @classmethod
    def q(cls, power: int = 1) -> RatFunc:
        return cls._trusted(LaurentPoly.q(power), _ONE)

    def is_laurent(self) -> bool:
        return self.den == _ONE

    def constant(self) -> Fraction | None:
        return self.num.constant() if self.den == _ONE else None

    def __bool__(self) -> bool:
        return bool(self.num)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RatFunc):
            try:
                other = RatFunc.coerce(other)
            except TypeError:
                return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.num) if self.den == _ONE else hash((self.num, self.den))
        return self._hash

    def __add__(self, other):
        try:
            other = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        if not other.num:
            return self
        if not self.num:
            return other
        if self.den == other.den:
            if self.den == _ONE:
                return RatFunc._trusted(self.num + other.num, _ONE)
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> RatFunc:
        return RatFunc._trusted(-self.num, self.den)

    def __sub__(self, other):
        try:
            return self + (-RatFunc.coerce(other))
        except TypeError:
            return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            other = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        if self.den == _ONE and other.den == _ONE:
            return RatFunc._trusted(self.num * other.num, _ONE)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> RatFunc:
        if not self.num:
            raise ZeroDivisionError("inverse of zero")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other):
        try:
            other = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return RatFunc.coerce(other) / self

    def __pow__(self, n: int) -> RatFunc:
        if n < 0:
            return self.inverse() ** (-n)
        return RatFunc._trusted(self.num ** n, self.den ** n)

    def evaluate(self, q) -> Fraction:
        d = self.den.evaluate(q)
        if d == 0:
            raise ZeroDivisionError(f"denominator vanishes at q={q}")
        return self.num.evaluate(q) / d

    def __str__(self) -> str:
        if self.den == _ONE:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self) -> str:
        return f"RatFunc({str(self)!r})"

    def to_json(self) -> dict:
        return {"num": str(self.num), "den": str(self.den)}

    @classmethod
    def from_json(cls, data: Mapping) -> RatFunc:
        return cls(LaurentPoly.parse(data["num"]), LaurentPoly.parse(data["den"]))


_ONE = LaurentPoly(1)


def _normalise(num: LaurentPoly, den: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    if not den:
        raise ZeroDivisionError("zero denominator")
    if not num:
        return LaurentPoly(), _ONE
    low = num._low - den._low
    np_, dp = num._poly, den._poly
    if dp.degree() > 0:
        g = np_.gcd(dp)
        if g.degree() > 0:
            np_ = np_ // g
            dp = dp // g
    c = dp.coeffs()[0]
    if c != 1:
        np_ = np_ / c
        dp = dp / c
    return LaurentPoly._raw(low, np_), LaurentPoly._raw(0, dp)


def quantum_int(n: int, eps: int = Epsilon.ODD) -> LaurentPoly:
    """The quantum integer ``[n]`` for the sign ``eps``.

    >>> str(quantum_int(2)), str(quantum_int(2, Epsilon.CLASSICAL))
    ('q - q^-1', 'q + q^-1')
    >>> str(quantum_int(-2))
    '-q + q^-1'
    """
    eps = check_eps(eps)
    if n < 0:
        return LaurentPoly(-(eps ** (-n))) * quantum_int(-n, eps)
    return LaurentPoly({n - 1 - 2 * j: eps ** j for j in range(n)})


def delta(eps: int = Epsilon.ODD) -> LaurentPoly:
    """Loop value ``-[2]``."""
    return -quantum_int(2, eps)


def as_scalar(x) -> RatFunc:
    """Coerce ints, fractions, Laurent polynomials or strings to ``RatFunc``."""
    if isinstance(x, str):
        return parse_scalar(x)
    return RatFunc.coerce(x)


def parse_scalar(text: str) -> RatFunc:
    """Parse ``"a"`` or ``"(a)/(b)"`` with ``a``, ``b`` Laurent polynomials."""
    text = text.strip()
    m = re.fullmatch(r"\((.*)\)\s*/\s*\((.*)\)", text)
    if m and _balanced(m.group(1)) and _balanced(m.group(2)):
        return RatFunc(LaurentPoly.parse(m.group(1)), LaurentPoly.parse(m.group(2)))
    if text.startswith("(") and text.endswith(")") and _balanced(text[1:-1]):
        return parse_scalar(text[1:-1])
    if "/" in text and "q" not in text.split("/")[-1] and re.fullmatch(r"[+-]?\d+/\d+", text):
        return RatFunc(LaurentPoly(Fraction(text)))
    return RatFunc(LaurentPoly.parse(text))


def _balanced(s: str) -> bool:
    depth = 0
    for ch in s:
        depth += ch == "("
        depth -= ch == ")"
        if depth < 0:
            return False
    return depth == 0
