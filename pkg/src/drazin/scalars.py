"""Exact scalar arithmetic: Gaussian rationals and their polynomials.

Everything in this package runs over Q(i), complex numbers whose real and
imaginary parts are rational.  ``fractions.Fraction`` supplies
arbitrary-precision components, so no operation ever rounds.
``ScalarPolynomial`` adds the small amount of univariate polynomial
arithmetic needed to take exact limits of rational matrix expressions at 0.
"""

from __future__ import annotations

import re as _re
from fractions import Fraction


def _component(value):
    """Turn one real component into a Fraction, refusing lossy types."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(
        "cannot build an exact rational from %r; use int, Fraction or 'p/q'"
        % type(value).__name__
    )


_TERM_RE = _re.compile(r"[+-]?[^+-]+")


def _parse_text(text):
    """Parse canonical scalar text like '1/2-3/4*i' into two Fractions."""
    s = text.strip().replace(" ", "")
    if not s:
        raise ValueError("empty scalar text")
    terms = _TERM_RE.findall(s)
    if "".join(terms) != s or not 1 <= len(terms) <= 2:
        raise ValueError("malformed scalar text: %r" % text)
    re_part = im_part = None
    for term in terms:
        if term.endswith("i"):
            if im_part is not None:
                raise ValueError("two imaginary terms in %r" % text)
            body = term[:-1]
            if body.endswith("*"):
                body = body[:-1]
            if body in ("", "+"):
                im_part = Fraction(1)
            elif body == "-":
                im_part = Fraction(-1)
            else:
                im_part = Fraction(body)
        else:
            if re_part is not None:
                raise ValueError("two real terms in %r" % text)
            re_part = Fraction(term)
    return re_part or Fraction(0), im_part or Fraction(0)


class GaussianRational:
    """A complex number with exact rational real and imaginary parts.

    Instances are immutable and hashable, and arithmetic mixes freely with
    ``int`` and ``Fraction``.  Strings use the textual form ``p/q+r/s*i``
    (either part may be omitted, ``i`` stands alone for a unit coefficient).
    ``complex`` literals are accepted only when both parts are integral, so
    fixtures can be written ``GaussianRational.parse(2 - 2j)`` without any
    risk of floating-point loss; every other float is rejected.
    """

    __slots__ = ("_re", "_im")

    def __init__(self, real=0, imag=0):
        if isinstance(real, str) and isinstance(imag, int) and imag == 0:
            self._re, self._im = _parse_text(real)
            return
        self._re = _component(real)
        self._im = _component(imag)

    @classmethod
    def parse(cls, value):
        """Coerce ``value`` to a GaussianRational.

        Accepts GaussianRational, int, Fraction, canonical text, a
        ``[re, im]`` pair of ints or ``'p/q'`` strings, and complex numbers
        with integral parts.
        """
        if isinstance(value, cls):
            return value
        if isinstance(value, (list, tuple)):
            if len(value) != 2:
                raise ValueError("scalar pair must have exactly two components")
            return cls(_component(value[0]), _component(value[1]))
        if isinstance(value, complex):
            if not (value.real.is_integer() and value.imag.is_integer()):
                raise TypeError(
                    "complex literals are exact only with integer parts; "
                    "write non-integers as text like '1/2+3/4*i'"
                )
            return cls(int(value.real), int(value.imag))
        if isinstance(value, (int, Fraction, str)):
            return cls(value)
        raise TypeError("cannot coerce %r to GaussianRational" % type(value).__name__)

    @property
    def re(self) -> Fraction:
        return self._re

    @property
    def im(self) -> Fraction:
        return self._im

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self._re, -self._im)

    def norm_squared(self) -> Fraction:
        """re^2 + im^2, the multiplicative norm of Q(i)."""
        return self._re * self._re + self._im * self._im

    @staticmethod
    def _coerce(value):
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, (int, Fraction)):
            return GaussianRational(value)
        if isinstance(value, complex):
            try:
                return GaussianRational.parse(value)
            except TypeError:
                return None
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return GaussianRational(self._re + other._re, self._im + other._im)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return GaussianRational(self._re - other._re, self._im - other._im)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other.__sub__(self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return GaussianRational(
            self._re * other._re - self._im * other._im,
            self._re * other._im + self._im * other._re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        norm = other.norm_squared()
        if norm == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return GaussianRational(
            (self._re * other._re + self._im * other._im) / norm,
            (self._im * other._re - self._re * other._im) / norm,
        )

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other.__truediv__(self)

    def __neg__(self):
        return GaussianRational(-self._re, -self._im)

    def __pos__(self):
        return self

    def __bool__(self):
        return self._re != 0 or self._im != 0

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._re == other._re and self._im == other._im

    def __hash__(self):
        return hash((self._re, self._im))

    def __str__(self):
        if self._im == 0:
            return str(self._re)
        if self._im == 1:
            imag = "i"
        elif self._im == -1:
            imag = "-i"
        else:
            imag = "%s*i" % self._im
        if self._re == 0:
            return imag
        if imag.startswith("-"):
            return "%s%s" % (self._re, imag)
        return "%s+%s" % (self._re, imag)

    def __repr__(self):
        return "GaussianRational(%r)" % str(self)


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
IMAG_UNIT = GaussianRational(0, 1)


class ScalarPolynomial:
    """Univariate polynomial with GaussianRational coefficients.

    Coefficients are stored lowest degree first with trailing zeros trimmed,
    so the zero polynomial has an empty coefficient tuple and degree -1.
    The variable name only affects printing; equality ignores it.
    """

    __slots__ = ("_coeffs", "_variable")

    def __init__(self, coeffs=(), variable="x"):
        cs = [GaussianRational.parse(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self._coeffs = tuple(cs)
        self._variable = variable

    @property
    def coeffs(self):
        return self._coeffs

    @property
    def variable(self) -> str:
        return self._variable

    @property
    def degree(self) -> int:
        return len(self._coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    def coefficient(self, power: int) -> GaussianRational:
        """Coefficient of the given power, zero beyond the stored degree."""
        if 0 <= power < len(self._coeffs):
            return self._coeffs[power]
        return ZERO

    def valuation(self):
        """Multiplicity of the root at 0, or None for the zero polynomial."""
        for power, c in enumerate(self._coeffs):
            if c:
                return power
        return None

    @staticmethod
    def _coerce(value):
        if isinstance(value, ScalarPolynomial):
            return value
        scalar = GaussianRational._coerce(value)
        if scalar is None:
            return None
        return ScalarPolynomial((scalar,))

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        summed = list(a)
        for k, c in enumerate(b):
            summed[k] = summed[k] + c
        return ScalarPolynomial(summed, self._variable)

    __radd__ = __add__

    def __neg__(self):
        return ScalarPolynomial(tuple(-c for c in self._coeffs), self._variable)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.__add__(-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other.__sub__(self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.is_zero or other.is_zero:
            return ScalarPolynomial(variable=self._variable)
        out = [ZERO] * (len(self._coeffs) + len(other._coeffs) - 1)
        for p, a in enumerate(self._coeffs):
            if not a:
                continue
            for q, b in enumerate(other._coeffs):
                out[p + q] = out[p + q] + a * b
        return ScalarPolynomial(out, self._variable)

    __rmul__ = __mul__

    def __call__(self, point):
        point = GaussianRational.parse(point)
        acc = ZERO
        for c in reversed(self._coeffs):
            acc = acc * point + c
        return acc

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(self._coeffs)

    def __str__(self):
        if self.is_zero:
            return "0"
        parts = []
        for power, c in enumerate(self._coeffs):
            if not c:
                continue
            if power == 0:
                parts.append(str(c))
            elif power == 1:
                parts.append("(%s)*%s" % (c, self._variable))
            else:
                parts.append("(%s)*%s^%d" % (c, self._variable, power))
        return " + ".join(parts)

    def __repr__(self):
        return "ScalarPolynomial(%s)" % (list(map(str, self._coeffs)),)


POLY_ZERO = ScalarPolynomial()
POLY_ONE = ScalarPolynomial((1,))


def poly_limit_at_zero(num: ScalarPolynomial, den: ScalarPolynomial) -> GaussianRational:
    """Exact limit of num(x)/den(x) as x approaches 0.

    Writing ord(p) for the multiplicity of p's root at 0, the limit is the
    ratio of the two order-matching coefficients when ord(num) = ord(den),
    zero when ord(num) > ord(den) (including num = 0), and an
    ArithmeticError('limit diverges') when ord(num) < ord(den).  A zero
    denominator is a ZeroDivisionError.
    """
    if den.is_zero:
        raise ZeroDivisionError("limit with zero denominator polynomial")
    if num.is_zero:
        return ZERO
    ord_num = num.valuation()
    ord_den = den.valuation()
    if ord_num < ord_den:
        raise ArithmeticError("limit diverges")
    if ord_num > ord_den:
        return ZERO
    return num.coefficient(ord_num) / den.coefficient(ord_den)
