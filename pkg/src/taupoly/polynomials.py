"""Exact univariate polynomial arithmetic.

Two dense coefficient-list types over exact scalars:

* :class:`Polynomial` over arbitrary-precision integers.  Every counting
  polynomial in the package (dimension, face-count, descent, Narayana)
  lives here; the largest table entries are around ``2.1e12`` and
  intermediate products in the oracles go well past 64 bits, so Python
  integers are mandatory, not a convenience.
* :class:`RatPolynomial` over :class:`fractions.Fraction`, used as the
  coefficient ring of truncated exponential generating functions, where
  division by ``n!`` is unavoidable.

Both are immutable and hashable; all operations return fresh values.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Iterator

_DECIMAL_RE = re.compile(r"^-?\d+$")


def _strip(coeffs: tuple, zero) -> tuple:
    n = len(coeffs)
    while n > 0 and coeffs[n - 1] == zero:
        n -= 1
    return coeffs[:n]


class Polynomial:
    """Dense polynomial in one variable t with integer coefficients.

    Coefficients are stored ascending in the power of t and the trailing
    (highest-index) stored coefficient is nonzero; the zero polynomial is
    the empty tuple.  The degree of the zero polynomial is -1, which is
    used internally and never surfaces in output.

    >>> p = Polynomial([1, 6, 6, 1])
    >>> str(p)
    't^3 + 6t^2 + 6t + 1'
    >>> p(1)
    14
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        tup = tuple(int(c) for c in coeffs)
        object.__setattr__(self, "coeffs", _strip(tup, 0))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def constant(cls, c: int) -> "Polynomial":
        return cls((c,))

    @classmethod
    def monomial(cls, coefficient: int, power: int) -> "Polynomial":
        if coefficient == 0:
            return cls()
        return cls((0,) * power + (coefficient,))

    @classmethod
    def from_decimal_strings(cls, strings: Iterable[str]) -> "Polynomial":
        coeffs = []
        for s in strings:
            if not _DECIMAL_RE.match(s):
                raise ValueError(f"not a decimal integer string: {s!r}")
            coeffs.append(int(s))
        return cls(coeffs)

    # -- structure ----------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self) -> Iterator[int]:
        return iter(self.coeffs)

    def coefficient(self, power: int) -> int:
        """Coefficient of t**power, 0 beyond the stored range."""
        if 0 <= power < len(self.coeffs):
            return self.coeffs[power]
        return 0

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __neg__(self) -> "Polynomial":
        return Polynomial(tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, int):
            return Polynomial(tuple(c * other for c in self.coeffs))
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return Polynomial(out)

    __rmul__ = __mul__

    def __call__(self, x: int) -> int:
        value = 0
        for c in reversed(self.coeffs):
            value = value * x + c
        return value

    def shifted(self, delta: int) -> "Polynomial":
        """Return p(t + delta), computed exactly by Horner in (t + delta).

        >>> str(Polynomial([1, 6, 6, 1]).shifted(1))
        't^3 + 9t^2 + 21t + 14'
        """
        out: tuple = ()
        for c in reversed(self.coeffs):
            # out <- out*(t+delta) + c
            shifted_up = (0,) + out
            scaled = tuple(delta * v for v in out) + (0,) * (len(shifted_up) - len(out))
            out = tuple(u + v for u, v in zip(shifted_up, scaled))
            out = (out[0] + c,) + out[1:] if out else (c,)
        return Polynomial(out)

    # -- predicates ---------------------------------------------------

    def is_palindromic(self, degree: int | None = None) -> bool:
        """True iff a_i == a_(degree-i) for all i, missing coefficients read as 0.

        ``degree`` defaults to the actual degree and must not be smaller.
        """
        if degree is None:
            degree = max(self.degree, 0)
        if degree < self.degree:
            raise ValueError("degree must be at least the degree of the polynomial")
        return all(
            self.coefficient(i) == self.coefficient(degree - i)
            for i in range(degree // 2 + 1)
        )

    def is_unimodal(self) -> bool:
        """True iff the coefficient sequence rises weakly, then falls weakly."""
        seq = self.coeffs
        falling = False
        for i in range(len(seq) - 1):
            if seq[i + 1] < seq[i]:
                falling = True
            elif seq[i + 1] > seq[i] and falling:
                return False
        return True

    # -- serialization ------------------------------------------------

    def to_decimal_strings(self) -> list[str]:
        """JSON form: ascending coefficients as decimal strings.

        Strings rather than numbers keep values past 2**53 exact for any
        JSON consumer.
        """
        return [str(c) for c in self.coeffs]

    # -- dunders --------------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, Polynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(("Polynomial", self.coeffs))

    def __repr__(self) -> str:
        return f"Polynomial({list(self.coeffs)!r})"

    def __str__(self) -> str:
        return _render(self.coeffs, str)


ZERO = Polynomial()
ONE = Polynomial((1,))
T = Polynomial((0, 1))


def _render(coeffs, fmt) -> str:
    if not coeffs:
        return "0"
    parts = []
    for power in range(len(coeffs) - 1, -1, -1):
        c = coeffs[power]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = -c if c < 0 else c
        if power == 0:
            body = fmt(mag)
        else:
            tpow = "t" if power == 1 else f"t^{power}"
            body = tpow if mag == 1 else f"{fmt(mag)}{tpow}"
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    text = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text


# -- functional aliases -------------------------------------------------


def add(p: Polynomial, q: Polynomial) -> Polynomial:
    return p + q


def mul(p: Polynomial, q: Polynomial) -> Polynomial:
    return p * q


def substitute_shift(p: Polynomial, delta: int) -> Polynomial:
    return p.shifted(delta)


def evaluate(p: Polynomial, x: int) -> int:
    return p(x)


def is_palindromic(p: Polynomial, degree: int) -> bool:
    return p.is_palindromic(degree)


def is_unimodal(p: Polynomial) -> bool:
    return p.is_unimodal()


class RatPolynomial:
    """Dense polynomial in t with exact rational coefficients.

    Fractions are normalized by construction (lowest terms, positive
    denominator), so equality is plain tuple equality.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        tup = tuple(Fraction(c) for c in coeffs)
        object.__setattr__(self, "coeffs", _strip(tup, Fraction(0)))

    def __setattr__(self, name, value):
        raise AttributeError("RatPolynomial is immutable")

    @classmethod
    def from_polynomial(cls, p: Polynomial) -> "RatPolynomial":
        return cls(p.coeffs)

    @classmethod
    def constant(cls, c) -> "RatPolynomial":
        return cls((Fraction(c),))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def coefficient(self, power: int) -> Fraction:
        if 0 <= power < len(self.coeffs):
            return self.coeffs[power]
        return Fraction(0)

    def __add__(self, other: "RatPolynomial") -> "RatPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return RatPolynomial(out)

    def __sub__(self, other: "RatPolynomial") -> "RatPolynomial":
        return self + (-other)

    def __neg__(self) -> "RatPolynomial":
        return RatPolynomial(tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return RatPolynomial(tuple(c * other for c in self.coeffs))
        if not isinstance(other, RatPolynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return RatPolynomial()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return RatPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "RatPolynomial":
        if exponent < 0:
            raise ValueError("negative power of a polynomial")
        result = RatPolynomial((1,))
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other) -> bool:
        return isinstance(other, RatPolynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(("RatPolynomial", self.coeffs))

    def __repr__(self) -> str:
        return f"RatPolynomial({list(self.coeffs)!r})"

    def __str__(self) -> str:
        return _render(self.coeffs, str)

    def to_strings(self) -> list[str]:
        return [str(c) for c in self.coeffs]


RAT_ZERO = RatPolynomial()
RAT_ONE = RatPolynomial((1,))
RAT_T = RatPolynomial((0, 1))
