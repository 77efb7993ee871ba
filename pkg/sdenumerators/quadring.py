#  Copyright 2026 The sd-enumerators authors.
#
#  Permission is hereby granted, free of charge, to any person obtaining a copy
#  of this software, to deal in the Software without restriction, under the
#  terms of the MIT License.
#
#  THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND.

"""
Exact arithmetic in the quadratic field Q(sqrt 2).

An element is stored as ``a + b*sqrt(2)`` where ``a`` and ``b`` are sympy
``QQ`` rationals (gmpy2-backed when gmpy2 is installed). Two elements matter
everywhere downstream::

    RHO = sqrt(2) - 1      MU = -sqrt(2) - 1      RHO * MU == -1

Values print in the basis (1, RHO): ``c + d*RHO`` is written ``"<d>*p + <c>"``.
"""

import logging
import numbers
import re
from functools import lru_cache, total_ordering
from typing import Dict, List, Tuple, Union

from sympy import QQ, Rational, sqrt, sympify

logger = logging.getLogger(__name__)

_SQRT2_EXPR = sqrt(2)


def _rational(value):
    """Convert ``value`` to a ``QQ`` element without ever touching floats."""
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, numbers.Integral):
        return QQ(int(value))
    if QQ.of_type(value):
        return value
    if isinstance(value, str):
        num, sep, den = value.strip().partition("/")
        try:
            return QQ(int(num), int(den)) if sep else QQ(int(num))
        except ValueError:
            raise ValueError(f"'{value}' is not an exact rational")
    if isinstance(value, Rational):
        return QQ.from_sympy(value)
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def format_rational(value) -> str:
    """Render a rational as ``"n"`` or ``"n/d"``."""
    value = _rational(value)
    num, den = int(value.numerator), int(value.denominator)
    return str(num) if den == 1 else f"{num}/{den}"


def plain(value):
    """Return a Python ``int`` when ``value`` is integral, else the ``QQ`` element."""
    value = _rational(value)
    if value.denominator == 1:
        return int(value.numerator)
    return value


def _sgn(value) -> int:
    return (value > 0) - (value < 0)


@total_ordering
class QuadRat:
    """
    Immutable element ``a + b*sqrt(2)`` of Q(sqrt 2).

    Args:
        a: Rational part (int, ``QQ`` element, sympy Rational or ``"p/q"``).
        b: Coefficient of ``sqrt(2)``.

    Raises:
        TypeError: If a component is a float or another non-exact type.
    """

    __slots__ = ("_a", "_b")

    def __init__(self, a=0, b=0):
        self._a = _rational(a)
        self._b = _rational(b)

    @classmethod
    def _raw(cls, a, b) -> "QuadRat":
        obj = object.__new__(cls)
        obj._a = a
        obj._b = b
        return obj

    @classmethod
    def coerce(cls, value) -> "QuadRat":
        """Return ``value`` as a QuadRat, accepting ints and rationals."""
        if isinstance(value, QuadRat):
            return value
        return cls(value)

    @property
    def a(self):
        """Rational part."""
        return self._a

    @property
    def b(self):
        """Coefficient of sqrt(2)."""
        return self._b

    def __repr__(self) -> str:
        return f"QuadRat({format_rational(self._a)}, {format_rational(self._b)})"

    def __str__(self) -> str:
        sign = "-" if self._b < 0 else "+"
        return f"{format_rational(self._a)} {sign} {format_rational(abs(self._b))}*sqrt(2)"

    # -- comparisons -------------------------------------------------------

    def __eq__(self, other) -> bool:
        try:
            other = QuadRat.coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self._a == other._a and self._b == other._b

    def __hash__(self) -> int:
        if self._b == 0:
            return hash(self._a)
        return hash((self._a, self._b))

    def __lt__(self, other) -> bool:
        try:
            other = QuadRat.coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return (self - other).sign() < 0

    def sign(self) -> int:
        """
        Exact sign of the real number ``a + b*sqrt(2)``.

        Opposite-signed components are resolved by comparing ``a**2`` with
        ``2*b**2``; the two are never equal because sqrt(2) is irrational.
        """
        sa, sb = _sgn(self._a), _sgn(self._b)
        if sa >= 0 and sb >= 0:
            return 0 if sa == 0 and sb == 0 else 1
        if sa <= 0 and sb <= 0:
            return -1
        excess = self._a * self._a - 2 * self._b * self._b
        if sa > 0:
            return 1 if excess > 0 else -1
        return -1 if excess > 0 else 1

    def __bool__(self) -> bool:
        return bool(self._a) or bool(self._b)

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        try:
            other = QuadRat.coerce(other)
        except TypeError:
            return NotImplemented
        return QuadRat._raw(self._a + other._a, self._b + other._b)

    __radd__ = __add__

    def __neg__(self):
        return QuadRat._raw(-self._a, -self._b)

    def __sub__(self, other):
        try:
            other = QuadRat.coerce(other)
        except TypeError:
            return NotImplemented
        return QuadRat._raw(self._a - other._a, self._b - other._b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            other = QuadRat.coerce(other)
        except TypeError:
            return NotImplemented
        a, b = self._a, self._b
        c, d = other._a, other._b
        return QuadRat._raw(a * c + 2 * b * d, a * d + b * c)

    __rmul__ = __mul__

    def norm(self):
        """Field norm ``a**2 - 2*b**2`` (product with the conjugate)."""
        return self._a * self._a - 2 * self._b * self._b

    def inverse(self) -> "QuadRat":
        """
        Multiplicative inverse ``conj(x) / norm(x)``.

        Raises:
            ZeroDivisionError: If the value is zero.
        """
        if not self:
            raise ZeroDivisionError("division by zero in Q(sqrt 2)")
        n = self.norm()
        return QuadRat._raw(self._a / n, -self._b / n)

    def __truediv__(self, other):
        try:
            other = QuadRat.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return QuadRat.coerce(other) * self.inverse()

    def __pow__(self, exponent: int):
        if not isinstance(exponent, numbers.Integral):
            return NotImplemented
        exponent = int(exponent)
        if exponent < 0:
            return self.inverse() ** -exponent
        result, base = ONE, self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def conj(self) -> "QuadRat":
        """The automorphism sending sqrt(2) to -sqrt(2) (RHO to MU)."""
        return QuadRat._raw(self._a, -self._b)

    @property
    def is_rational(self) -> bool:
        return self._b == 0

    # -- conversions -------------------------------------------------------

    def to_rho_basis(self) -> Tuple[object, object]:
        """Return ``(c, d)`` with ``self == c + d*RHO``."""
        return self._a + self._b, self._b

    @classmethod
    def from_rho_basis(cls, c, d) -> "QuadRat":
        """Inverse of :meth:`to_rho_basis`."""
        c, d = _rational(c), _rational(d)
        return cls._raw(c - d, d)

    def to_sympy(self):
        """The value as a sympy expression ``a + b*sqrt(2)``."""
        return QQ.to_sympy(self._a) + QQ.to_sympy(self._b) * _SQRT2_EXPR

    @classmethod
    def from_sympy(cls, expr) -> "QuadRat":
        """
        Read back a sympy expression of the form ``a + b*sqrt(2)``.

        Raises:
            ValueError: If the expression is not in Q(sqrt 2).
        """
        expr = sympify(expr).expand()
        b = expr.coeff(_SQRT2_EXPR)
        a = (expr - b * _SQRT2_EXPR).expand()
        if not (a.is_Rational and b.is_Rational):
            raise ValueError(f"{expr} is not an element of Q(sqrt 2)")
        return cls(a, b)


ZERO = QuadRat(0, 0)
ONE = QuadRat(1, 0)
SQRT2 = QuadRat(0, 1)
RHO = QuadRat(-1, 1)
MU = QuadRat(-1, -1)

Scalar = Union[int, QuadRat]


def conj(x: Scalar) -> QuadRat:
    """Apply the conjugation automorphism (RHO to MU)."""
    return QuadRat.coerce(x).conj()


@lru_cache(maxsize=None)
def rho_pow(k: int) -> QuadRat:
    """
    Exact ``RHO**k`` for any integer ``k``.

    Negative powers use ``RHO**-1 == -MU == 1 + sqrt(2)``.
    """
    if k < 0:
        return (-MU) ** (-k)
    return RHO ** k


def rho_power_coefficients(k_max: int) -> List[Tuple[int, int]]:
    """
    Integer pairs ``(a_k, b_k)`` with ``RHO**k == a_k + b_k*sqrt(2)``.

    Args:
        k_max (int): Largest exponent, inclusive.

    Returns:
        list: ``k_max + 1`` pairs, starting with ``(1, 0)``.
    """
    a, b = 1, 0
    table = [(a, b)]
    for _ in range(k_max):
        a, b = 2 * b - a, a - b
        table.append((a, b))
    return table


def to_rho_basis(x: Scalar) -> Tuple[object, object]:
    """Return ``(c, d)`` with ``x == c + d*RHO``."""
    return QuadRat.coerce(x).to_rho_basis()


def from_rho_basis(c, d) -> QuadRat:
    """Build ``c + d*RHO``."""
    return QuadRat.from_rho_basis(c, d)


def format_rho(x: Scalar) -> str:
    """
    Render ``x`` as ``"<d>*p + <c>"`` where ``x == c + d*RHO``.

    Zero terms are dropped and a unit coefficient prints as ``p`` or ``-p``,
    so ``RHO`` is ``"p"`` and ``1`` is ``"1"``.
    """
    c, d = to_rho_basis(x)
    if d == 0:
        return format_rational(c)
    if d == 1:
        head = "p"
    elif d == -1:
        head = "-p"
    else:
        head = f"{format_rational(d)}*p"
    if c == 0:
        return head
    sign = "-" if c < 0 else "+"
    return f"{head} {sign} {format_rational(abs(c))}"


_TERM = re.compile(r"[+-]?[^+-]+")


def parse_rho(text: str) -> QuadRat:
    """
    Parse the ``"<d>*p + <c>"`` form written by :func:`format_rho`.

    Terms may appear in any order and whitespace is ignored.

    Raises:
        ValueError: If the text is not a sum of rational and ``p`` terms.
    """
    compact = text.replace(" ", "").replace("\t", "")
    terms = _TERM.findall(compact)
    if not terms or "".join(terms) != compact:
        raise ValueError(f"'{text}' is not of the form '<d>*p + <c>'")
    c, d = QQ(0), QQ(0)
    for term in terms:
        if term.endswith("p"):
            coefficient = term[:-1]
            if coefficient.endswith("*"):
                coefficient = coefficient[:-1]
            if coefficient in ("", "+"):
                d += 1
            elif coefficient == "-":
                d -= 1
            else:
                d += _rational(coefficient)
        else:
            c += _rational(term)
    return QuadRat.from_rho_basis(c, d)


def to_structured(x: Scalar) -> Dict[str, str]:
    """Return ``{"const": c, "rho": d}`` with decimal or ``"n/d"`` strings."""
    c, d = to_rho_basis(x)
    return {"const": format_rational(c), "rho": format_rational(d)}


def from_structured(record: Dict[str, str]) -> QuadRat:
    """Inverse of :func:`to_structured`."""
    try:
        return QuadRat.from_rho_basis(record["const"], record["rho"])
    except KeyError as e:
        raise ValueError(f"structured value is missing the {e} field")


def approx(x: Scalar, digits: int = 30) -> str:
    """Decimal approximation for display only."""
    return str(QuadRat.coerce(x).to_sympy().evalf(digits))
