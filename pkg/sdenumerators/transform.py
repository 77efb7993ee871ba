#  Copyright 2026 The sd-enumerators authors.
#
#  Permission is hereby granted, free of charge, to any person obtaining a copy
#  of this software, to deal in the Software without restriction, under the
#  terms of the MIT License.
#
#  THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND.

"""
Exact vectors over Q(sqrt 2) and the Kronecker powers of the Hadamard matrix.

``K = [[1, 1], [1, -1]] / sqrt(2)`` and ``K^[m]`` is its m-th Kronecker power,
with coordinate 1 as the outermost factor. ``K^[m]`` is never built for the
real computations; :func:`apply_hadamard_power` applies the unnormalised
``H^[m]`` with a butterfly and the ``sqrt(2)**m`` factor is handled separately.
"""

import logging
from typing import Iterable, Iterator, List, Sequence, Tuple, Union

import numpy as np
from sympy import Matrix, QQ, kronecker_product, sqrt
from sympy.polys.matrices import DomainMatrix

from .errors import CodeFormatError, InputError, ResourceLimitError
from .quadring import MU, ONE, RHO, SQRT2, QuadRat, plain

logger = logging.getLogger(__name__)

MAX_REFERENCE_ORDER = 4


def _object_array(values) -> np.ndarray:
    values = list(values)
    array = np.empty(len(values), dtype=object)
    array[:] = values
    return array


class SpectralVector:
    """
    Immutable vector of ``2**m`` exact elements of Q(sqrt 2).

    Entries are kept as two numpy object arrays, the rational parts and the
    ``sqrt(2)`` coefficients, so that linear maps run component-wise without
    creating an object per entry. Components are Python ints or ``QQ``
    rationals.

    Raises:
        CodeFormatError: If the length is not a power of two.
    """

    __slots__ = ("_a", "_b")

    def __init__(self, a: np.ndarray, b: np.ndarray):
        length = len(a)
        if length < 1 or length & (length - 1) or len(b) != length:
            raise CodeFormatError(f"vector length {length} is not a power of two")
        self._a = np.asarray(a, dtype=object)
        self._b = np.asarray(b, dtype=object)
        self._a.flags.writeable = False
        self._b.flags.writeable = False

    @classmethod
    def from_values(cls, values: Iterable) -> "SpectralVector":
        """Build a vector from ints, rationals or :class:`QuadRat` values."""
        values = [QuadRat.coerce(x) for x in values]
        return cls(
            _object_array(plain(x.a) for x in values),
            _object_array(plain(x.b) for x in values),
        )

    @classmethod
    def from_integers(cls, a: Sequence[int], b: Sequence[int] = None) -> "SpectralVector":
        """Build a vector from integer component arrays (``b`` defaults to zeros)."""
        a = _object_array(int(x) for x in a)
        b = np.zeros(len(a), dtype=object) if b is None else _object_array(int(x) for x in b)
        return cls(a, b)

    @classmethod
    def zeros(cls, m: int) -> "SpectralVector":
        return cls(np.zeros(1 << m, dtype=object), np.zeros(1 << m, dtype=object))

    @property
    def m(self) -> int:
        """log2 of the length."""
        return len(self._a).bit_length() - 1

    @property
    def a(self) -> np.ndarray:
        """Rational parts (read-only object array)."""
        return self._a

    @property
    def b(self) -> np.ndarray:
        """Coefficients of sqrt(2) (read-only object array)."""
        return self._b

    def __len__(self) -> int:
        return len(self._a)

    def __getitem__(self, index: int) -> QuadRat:
        return QuadRat(self._a[index], self._b[index])

    def __iter__(self) -> Iterator[QuadRat]:
        for a, b in zip(self._a, self._b):
            yield QuadRat(a, b)

    def values(self) -> List[QuadRat]:
        return list(self)

    def __repr__(self) -> str:
        return f"SpectralVector(m={self.m}, {self.values()!r})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, SpectralVector):
            return NotImplemented
        return (
            len(self) == len(other)
            and bool(np.all(self._a == other._a))
            and bool(np.all(self._b == other._b))
        )

    __hash__ = None

    def nonzero_labels(self) -> List[int]:
        """Indices of the nonzero entries, in increasing order."""
        mask = (self._a != 0) | (self._b != 0)
        return [int(i) for i in np.flatnonzero(mask)]

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "SpectralVector") -> "SpectralVector":
        self._check_length(other)
        return SpectralVector(self._a + other._a, self._b + other._b)

    def __sub__(self, other: "SpectralVector") -> "SpectralVector":
        self._check_length(other)
        return SpectralVector(self._a - other._a, self._b - other._b)

    def __neg__(self) -> "SpectralVector":
        return SpectralVector(-self._a, -self._b)

    def scale(self, factor) -> "SpectralVector":
        """Multiply every entry by one exact scalar."""
        factor = QuadRat.coerce(factor)
        c, d = plain(factor.a), plain(factor.b)
        return SpectralVector(self._a * c + self._b * (2 * d), self._a * d + self._b * c)

    def multiply(self, factors: Sequence[int]) -> "SpectralVector":
        """Entrywise product with a sequence of integers (e.g. signs)."""
        factors = _object_array(int(f) for f in factors)
        if len(factors) != len(self):
            raise InputError(f"expected {len(self)} factors, got {len(factors)}")
        return SpectralVector(self._a * factors, self._b * factors)

    def conj(self) -> "SpectralVector":
        """Apply the automorphism sqrt(2) -> -sqrt(2) entrywise."""
        return SpectralVector(self._a, -self._b)

    def take(self, indices: Sequence[int]) -> "SpectralVector":
        """Entries at ``indices``, in that order (length must stay a power of two)."""
        indices = np.asarray(indices, dtype=np.int64)
        return SpectralVector(self._a[indices], self._b[indices])

    def halves(self) -> Tuple["SpectralVector", "SpectralVector"]:
        """Split by the leading label bit: entries ``0...`` and entries ``1...``."""
        if len(self) < 2:
            raise InputError("a vector of length 1 has no halves")
        half = len(self) // 2
        return (
            SpectralVector(self._a[:half], self._b[:half]),
            SpectralVector(self._a[half:], self._b[half:]),
        )

    def with_entry(self, index: int, value) -> "SpectralVector":
        """Copy of the vector with one entry replaced."""
        value = QuadRat.coerce(value)
        a, b = self._a.copy(), self._b.copy()
        a[index], b[index] = plain(value.a), plain(value.b)
        return SpectralVector(a, b)

    def _check_length(self, other: "SpectralVector"):
        if len(self) != len(other):
            raise InputError(f"vector lengths differ: {len(self)} and {len(other)}")


VectorLike = Union[SpectralVector, Sequence]


def as_vector(v: VectorLike) -> SpectralVector:
    if isinstance(v, SpectralVector):
        return v
    return SpectralVector.from_values(v)


def _butterfly(x: np.ndarray, m: int) -> np.ndarray:
    for stage in range(m):
        blocks = x.reshape(1 << stage, 2, -1)
        lo, hi = blocks[:, 0, :], blocks[:, 1, :]
        x = np.stack((lo + hi, lo - hi), axis=1).reshape(-1)
    return x


def apply_hadamard_power(v: VectorLike) -> SpectralVector:
    """
    Return ``v H^[m]`` for the unnormalised ``H = [[1, 1], [1, -1]]``.

    Stage ``s`` combines the entries whose labels differ in the ``s``-th
    most significant bit. Exact, ``O(m 2**m)`` operations.

    Raises:
        CodeFormatError: If the length is not a power of two.
    """
    v = as_vector(v)
    m = v.m
    return SpectralVector(_butterfly(v.a, m), _butterfly(v.b, m))


def sqrt2_power(m: int) -> QuadRat:
    """``sqrt(2)**m`` as an exact value."""
    whole = QuadRat(1 << (m // 2))
    return whole * SQRT2 if m % 2 else whole


def apply_k_power(v: VectorLike) -> SpectralVector:
    """Return ``v K^[m]`` exactly: the butterfly scaled by ``(sqrt(2)/2)**m``."""
    v = as_vector(v)
    return apply_hadamard_power(v).scale(sqrt2_power(v.m).inverse())


def is_eigenvector_one(v: VectorLike) -> bool:
    """True iff ``v K^[m] == v``, tested as ``v H^[m] == sqrt(2)**m v``."""
    v = as_vector(v)
    return apply_hadamard_power(v) == v.scale(sqrt2_power(v.m))


def eigenbasis_row(m: int, label) -> SpectralVector:
    """
    The row of ``B^[m]`` indexed by ``label``.

    ``B`` has rows ``(1, RHO)`` for bit 0 and ``(1, MU)`` for bit 1; the
    row of ``B^[m]`` is the Kronecker product of the rows picked by the bits
    of ``label``, coordinate 1 outermost. Even-weight labels give
    eigenvectors of ``K^[m]`` for 1 and odd-weight labels for -1.

    Args:
        m (int): Number of coordinates.
        label: An int below ``2**m`` or a :class:`~sdenumerators.codes.BinaryWord`.
    """
    value = getattr(label, "value", label)
    if not 0 <= value < (1 << m):
        raise InputError(f"label {value} is not a word of length {m}")
    entries = [ONE]
    for shift in range(m - 1, -1, -1):
        row = (ONE, MU) if (value >> shift) & 1 else (ONE, RHO)
        entries = [x * y for x in entries for y in row]
    return SpectralVector.from_values(entries)


def eigenbasis_rank(rows: Sequence[VectorLike]) -> int:
    """Exact rank of a list of vectors over Q(sqrt 2)."""
    rows = [as_vector(r) for r in rows]
    if not rows:
        return 0
    field = QQ.algebraic_field(sqrt(2))
    entries = [[field.from_sympy(x.to_sympy()) for x in row] for row in rows]
    matrix = DomainMatrix(entries, (len(rows), len(rows[0])), field)
    return matrix.rank()


def k_power_matrix(m: int) -> Matrix:
    """
    ``K^[m]`` materialised as a sympy matrix.

    Only for cross-checking the butterfly on small sizes.

    Raises:
        ResourceLimitError: If ``m`` is above 4.
    """
    if not 1 <= m <= MAX_REFERENCE_ORDER:
        raise ResourceLimitError(
            f"K^[{m}] is only materialised for 1 <= m <= {MAX_REFERENCE_ORDER}"
        )
    k = Matrix([[1, 1], [1, -1]]) / sqrt(2)
    result = k
    for _ in range(m - 1):
        result = kronecker_product(result, k)
    return Matrix(result)


def apply_k_power_reference(v: VectorLike) -> SpectralVector:
    """``v K^[m]`` through the explicit matrix (``m <= 4``)."""
    v = as_vector(v)
    row = Matrix([[x.to_sympy() for x in v]])
    product = row * k_power_matrix(v.m)
    return SpectralVector.from_values(QuadRat.from_sympy(x) for x in product)


def spectral_split(v: VectorLike) -> Tuple[SpectralVector, SpectralVector]:
    """
    Split ``v`` into parts fixed and negated by ``K^[m]``.

    Returns ``(v_plus, v_minus)`` with ``v == v_plus + v_minus``.
    """
    v = as_vector(v)
    image = apply_k_power(v)
    half = QuadRat("1/2")
    return (v + image).scale(half), (v - image).scale(half)
