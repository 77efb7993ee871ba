#  Copyright 2026 The sd-enumerators authors.
#
#  Permission is hereby granted, free of charge, to any person obtaining a copy
#  of this software, to deal in the Software without restriction, under the
#  terms of the MIT License.
#
#  THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND.

"""
The exact weight enumerator of a code and its derivatives.

The exact enumerator ``W`` of a length-``n`` code is its 0/1 indicator over
all ``2**n`` words. The derivative of order ``t`` is the vector of length
``2**(n - t)`` whose entry at a suffix ``v`` is the sum of ``RHO**wt(u)`` over
all codewords ``uv`` with a ``t``-bit prefix ``u``::

    >>> from sdenumerators import builtin_code, derivative, format_rho
    >>> d = derivative(builtin_code("golay24"), 19)
    >>> format_rho(d[0])
    '-1167936*p + 483776'
"""

import json
import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .codes import (
    MAX_ENUMERATION_DIMENSION,
    LinearCode,
    map_codeword_blocks,
    popcount,
    sum_codeword_blocks,
    word_constant,
    word_dtype,
)
from .config import Settings
from .errors import CodeFormatError, InputError, ResourceLimitError
from .quadring import (
    RHO,
    QuadRat,
    format_rho,
    from_structured,
    parse_rho,
    rho_pow,
    rho_power_coefficients,
    to_structured,
)
from .transform import SpectralVector

logger = logging.getLogger(__name__)

#: Largest dense exact enumerator that will be materialised.
MAX_DENSE_LENGTH = 24
#: Largest code dimension whose codewords will be listed.
MAX_SPARSE_DIMENSION = MAX_ENUMERATION_DIMENSION
#: Largest number of cells in the (suffix, prefix weight) count table.
MAX_TABLE_CELLS = 1 << 27
#: Above length 24, derivatives of order below ``n - 26`` are refused.
MAX_SUFFIX_BITS = 26

FORMATS = ("paper", "structured")


@dataclass(frozen=True, eq=False)
class ExactEnumerator:
    """
    Sparse exact weight enumerator: the sorted codeword labels.

    Args:
        n (int): Code length.
        labels (numpy.ndarray): Sorted codeword labels.
    """

    n: int
    labels: np.ndarray

    def __contains__(self, label: int) -> bool:
        index = int(np.searchsorted(self.labels, label))
        return index < len(self.labels) and int(self.labels[index]) == label

    def __len__(self) -> int:
        return len(self.labels)

    @property
    def support(self) -> frozenset:
        return frozenset(int(x) for x in self.labels)

    def to_vector(self) -> SpectralVector:
        """
        The dense 0/1 vector of length ``2**n``.

        Raises:
            ResourceLimitError: If ``n`` is above 24.
        """
        if self.n > MAX_DENSE_LENGTH:
            raise ResourceLimitError(
                f"the dense enumerator of a length-{self.n} code has 2**{self.n} entries; "
                f"only lengths up to {MAX_DENSE_LENGTH} are materialised"
            )
        a = np.zeros(1 << self.n, dtype=object)
        a[self.labels.astype(np.int64)] = 1
        return SpectralVector(a, np.zeros(1 << self.n, dtype=object))


def exact_enumerator(code: LinearCode, settings: Optional[Settings] = None) -> ExactEnumerator:
    """
    List every codeword of ``code`` as a label.

    Raises:
        ResourceLimitError: If the code has more than ``2**28`` codewords.
    """
    if code.dimension > MAX_SPARSE_DIMENSION:
        raise ResourceLimitError(
            f"{code} has 2**{code.dimension} codewords; at most 2**{MAX_SPARSE_DIMENSION} are listed"
        )
    blocks = map_codeword_blocks(code, lambda block: block.copy(), settings)
    labels = np.sort(np.concatenate(blocks))
    return ExactEnumerator(code.n, labels)


@dataclass(frozen=True)
class Derivative:
    """
    A derivative of order ``order`` of the exact enumerator of a length-``n`` code.

    ``vector`` has ``2**(n - order)`` entries indexed by suffix label.
    """

    n: int
    order: int
    vector: SpectralVector

    def __post_init__(self):
        if not 0 <= self.order <= self.n:
            raise InputError(f"order {self.order} outside 0..{self.n}")
        if len(self.vector) != 1 << (self.n - self.order):
            raise CodeFormatError(
                f"a derivative of order {self.order} of a length-{self.n} code has "
                f"{1 << (self.n - self.order)} entries, got {len(self.vector)}"
            )

    def __len__(self) -> int:
        return len(self.vector)

    def __getitem__(self, index: int) -> QuadRat:
        return self.vector[index]

    def __iter__(self):
        return iter(self.vector)

    @property
    def scalar(self) -> QuadRat:
        """The single entry of an order-``n`` derivative."""
        if self.order != self.n:
            raise InputError(f"order {self.order} derivative is not a scalar (n={self.n})")
        return self.vector[0]


def _check_order(code: LinearCode, t: int):
    n = code.n
    if not 0 <= t <= n:
        raise InputError(f"derivative order {t} outside 0..{n}")
    if n > MAX_DENSE_LENGTH and n - t > MAX_SUFFIX_BITS:
        raise ResourceLimitError(
            f"order {t} of a length-{n} code needs 2**{n - t} entries; "
            f"use an order of at least {n - MAX_SUFFIX_BITS}"
        )
    cells = (1 << (n - t)) * (t + 1)
    if cells > MAX_TABLE_CELLS:
        raise ResourceLimitError(
            f"order {t} of a length-{n} code needs a table of {cells} cells "
            f"(limit {MAX_TABLE_CELLS})"
        )


def derivative(code: LinearCode, t: int, settings: Optional[Settings] = None) -> Derivative:
    """
    Compute the order-``t`` derivative by one pass over all codewords.

    Each codeword ``uv`` is counted in a table indexed by its suffix ``v``
    and the weight of its prefix ``u``; the table is then contracted with
    the integer coordinates of ``RHO**k``.

    Args:
        code (LinearCode): Any binary linear code.
        t (int): Order, ``0 <= t <= n``.
        settings (Settings): Optional enumeration settings.

    Raises:
        InputError: If ``t`` is out of range.
        ResourceLimitError: If the result or the count table is too large.
    """
    _check_order(code, t)
    n = code.n
    suffix_bits = n - t
    width = t + 1
    dtype = word_dtype(n)
    shift = word_constant(dtype, suffix_bits)
    mask = word_constant(dtype, (1 << suffix_bits) - 1)
    cells = (1 << suffix_bits) * width

    def kernel(block):
        suffix = (block & mask).astype(np.int64)
        prefix_weight = popcount(block >> shift) if t else 0
        return np.bincount(suffix * width + prefix_weight, minlength=cells)

    table = sum_codeword_blocks(code, kernel, cells, settings)
    table = table.reshape(1 << suffix_bits, width).astype(object)
    coefficients = rho_power_coefficients(t)
    rho_a = np.array([a for a, _ in coefficients], dtype=object)
    rho_b = np.array([b for _, b in coefficients], dtype=object)
    vector = SpectralVector(table.dot(rho_a), table.dot(rho_b))
    logger.debug("derivative of order %d of %s: %d entries", t, code, len(vector))
    return Derivative(n, t, vector)


def derivative_step(d: Derivative) -> Derivative:
    """
    Raise the order by one: ``new[v] = d[(0)v] + RHO * d[(1)v]``.

    Raises:
        InputError: If the order is already ``n``.
    """
    if d.order >= d.n:
        raise InputError(f"order {d.order} derivative of a length-{d.n} code cannot be stepped")
    first, second = d.vector.halves()
    return Derivative(d.n, d.order + 1, first + second.scale(RHO))


def derivative_by_steps(code: LinearCode, t: int, settings: Optional[Settings] = None) -> Derivative:
    """
    Reach order ``t`` by stepping up from a directly computed lower order.

    The starting order is the smaller of ``t`` and ``n - 16``, so at most
    ``2**16`` entries are computed directly.
    """
    start = min(t, max(0, code.n - 16))
    d = derivative(code, start, settings)
    while d.order < t:
        d = derivative_step(d)
    return d


def check_halves(d: Derivative) -> bool:
    """
    True iff ``d[(1) ~v] == (-1)**wt(v) * RHO**t * conj(d[(0) v])`` for all ``v``.

    ``~v`` is the complement of ``v`` and ``t`` the order. Holds for every
    derivative of order below ``n`` of a code containing the all-one word.
    """
    if d.order >= d.n:
        return True
    first, second = d.vector.halves()
    half = len(first)
    labels = np.arange(half, dtype=np.int64)
    signs = np.where(popcount(labels.astype(np.uint64)) % 2, -1, 1)
    expected = first.conj().scale(rho_pow(d.order)).multiply(signs)
    return second.take(labels ^ (half - 1)) == expected


def collapse(d: Derivative) -> QuadRat:
    """``sum_v RHO**wt(v) * d[v]``: the order-``n`` derivative reached from ``d``."""
    m = d.n - d.order
    weights = popcount(np.arange(len(d), dtype=np.uint64))
    coefficients = rho_power_coefficients(m)
    ca = np.array([coefficients[w][0] for w in weights], dtype=object)
    cb = np.array([coefficients[w][1] for w in weights], dtype=object)
    a, b = d.vector.a, d.vector.b
    return QuadRat((a * ca + 2 * b * cb).sum(), (a * cb + b * ca).sum())


def check_nonnegative(d: Derivative) -> bool:
    """Every entry is ``>= 0`` and the entry at the zero suffix is ``>= 1``."""
    return all(x.sign() >= 0 for x in d) and d[0] >= 1


def format_derivative(d: Derivative, fmt: str = "paper") -> str:
    """
    Serialise a derivative.

    ``paper`` gives a ``# n=<n> t=<t>`` header and one ``<index> <value>``
    line per entry with values as ``<d>*p + <c>``; ``structured`` gives JSON.
    """
    if fmt == "paper":
        lines = [f"# n={d.n} t={d.order}"]
        lines += [f"{i} {format_rho(x)}" for i, x in enumerate(d)]
        return "\n".join(lines) + "\n"
    if fmt == "structured":
        entries = [dict(index=i, **to_structured(x)) for i, x in enumerate(d)]
        return json.dumps({"n": d.n, "t": d.order, "entries": entries}, indent=1) + "\n"
    raise InputError(f"unknown format '{fmt}', expected one of {', '.join(FORMATS)}")


def _parse_header(line: str):
    fields = dict(item.split("=", 1) for item in line.lstrip("#").split() if "=" in item)
    try:
        return int(fields["n"]), int(fields["t"])
    except (KeyError, ValueError):
        raise CodeFormatError(f"derivative header '{line}' does not read '# n=<n> t=<t>'")


def parse_derivative(text: str) -> Derivative:
    """
    Read a derivative written by :func:`format_derivative` in either format.

    Raises:
        CodeFormatError: If the text is malformed or entries are missing.
    """
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            record = json.loads(stripped)
            n, t = int(record["n"]), int(record["t"])
            rows = [(int(e["index"]), from_structured(e)) for e in record["entries"]]
        except (KeyError, TypeError, ValueError) as e:
            raise CodeFormatError(f"malformed structured derivative: {e}")
    else:
        lines = [line.strip() for line in text.splitlines() if line.strip()]
        if not lines or not lines[0].startswith("#"):
            raise CodeFormatError("derivative listing must start with '# n=<n> t=<t>'")
        n, t = _parse_header(lines[0])
        rows = []
        for line in lines[1:]:
            if line.startswith("#"):
                continue
            index, _, value = line.partition(" ")
            try:
                rows.append((int(index), parse_rho(value)))
            except ValueError:
                raise CodeFormatError(f"cannot read derivative entry '{line}'")
    if not 0 <= t <= n:
        raise CodeFormatError(f"order {t} outside 0..{n}")
    expected = 1 << (n - t)
    if [i for i, _ in rows] != list(range(expected)):
        raise CodeFormatError(
            f"expected entries 0..{expected - 1} in order for n={n} t={t}, got {len(rows)} entries"
        )
    return Derivative(n, t, SpectralVector.from_values(x for _, x in rows))
