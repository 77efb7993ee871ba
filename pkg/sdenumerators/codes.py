#  Copyright 2026 The sd-enumerators authors.
#
#  Permission is hereby granted, free of charge, to any person obtaining a copy
#  of this software, to deal in the Software without restriction, under the
#  terms of the MIT License.
#
#  THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND.

"""
Binary linear codes.

Words of length ``n`` are Python ints whose binary expansion, coordinate 1
first, is the word: coordinate ``t`` lives at bit ``n - t``. This makes the
integer value of a word its lexicographic label and turns the concatenation
``uv`` into ``(u << len(v)) | v``.

Enumeration comes in two flavours. :func:`iter_codewords` walks the code in
Gray-code order one row addition at a time and works for any length.
:func:`codeword_blocks` produces numpy arrays: the span of the trailing rows is
built once and every block is that span shifted by one combination of the
leading rows, so blocks are independent and can be processed on a thread pool.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Callable, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, TypeVar, Union

import numpy as np
from sympy import isprime

from .config import Settings, get_settings
from .errors import (
    CodeFormatError,
    DependentRowsError,
    InputError,
    NotSelfDualError,
    ResourceLimitError,
    SupportNotClosedError,
    SupportSizeError,
)

logger = logging.getLogger(__name__)

T = TypeVar("T")

#: Codes up to this length are enumerated with numpy ``uint64`` words.
NATIVE_WORD_BITS = 64

#: Codes of larger dimension are never enumerated.
MAX_ENUMERATION_DIMENSION = 28

BUILTIN_CODES = ("e8", "c2x4", "golay24", "qr48")

_EXPECTED_DISTRIBUTIONS = {
    "e8": {0: 1, 4: 14, 8: 1},
    "c2x4": {0: 1, 2: 4, 4: 6, 6: 4, 8: 1},
    "golay24": {0: 1, 8: 759, 12: 2576, 16: 759, 24: 1},
    "qr48": {
        0: 1, 12: 17296, 16: 535095, 20: 3995376, 24: 7681680,
        28: 3995376, 32: 535095, 36: 17296, 48: 1,
    },
}

_POPCOUNT8 = np.array([bin(i).count("1") for i in range(256)], dtype=np.int64)


# ---------------------------------------------------------------------------
# words
# ---------------------------------------------------------------------------

def weight(word: int) -> int:
    """Hamming weight of an integer-encoded word."""
    return bin(word).count("1")


def all_one(n: int) -> int:
    return (1 << n) - 1


@dataclass(frozen=True)
class BinaryWord:
    """
    A binary word of fixed length.

    ``value`` is the lexicographic label: coordinate 1 is the most
    significant bit.
    """

    value: int
    length: int

    def __post_init__(self):
        if self.length < 0 or not 0 <= self.value < (1 << self.length):
            raise CodeFormatError(f"{self.value} is not a word of length {self.length}")

    @classmethod
    def parse(cls, bits: str) -> "BinaryWord":
        """Read a word from a string of '0' and '1' characters."""
        bits = bits.strip()
        if bits and set(bits) - {"0", "1"}:
            raise CodeFormatError(f"'{bits}' contains characters other than 0 and 1")
        return cls(int(bits, 2) if bits else 0, len(bits))

    def __str__(self) -> str:
        return format(self.value, f"0{self.length}b") if self.length else ""

    @property
    def weight(self) -> int:
        return weight(self.value)

    def complement(self) -> "BinaryWord":
        return BinaryWord(self.value ^ all_one(self.length), self.length)

    def bit(self, coordinate: int) -> int:
        """Bit at a 1-based coordinate."""
        if not 1 <= coordinate <= self.length:
            raise InputError(f"coordinate {coordinate} outside 1..{self.length}")
        return (self.value >> (self.length - coordinate)) & 1

    def concat(self, other: "BinaryWord") -> "BinaryWord":
        """The concatenation ``self other``."""
        return BinaryWord((self.value << other.length) | other.value, self.length + other.length)


# ---------------------------------------------------------------------------
# GF(2) linear algebra on int rows
# ---------------------------------------------------------------------------

def reduced_basis(rows: Iterable[int]) -> Tuple[int, ...]:
    """
    Reduced row echelon basis of the span of ``rows`` over GF(2).

    The result is unique for a given span, so two row sets span the same
    code exactly when their reduced bases are equal.
    """
    basis: Dict[int, int] = {}
    for row in rows:
        for pivot, vector in basis.items():
            if (row >> pivot) & 1:
                row ^= vector
        if not row:
            continue
        pivot = row.bit_length() - 1
        for other, vector in basis.items():
            if (vector >> pivot) & 1:
                basis[other] = vector ^ row
        basis[pivot] = row
    return tuple(basis[p] for p in sorted(basis, reverse=True))


def gf2_rank(rows: Iterable[int]) -> int:
    return len(reduced_basis(rows))


# ---------------------------------------------------------------------------
# codes
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LinearCode:
    """
    A binary linear code given by generator rows.

    Args:
        n (int): Code length.
        rows (tuple): Generator rows as integer-encoded words.
        name (str): Optional label used in reports.
    """

    n: int
    rows: Tuple[int, ...]
    name: str = ""

    def __post_init__(self):
        if self.n < 1:
            raise CodeFormatError(f"code length must be positive, got {self.n}")
        limit = 1 << self.n
        for row in self.rows:
            if not 0 <= row < limit:
                raise CodeFormatError(f"row {row} is not a word of length {self.n}")

    @property
    def dimension(self) -> int:
        """Number of generator rows (the dimension when they are independent)."""
        return len(self.rows)

    @property
    def size(self) -> int:
        return 1 << self.dimension

    def same_code(self, other: "LinearCode") -> bool:
        """True when both generator sets span the same set of codewords."""
        return self.n == other.n and reduced_basis(self.rows) == reduced_basis(other.rows)

    def generator_text(self) -> str:
        """The generator matrix in the 0/1 line format read by :func:`load_code`."""
        return "\n".join(str(BinaryWord(row, self.n)) for row in self.rows) + "\n"

    def __str__(self) -> str:
        label = self.name or "code"
        return f"{label} [{self.n},{self.dimension}]"


def load_code(text: str, name: str = "") -> LinearCode:
    """
    Parse a generator matrix.

    Lines hold '0'/'1' characters, one row per line; blank lines and lines
    starting with '#' are ignored. The length is inferred from the rows.

    Raises:
        CodeFormatError: If the matrix is malformed, the length is odd, or the
            number of rows is not half the length.
    """
    rows = []
    n = None
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if set(line) - {"0", "1"}:
            raise CodeFormatError(
                f"line {lineno}: '{line}' contains characters other than 0 and 1"
            )
        if n is None:
            n = len(line)
        elif len(line) != n:
            raise CodeFormatError(
                f"line {lineno}: row has length {len(line)}, expected {n} like the first row"
            )
        rows.append(int(line, 2))
    if n is None:
        raise CodeFormatError("generator matrix has no rows")
    if n % 2:
        raise CodeFormatError(f"code length {n} is odd; a self-dual code needs even length")
    if len(rows) != n // 2:
        raise CodeFormatError(
            f"generator has {len(rows)} rows but length {n} needs exactly {n // 2}"
        )
    return LinearCode(n, tuple(rows), name)


def read_code(path: Union[str, Path]) -> LinearCode:
    """Load a generator matrix file; the code is named after the file stem."""
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as e:
        raise CodeFormatError(f"cannot read generator file '{path}': {e}")
    return load_code(text, name=path.stem)


def validate_self_dual(code: LinearCode) -> None:
    """
    Raise unless the code is self-dual.

    Raises:
        DependentRowsError: If the rows are linearly dependent.
        NotSelfDualError: If the length is odd, the dimension is not ``n/2``,
            or two rows have odd intersection.
    """
    rank = gf2_rank(code.rows)
    if rank < code.dimension:
        raise DependentRowsError(
            f"{code}: generator rows are dependent (rank {rank} < {code.dimension})"
        )
    if code.n % 2 or rank != code.n // 2:
        raise NotSelfDualError(f"{code}: dimension {rank} is not half the length {code.n}")
    rows = code.rows
    for i, row in enumerate(rows):
        for j in range(i, len(rows)):
            if weight(row & rows[j]) % 2:
                raise NotSelfDualError(
                    f"{code}: rows {i + 1} and {j + 1} have odd intersection"
                )


def is_self_dual(code: LinearCode) -> bool:
    """True iff the rows are independent, ``dim == n/2`` and ``G G^T == 0``."""
    try:
        validate_self_dual(code)
    except InputError:
        return False
    return True


def quadratic_residue_code(p: int, name: str = "") -> LinearCode:
    """
    Extended binary quadratic residue code of length ``p + 1``.

    Coordinates are ``0, 1, ..., p - 1`` followed by the point at infinity.
    The code is spanned by the translates of the residue set, each extended
    by a parity bit, and is self-dual for primes ``p = -1 (mod 8)``: ``p = 23``
    gives a Golay code and ``p = 47`` the [48, 24, 12] code.

    Raises:
        InputError: If ``p`` is not a prime congruent to 7 modulo 8.
    """
    if not isprime(p) or p % 8 != 7:
        raise InputError(f"{p} is not a prime congruent to 7 mod 8")
    n = p + 1
    residues = {(i * i) % p for i in range(1, p)}
    rows = []
    for shift in range(p):
        row = 1
        for v in range(p):
            if (v - shift) % p in residues:
                row |= 1 << (n - 1 - v)
        rows.append(row)
    rows.append(all_one(n))
    basis = reduced_basis(rows)
    return LinearCode(n, basis, name or f"qr{n}")


@lru_cache(maxsize=None)
def builtin_code(name: str) -> LinearCode:
    """
    One of the built-in self-dual codes: e8, c2x4, golay24, qr48.

    e8, c2x4 and golay24 ship as generator files and are checked against
    their known weight distributions on load; qr48 is built with
    :func:`quadratic_residue_code`. Every code is checked for self-duality.

    Raises:
        InputError: If the name is unknown.
    """
    if name not in BUILTIN_CODES:
        raise InputError(
            f"Unknown code '{name}'. Built-in codes are: {', '.join(BUILTIN_CODES)}."
        )
    if name == "qr48":
        code = quadratic_residue_code(47, name=name)
        validate_self_dual(code)
    else:
        text = resources.files("sdenumerators.data").joinpath(f"{name}.txt").read_text()
        code = load_code(text, name=name)
        validate_self_dual(code)
        found = weight_distribution(code).as_dict()
        if found != _EXPECTED_DISTRIBUTIONS[name]:
            raise CodeFormatError(
                f"shipped generator for {name} has weight distribution {found}, "
                f"expected {_EXPECTED_DISTRIBUTIONS[name]}"
            )
    logger.info("loaded built-in code %s", code)
    return code


def expected_distribution(name: str) -> "WeightDistribution":
    """The published weight distribution of a built-in code."""
    if name not in _EXPECTED_DISTRIBUTIONS:
        raise InputError(f"no reference distribution for '{name}'")
    table = _EXPECTED_DISTRIBUTIONS[name]
    return WeightDistribution.from_pairs(table.items(), n=max(table))


def resolve_code(name: Optional[str] = None, generator: Optional[Union[str, Path]] = None) -> LinearCode:
    """Pick a built-in code by name or read a generator file."""
    if (name is None) == (generator is None):
        raise InputError("give exactly one of a built-in code name or a generator file")
    if name is not None:
        return builtin_code(name)
    return read_code(generator)


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------

def iter_codewords(code: LinearCode) -> Iterator[int]:
    """
    All ``2**k`` codewords in Gray-code order.

    Consecutive codewords differ by exactly one generator row.
    """
    rows = code.rows
    word = 0
    yield word
    for i in range(1, 1 << len(rows)):
        word ^= rows[(i & -i).bit_length() - 1]
        yield word


def word_dtype(n: int):
    """numpy dtype holding words of length ``n``."""
    return np.uint64 if n <= NATIVE_WORD_BITS else object


def word_constant(dtype, value: int):
    """A scalar of the right type to combine with word arrays of ``dtype``."""
    return np.uint64(value) if dtype == np.uint64 else int(value)


def popcount(words: np.ndarray) -> np.ndarray:
    """Hamming weights of an array of integer-encoded words, as ``int64``."""
    if words.dtype == object:
        return np.fromiter((weight(int(w)) for w in words), dtype=np.int64, count=len(words))
    words = np.ascontiguousarray(words, dtype=np.uint64)
    return _POPCOUNT8[words.view(np.uint8)].reshape(-1, 8).sum(axis=1)


def _span(rows: Sequence[int], dtype) -> np.ndarray:
    span = np.zeros(1, dtype=dtype)
    for row in rows:
        span = np.concatenate((span, span ^ word_constant(dtype, row)))
    return span


def _prefix_offsets(rows: Sequence[int]) -> List[int]:
    offsets = [0]
    word = 0
    for i in range(1, 1 << len(rows)):
        word ^= rows[(i & -i).bit_length() - 1]
        offsets.append(word)
    return offsets


def check_enumerable(code: LinearCode) -> None:
    """
    Refuse codes too large to enumerate.

    Raises:
        ResourceLimitError: If the code has more than
            ``2**MAX_ENUMERATION_DIMENSION`` codewords.
    """
    if code.dimension > MAX_ENUMERATION_DIMENSION:
        raise ResourceLimitError(
            f"{code} has 2**{code.dimension} codewords; "
            f"at most 2**{MAX_ENUMERATION_DIMENSION} are enumerated"
        )


def _block_runner(code: LinearCode, kernel: Callable[[np.ndarray], T], settings: Settings):
    check_enumerable(code)
    dtype = word_dtype(code.n)
    k = code.dimension
    span_rows = min(k, settings.chunk_bits)
    leading, trailing = code.rows[: k - span_rows], code.rows[k - span_rows:]
    span = _span(trailing, dtype)
    offsets = _prefix_offsets(leading)
    if len(offsets) * len(span) > (1 << 16):
        logger.info(
            "enumerating %d codewords of %s in %d blocks on %d worker(s)",
            code.size, code, len(offsets), settings.workers,
        )

    def run(offset: int) -> T:
        return kernel(span ^ word_constant(dtype, offset) if offset else span)

    return run, offsets


def map_codeword_blocks(
    code: LinearCode,
    kernel: Callable[[np.ndarray], T],
    settings: Optional[Settings] = None,
) -> List[T]:
    """
    Apply ``kernel`` to disjoint blocks that together hold every codeword.

    The leading rows of the generator select a block and the remaining
    ``chunk_bits`` rows span it. Blocks run on ``settings.workers`` threads;
    the list of results is in block order whatever the schedule. Every
    result is kept, so use :func:`sum_codeword_blocks` for count tables.

    Raises:
        ResourceLimitError: If the code is too large to enumerate.
    """
    settings = settings or get_settings()
    run, offsets = _block_runner(code, kernel, settings)
    if settings.workers > 1 and len(offsets) > 1:
        with ThreadPoolExecutor(max_workers=settings.workers) as pool:
            return list(pool.map(run, offsets))
    return [run(offset) for offset in offsets]


def sum_codeword_blocks(
    code: LinearCode,
    kernel: Callable[[np.ndarray], np.ndarray],
    size: int,
    settings: Optional[Settings] = None,
) -> np.ndarray:
    """
    Entrywise sum of ``kernel`` over all codeword blocks.

    ``kernel`` maps a block to an integer table of ``size`` cells. Each
    worker folds its share of the blocks into a private ``int64`` table and
    the worker tables are added at the end, so memory stays at one table per
    worker however many blocks there are.

    Raises:
        ResourceLimitError: If the code is too large to enumerate.
    """
    settings = settings or get_settings()
    run, offsets = _block_runner(code, kernel, settings)

    def fold(share: Sequence[int]) -> np.ndarray:
        total = np.zeros(size, dtype=np.int64)
        for offset in share:
            total += run(offset)
        return total

    workers = min(settings.workers, len(offsets))
    if workers <= 1:
        return fold(offsets)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        tables = pool.map(fold, [offsets[w::workers] for w in range(workers)])
        total = next(tables)
        for table in tables:
            total += table
    return total


def codeword_blocks(code: LinearCode, settings: Optional[Settings] = None) -> List[np.ndarray]:
    """All codewords as a list of numpy arrays (see :func:`map_codeword_blocks`)."""
    return map_codeword_blocks(code, lambda block: block.copy(), settings)


# ---------------------------------------------------------------------------
# weight statistics
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class WeightDistribution:
    """
    Counts ``A_0 .. A_n`` of codewords by weight.

    Args:
        n (int): Code length.
        counts (tuple): ``n + 1`` nonnegative integers.
    """

    n: int
    counts: Tuple[int, ...]

    def __post_init__(self):
        if len(self.counts) != self.n + 1:
            raise CodeFormatError(
                f"a distribution of length {self.n} needs {self.n + 1} counts, got {len(self.counts)}"
            )
        if any(c < 0 for c in self.counts):
            raise CodeFormatError(f"negative count in distribution {self.counts}")

    @classmethod
    def from_sequence(cls, counts: Sequence[int]) -> "WeightDistribution":
        counts = tuple(int(c) for c in counts)
        return cls(len(counts) - 1, counts)

    @classmethod
    def from_pairs(cls, pairs: Iterable[Tuple[int, int]], n: Optional[int] = None) -> "WeightDistribution":
        pairs = list(pairs)
        if n is None:
            n = max(k for k, _ in pairs)
        counts = [0] * (n + 1)
        for k, count in pairs:
            if not 0 <= k <= n:
                raise CodeFormatError(f"weight {k} outside 0..{n}")
            counts[k] += count
        return cls(n, tuple(counts))

    def __getitem__(self, k: int) -> int:
        return self.counts[k]

    def __iter__(self):
        return iter(self.counts)

    @property
    def total(self) -> int:
        return sum(self.counts)

    def nonzero(self) -> List[Tuple[int, int]]:
        """``(k, A_k)`` pairs with ``A_k != 0``, in increasing ``k``."""
        return [(k, c) for k, c in enumerate(self.counts) if c]

    def as_dict(self) -> Dict[int, int]:
        return dict(self.nonzero())

    def is_symmetric(self) -> bool:
        return self.counts == self.counts[::-1]

    def min_weight(self) -> Optional[int]:
        """Smallest nonzero weight, or ``None`` for the zero code."""
        return next((k for k, c in enumerate(self.counts) if k and c), None)

    def to_text(self) -> str:
        """The ``[<k,A_k>,...]`` form, zeros omitted."""
        return "[" + ",".join(f"<{k},{c}>" for k, c in self.nonzero()) + "]"

    def to_csv(self) -> str:
        return ",".join(str(c) for c in self.counts)


def parse_distribution(text: str, n: Optional[int] = None) -> WeightDistribution:
    """
    Read a distribution written as ``[<k,A_k>,...]`` or as ``A_0,...,A_n``.

    Raises:
        CodeFormatError: If the text is in neither form.
    """
    body = " ".join(line for line in text.splitlines() if not line.strip().startswith("#"))
    body = body.strip()
    try:
        if "<" in body:
            pairs = []
            for item in body.strip("[] ").split(">"):
                item = item.strip(" ,<")
                if not item:
                    continue
                k, count = item.split(",")
                pairs.append((int(k), int(count)))
            return WeightDistribution.from_pairs(pairs, n)
        counts = [int(c) for c in body.strip("()[] ").split(",")]
    except ValueError:
        raise CodeFormatError(f"cannot read a weight distribution from '{body[:60]}'")
    dist = WeightDistribution.from_sequence(counts)
    if n is not None and dist.n != n:
        raise CodeFormatError(f"distribution has length {dist.n}, expected {n}")
    return dist


@lru_cache(maxsize=32)
def weight_distribution(code: LinearCode, settings: Optional[Settings] = None) -> WeightDistribution:
    """
    Exact weight distribution by enumerating all codewords.

    Results are cached per code.
    """
    n = code.n

    def kernel(block):
        return np.bincount(popcount(block), minlength=n + 1)

    counts = sum_codeword_blocks(code, kernel, n + 1, settings)
    return WeightDistribution(n, tuple(int(c) for c in counts))


def min_weight(code: LinearCode) -> Optional[int]:
    """Minimum nonzero weight by full enumeration."""
    return weight_distribution(code).min_weight()


@dataclass(frozen=True)
class RefinedDistribution:
    """
    Codeword counts by weight and by the bit at one coordinate.

    ``zero[k]`` counts weight-``k`` codewords with 0 at the coordinate and
    ``one[k]`` those with 1. ``coordinate`` is ``None`` for tables that are
    not tied to a position (candidate tables).
    """

    n: int
    coordinate: Optional[int]
    zero: Tuple[int, ...]
    one: Tuple[int, ...]

    def count(self, k: int, delta: int) -> int:
        return (self.one if delta else self.zero)[k]

    def totals(self) -> WeightDistribution:
        return WeightDistribution(self.n, tuple(a + b for a, b in zip(self.zero, self.one)))

    def is_complement_symmetric(self) -> bool:
        """``A_{k,d} == A_{n-k,1-d}`` for all ``k`` and ``d``."""
        return self.zero == self.one[::-1]


def refined_distribution(
    code: LinearCode, t: int, settings: Optional[Settings] = None
) -> RefinedDistribution:
    """
    Count codewords by weight and by their bit at coordinate ``t`` (1-based).

    Raises:
        InputError: If ``t`` is outside ``1..n``.
    """
    n = code.n
    if not 1 <= t <= n:
        raise InputError(f"coordinate {t} outside 1..{n}")
    dtype = word_dtype(n)
    shift, one = word_constant(dtype, n - t), word_constant(dtype, 1)

    def kernel(block):
        bits = ((block >> shift) & one).astype(np.int64)
        return np.bincount(popcount(block) * 2 + bits, minlength=2 * (n + 1))

    counts = sum_codeword_blocks(code, kernel, 2 * (n + 1), settings).reshape(n + 1, 2)
    return RefinedDistribution(
        n, t, tuple(int(c) for c in counts[:, 0]), tuple(int(c) for c in counts[:, 1])
    )


# ---------------------------------------------------------------------------
# codes from 0/1 vectors
# ---------------------------------------------------------------------------

def _indicator_labels(vec) -> Tuple[int, List[int]]:
    from .enumerator import ExactEnumerator
    from .transform import SpectralVector

    if isinstance(vec, ExactEnumerator):
        return 1 << vec.n, [int(label) for label in vec.labels]
    if isinstance(vec, SpectralVector):
        length = len(vec)
        labels = vec.nonzero_labels()
        values = [vec[i] for i in labels]
    else:
        values_all = list(vec)
        length = len(values_all)
        labels = [i for i, x in enumerate(values_all) if x != 0]
        values = [values_all[i] for i in labels]
    bad = next((label for label, x in zip(labels, values) if x != 1), None)
    if bad is not None:
        raise CodeFormatError(f"entry {bad} of the indicator is neither 0 nor 1")
    return length, labels


def code_from_indicator(vec, name: str = "") -> LinearCode:
    """
    Recover the self-dual code whose exact weight enumerator is ``vec``.

    ``vec`` is a 0/1 vector of length ``2**n`` (a sequence, a
    :class:`~sdenumerators.transform.SpectralVector` or the sparse
    :class:`~sdenumerators.enumerator.ExactEnumerator`).

    Raises:
        SupportNotClosedError: If the support is not a linear subspace.
        SupportSizeError: If the subspace does not have ``2**(n/2)`` words.
        NotSelfDualError: If the subspace is not self-dual.
    """
    length, labels = _indicator_labels(vec)
    n = length.bit_length() - 1
    if length < 2 or length != 1 << n or n % 2:
        raise CodeFormatError(f"indicator length {length} is not 2**n for an even n")
    if not labels:
        raise SupportSizeError("indicator is the zero vector")
    basis = reduced_basis(labels)
    if labels[0] != 0 or len(labels) != 1 << len(basis):
        raise SupportNotClosedError(
            f"support of {len(labels)} words is not closed under addition "
            f"(it spans {1 << len(basis)} words)"
        )
    if len(basis) != n // 2:
        raise SupportSizeError(
            f"support has {len(labels)} words, a self-dual code of length {n} has {1 << (n // 2)}"
        )
    code = LinearCode(n, basis, name)
    validate_self_dual(code)
    return code
