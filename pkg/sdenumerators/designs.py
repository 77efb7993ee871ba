#  Copyright 2026 The sd-enumerators authors.
#
#  Permission is hereby granted, free of charge, to any person obtaining a copy
#  of this software, to deal in the Software without restriction, under the
#  terms of the MIT License.
#
#  THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND.

"""
Order ``n - 5`` derivatives from weight distributions.

When the supports of the codewords of every nontrivial weight form
5-designs, the derivative of order ``n - 5`` depends only on the weight
distribution: the number of weight-``w`` codewords whose last five
coordinates read ``v`` is the number of blocks containing the ``wt(v)``
ones of ``v`` and avoiding its ``5 - wt(v)`` zeros. This makes derivatives
available for codes far too large to enumerate.
"""

import logging
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Tuple, Union

from sympy import QQ, binomial

from .codes import WeightDistribution, parse_distribution, weight, weight_distribution
from .enumerator import Derivative, parse_derivative
from .errors import CodeFormatError, DesignViolationError, InputError
from .quadring import QuadRat, rho_pow
from .transform import SpectralVector

logger = logging.getLogger(__name__)

DESIGN_STRENGTH = 5

BUILTIN_PROFILES = ("golay24", "qr48", "length72")


@dataclass(frozen=True)
class DesignProfile:
    """
    Weights whose codeword supports form 5-designs.

    Args:
        n (int): Code length.
        blocks (tuple): ``(w, b_w)`` pairs, ``w`` strictly increasing.
        zero_word (bool): The zero word is a codeword.
        all_one_word (bool): The all-one word is a codeword.

    Raises:
        DesignViolationError: If a weight lies outside ``5..n-5`` or a block
            count is negative.
    """

    n: int
    blocks: Tuple[Tuple[int, int], ...]
    zero_word: bool = True
    all_one_word: bool = True

    def __post_init__(self):
        if self.n < 2 * DESIGN_STRENGTH:
            raise DesignViolationError(f"length {self.n} is too short for a 5-design profile")
        previous = None
        for w, b in self.blocks:
            if not DESIGN_STRENGTH <= w <= self.n - DESIGN_STRENGTH:
                raise DesignViolationError(
                    f"weight {w} cannot carry a 5-design on {self.n} points "
                    f"(needs {DESIGN_STRENGTH} <= w <= {self.n - DESIGN_STRENGTH})"
                )
            if b < 0:
                raise DesignViolationError(f"negative block count {b} for weight {w}")
            if previous is not None and w <= previous:
                raise DesignViolationError("profile weights must be strictly increasing")
            previous = w


def lambda_count(n: int, w: int, b: int, i: int, j: int):
    """
    Blocks containing a fixed ``i``-set and avoiding a disjoint ``j``-set.

    For a 5-design with ``b`` blocks of size ``w`` on ``n`` points and
    ``i + j <= 5`` this is ``b * C(n - i - j, w - i) / C(n, w)``.

    Returns:
        The count as a ``QQ`` rational; it is an integer for genuine designs.

    Raises:
        InputError: If ``i``, ``j`` are negative or ``i + j > 5``.
    """
    if i < 0 or j < 0 or i + j > DESIGN_STRENGTH:
        raise InputError(f"need i, j >= 0 and i + j <= {DESIGN_STRENGTH}, got i={i}, j={j}")
    total = binomial(n, w)
    if total == 0:
        raise DesignViolationError(f"no {w}-subsets of {n} points")
    return QQ(int(b * binomial(n - i - j, w - i)), int(total))


def block_count(n: int, w: int, b: int, i: int, j: int) -> int:
    """
    :func:`lambda_count` as an integer.

    Raises:
        DesignViolationError: If the count is fractional, i.e. the triple
            ``(n, w, b)`` is not a 5-design.
    """
    value = lambda_count(n, w, b, i, j)
    if value.denominator != 1:
        raise DesignViolationError(
            f"{b} blocks of size {w} on {n} points are not a 5-design: "
            f"lambda({i},{j}) = {value.numerator}/{value.denominator}"
        )
    return int(value.numerator)


def derivative_from_designs(profile: DesignProfile) -> Derivative:
    """
    The order ``n - 5`` derivative implied by a design profile.

    For a suffix ``v`` of weight ``i`` the entry is the sum over the profile
    of ``lambda(i, 5 - i) * RHO**(w - i)``, plus ``1`` at ``v = 00000`` for
    the zero word and ``RHO**(n - 5)`` at ``v = 11111`` for the all-one word.

    Raises:
        DesignViolationError: If some count is not an integer.
    """
    n = profile.n
    by_weight = []
    for i in range(DESIGN_STRENGTH + 1):
        total = QuadRat(0)
        for w, b in profile.blocks:
            total += block_count(n, w, b, i, DESIGN_STRENGTH - i) * rho_pow(w - i)
        by_weight.append(total)
    entries = [by_weight[weight(v)] for v in range(1 << DESIGN_STRENGTH)]
    if profile.zero_word:
        entries[0] += 1
    if profile.all_one_word:
        entries[-1] += rho_pow(n - DESIGN_STRENGTH)
    return Derivative(n, n - DESIGN_STRENGTH, SpectralVector.from_values(entries))


def profile_from_distribution(dist: WeightDistribution) -> DesignProfile:
    """
    Profile taking every nontrivial weight of ``dist`` as a 5-design.

    Raises:
        DesignViolationError: If a nonzero weight lies in ``1..4`` or
            ``n-4..n-1``, or ``A_0`` / ``A_n`` is not 0 or 1.
    """
    n = dist.n
    if dist[0] not in (0, 1) or dist[n] not in (0, 1):
        raise DesignViolationError(f"A_0={dist[0]} and A_{n}={dist[n]} must each be 0 or 1")
    blocks = tuple((k, c) for k, c in dist.nonzero() if 0 < k < n)
    return DesignProfile(n, blocks, zero_word=dist[0] == 1, all_one_word=dist[n] == 1)


def profile_for_code(code) -> DesignProfile:
    """Profile built from the enumerated weight distribution of ``code``."""
    return profile_from_distribution(weight_distribution(code))


def parse_profile(text: str) -> DesignProfile:
    """
    Read a profile: a line ``n=<n>``, then ``<w> <b_w>`` lines.

    Lines for the weights 0 and ``n`` set the zero-word and all-one-word
    flags; their count must be 1. ``#`` starts a comment.

    Raises:
        CodeFormatError: If the text is malformed.
    """
    lines = [line.split("#", 1)[0].strip() for line in text.splitlines()]
    lines = [line for line in lines if line]
    if not lines or not lines[0].startswith("n="):
        raise CodeFormatError("a design profile starts with a line 'n=<n>'")
    try:
        n = int(lines[0][2:])
        pairs = [tuple(int(x) for x in line.split()) for line in lines[1:]]
    except ValueError:
        raise CodeFormatError("profile lines must hold integers")
    zero_word = all_one_word = False
    blocks = []
    for pair in pairs:
        if len(pair) != 2:
            raise CodeFormatError(f"profile line {pair} does not read '<w> <b_w>'")
        w, b = pair
        if w in (0, n):
            if b != 1:
                raise CodeFormatError(f"weight {w} needs count 1, got {b}")
            if w == 0:
                zero_word = True
            else:
                all_one_word = True
        else:
            blocks.append((w, b))
    return DesignProfile(n, tuple(blocks), zero_word, all_one_word)


def format_profile(profile: DesignProfile) -> str:
    lines = [f"n={profile.n}"]
    if profile.zero_word:
        lines.append("0 1")
    lines += [f"{w} {b}" for w, b in profile.blocks]
    if profile.all_one_word:
        lines.append(f"{profile.n} 1")
    return "\n".join(lines) + "\n"


def read_profile(path: Union[str, Path]) -> DesignProfile:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as e:
        raise CodeFormatError(f"cannot read design profile '{path}': {e}")
    return parse_profile(text)


def _data_text(name: str) -> str:
    return resources.files("sdenumerators.data").joinpath(name).read_text()


def builtin_profile(name: str) -> DesignProfile:
    """
    A shipped design profile: golay24, qr48 or length72.

    Raises:
        InputError: If the name is unknown.
    """
    if name not in BUILTIN_PROFILES:
        raise InputError(
            f"Unknown profile '{name}'. Built-in profiles are: {', '.join(BUILTIN_PROFILES)}."
        )
    return parse_profile(_data_text(f"{name}.profile"))


def length72_distribution() -> WeightDistribution:
    """
    The weight distribution of a putative self-dual [72, 36, 16] code.

    The shipped table is checked before it is returned: the counts sum to
    ``2**36``, are symmetric, and form a fixed point of the MacWilliams
    transform.

    Raises:
        CodeFormatError: If any check fails.
    """
    from .krawtchouk import is_macwilliams_fixed

    dist = parse_distribution(_data_text("length72.dist"), n=72)
    if dist.total != 1 << 36:
        raise CodeFormatError(f"length-72 counts sum to {dist.total}, not 2**36")
    if not dist.is_symmetric():
        raise CodeFormatError("length-72 distribution is not symmetric")
    if not is_macwilliams_fixed(dist):
        raise CodeFormatError("length-72 distribution is not a MacWilliams fixed point")
    logger.info("length-72 distribution verified: %s", dist.to_text())
    return dist


def golden_derivative(name: str) -> Derivative:
    """The published order ``n - 5`` listing for golay24, qr48 or length72."""
    if name not in BUILTIN_PROFILES:
        raise InputError(f"no reference listing for '{name}'")
    return parse_derivative(_data_text(f"golden_{name}.txt"))

