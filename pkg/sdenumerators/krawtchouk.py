#  Copyright 2026 The sd-enumerators authors.
#
#  Permission is hereby granted, free of charge, to any person obtaining a copy
#  of this software, to deal in the Software without restriction, under the
#  terms of the MIT License.
#
#  THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND.

"""
Krawtchouk matrices and candidate weight distributions of self-dual codes.

Entry ``(i, j)`` of the Krawtchouk matrix ``K_n`` is the coefficient of
``z**i`` in ``(1 - z)**j (1 + z)**(n - j)``. A self-dual code's weight
distribution ``X`` satisfies the MacWilliams identity ``X M = 2**(n/2) X``
with ``M`` the transpose of ``K_n``.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Sequence

from sympy import ImmutableMatrix, Matrix, Poly, QQ, eye, symbols

from .codes import WeightDistribution
from .errors import InputError

logger = logging.getLogger(__name__)

#: Largest length the candidate search is meant for.
SUPPORTED_SEARCH_LENGTH = 12

_z = symbols("z")


@dataclass(frozen=True)
class KrawtchoukMatrix:
    """The ``(n + 1) x (n + 1)`` integer matrix ``K_n``."""

    n: int
    matrix: ImmutableMatrix

    def entry(self, i: int, j: int) -> int:
        return int(self.matrix[i, j])

    @property
    def transpose(self) -> ImmutableMatrix:
        """``M``, the matrix acting on row vectors in the MacWilliams identity."""
        return self.matrix.T

    def is_involution(self) -> bool:
        """``K_n**2 == 2**n I``."""
        return self.matrix * self.matrix == (1 << self.n) * eye(self.n + 1)


@lru_cache(maxsize=None)
def krawtchouk_matrix(n: int) -> KrawtchoukMatrix:
    """
    Build ``K_n`` from the generating polynomials ``(1 - z)**j (1 + z)**(n - j)``.

    Raises:
        InputError: If ``n < 1``.
    """
    if n < 1:
        raise InputError(f"Krawtchouk matrices need n >= 1, got {n}")
    columns = []
    for j in range(n + 1):
        coefficients = Poly((1 - _z) ** j * (1 + _z) ** (n - j), _z).all_coeffs()[::-1]
        columns.append([int(c) for c in coefficients] + [0] * (n + 1 - len(coefficients)))
    matrix = ImmutableMatrix(n + 1, n + 1, lambda i, j: columns[j][i])
    return KrawtchoukMatrix(n, matrix)


def is_macwilliams_fixed(dist) -> bool:
    """True iff ``X M == 2**(n/2) X`` for the counts ``X`` of ``dist``."""
    counts = list(dist)
    n = len(counts) - 1
    if n < 1 or n % 2:
        return False
    k = krawtchouk_matrix(n).matrix
    image = k * Matrix(counts)
    scale = 1 << (n // 2)
    return all(image[i] == scale * counts[i] for i in range(n + 1))


def _affine_rows(solution, params) -> List[List]:
    """Coefficients ``[c_0, c_1, ...]`` with ``x = c_0 + sum c_j * params[j]``."""
    zero = {p: 0 for p in params}
    rows = []
    for expr in solution:
        constant = QQ.from_sympy(expr.subs(zero))
        rows.append([constant] + [QQ.from_sympy(expr.coeff(p)) for p in params])
    return rows


def _search(rows, bound: int, free_index: Sequence[int]) -> List[List[int]]:
    """Depth-first search over the free coordinates."""
    n_free = len(free_index)
    last_use = []
    for row in rows:
        used = [j for j in range(n_free) if row[j + 1] != 0]
        last_use.append(max(used) if used else -1)
    ready = [[r for r, last in enumerate(last_use) if last == depth] for depth in range(n_free)]
    constant_rows = [r for r, last in enumerate(last_use) if last == -1]

    def feasible(r, values):
        x = rows[r][0] + sum(rows[r][j + 1] * values[j] for j in range(len(values)))
        return x.denominator == 1 and x >= 0

    if not all(feasible(r, []) for r in constant_rows):
        return []

    found = []
    visited = 0

    def descend(values, used):
        nonlocal visited
        visited += 1
        depth = len(values)
        if depth == n_free:
            found.append(list(values))
            return
        for value in range(bound - used + 1):
            values.append(value)
            if all(feasible(r, values) for r in ready[depth]):
                descend(values, used + value)
            values.pop()

    descend([], 0)
    logger.debug("candidate search visited %d nodes, %d leaves", visited, len(found))
    return found


def enumerate_candidates(n: int, even_weights: bool = True) -> List[WeightDistribution]:
    """
    All nonnegative integer solutions ``X`` of ``X M = 2**(n/2) X`` with ``X[0] = 1``.

    The eigen-equation is solved exactly by Gauss-Jordan elimination and the
    free coordinates are searched depth first; the ``k = 0`` component of
    the equation gives ``sum(X) == 2**(n/2)``, which bounds the search.

    Args:
        n (int): Even length.
        even_weights (bool): Also require ``X[k] = 0`` for odd ``k``, as for
            every self-dual code. Without it the solution set is larger.

    Returns:
        list: Solutions in lexicographic order.

    Raises:
        InputError: If ``n`` is not a positive even integer.
    """
    if n < 2 or n % 2:
        raise InputError(f"candidate distributions need a positive even length, got {n}")
    if n > SUPPORTED_SEARCH_LENGTH:
        logger.warning(
            "candidate search for n=%d is beyond the supported n <= %d and may be slow",
            n, SUPPORTED_SEARCH_LENGTH,
        )
    size = n + 1
    scale = 1 << (n // 2)
    k = krawtchouk_matrix(n).matrix
    equations = [list(k.row(i)) for i in range(size)]
    for i in range(size):
        equations[i][i] -= scale
    rhs = [0] * size
    equations.append([1] + [0] * n)
    rhs.append(1)
    if even_weights:
        for odd in range(1, size, 2):
            equations.append([1 if j == odd else 0 for j in range(size)])
            rhs.append(0)

    try:
        solution, params, free = Matrix(equations).gauss_jordan_solve(Matrix(rhs), freevar=True)
    except ValueError:
        logger.info("eigen-equation for n=%d has no solution with X[0] = 1", n)
        return []
    params = list(params)
    free = list(free)
    rows = _affine_rows(list(solution), params)
    raw = _search(rows, scale, free)

    candidates = []
    for values in raw:
        x = []
        for row in rows:
            entry = row[0] + sum(row[j + 1] * v for j, v in enumerate(values))
            x.append(int(entry.numerator))
        candidates.append(tuple(x))
    candidates.sort()

    results = [WeightDistribution.from_sequence(x) for x in candidates]
    for dist in results:
        if dist.total != scale or not is_macwilliams_fixed(dist):
            raise AssertionError(f"search returned a non-solution {dist.to_csv()}")
        if even_weights and not dist.is_symmetric():
            logger.warning("candidate %s is not symmetric", dist.to_csv())
    logger.info("%d candidate distribution(s) for n=%d", len(results), n)
    return results
