#  Copyright 2026 The sd-enumerators authors.
#
#  Permission is hereby granted, free of charge, to any person obtaining a copy
#  of this software, to deal in the Software without restriction, under the
#  terms of the MIT License.
#
#  THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND.

"""
sd-enumerators: exact weight enumerators of binary self-dual codes.

Computes derivatives of the exact weight enumerator in Q(sqrt 2), checks
that they are fixed by the Kronecker powers of the Hadamard matrix, derives
them from 5-design profiles, and applies the balance identity to candidate
weight distributions.
"""

from .balance import BalanceReport, EliminationVerdict, balance_check, eliminate_length8
from .codes import (
    BinaryWord,
    LinearCode,
    RefinedDistribution,
    WeightDistribution,
    builtin_code,
    code_from_indicator,
    is_self_dual,
    load_code,
    quadratic_residue_code,
    refined_distribution,
    weight_distribution,
)
from .config import Settings
from .designs import DesignProfile, builtin_profile, derivative_from_designs, lambda_count
from .enumerator import (
    Derivative,
    ExactEnumerator,
    check_halves,
    derivative,
    derivative_step,
    exact_enumerator,
)
from .errors import InputError
from .krawtchouk import KrawtchoukMatrix, enumerate_candidates, krawtchouk_matrix
from .quadring import MU, RHO, QuadRat, conj, format_rho, parse_rho, rho_pow
from .transform import (
    SpectralVector,
    apply_hadamard_power,
    apply_k_power,
    eigenbasis_row,
    is_eigenvector_one,
)
from .__version__ import (
    __version__,
    __author__,
    __email__,
    __license__,
    __copyright__
)

__all__ = [
    'QuadRat', 'RHO', 'MU', 'conj', 'rho_pow', 'format_rho', 'parse_rho',
    'BinaryWord', 'LinearCode', 'WeightDistribution', 'RefinedDistribution',
    'builtin_code', 'load_code', 'quadratic_residue_code', 'is_self_dual',
    'weight_distribution', 'refined_distribution', 'code_from_indicator',
    'ExactEnumerator', 'Derivative', 'exact_enumerator', 'derivative',
    'derivative_step', 'check_halves',
    'SpectralVector', 'apply_hadamard_power', 'apply_k_power',
    'is_eigenvector_one', 'eigenbasis_row',
    'DesignProfile', 'lambda_count', 'derivative_from_designs', 'builtin_profile',
    'BalanceReport', 'EliminationVerdict', 'balance_check', 'eliminate_length8',
    'KrawtchoukMatrix', 'krawtchouk_matrix', 'enumerate_candidates',
    'Settings', 'InputError', '__version__',
]
