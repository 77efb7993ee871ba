#  Copyright 2026 The sd-enumerators authors.
#
#  Permission is hereby granted, free of charge, to any person obtaining a copy
#  of this software, to deal in the Software without restriction, under the
#  terms of the MIT License.
#
#  THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND.

"""
Exceptions raised for bad input.

Every error here is a ``ValueError``: callers that only care about "the input
was wrong" can keep catching ``ValueError``, while the command line maps the
shared :class:`InputError` base to its own exit code. Failed *checks* (an
eigenvector test that does not hold, a candidate that is eliminated) are
reported as return values, never raised.
"""


class InputError(ValueError):
    """Base class for all input problems detected by the library."""


class CodeFormatError(InputError):
    """A generator matrix, distribution or vector could not be parsed."""


class DependentRowsError(InputError):
    """Generator rows are linearly dependent over GF(2)."""


class NotSelfDualError(InputError):
    """A code is not equal to its dual."""


class SupportNotClosedError(InputError):
    """The support of a 0/1 vector is not closed under addition."""


class SupportSizeError(InputError):
    """The support of a 0/1 vector has the wrong number of elements."""


class ResourceLimitError(InputError):
    """A request would allocate more memory than the library allows."""


class DesignViolationError(InputError):
    """A (length, weight, blocks) triple is not consistent with a 5-design."""


class CandidateError(InputError):
    """A candidate weight distribution does not meet the preconditions."""
