#  Copyright 2026 The sd-enumerators authors.
#
#  Permission is hereby granted, free of charge, to any person obtaining a copy
#  of this software, to deal in the Software without restriction, under the
#  terms of the MIT License.
#
#  THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND.

"""Runtime settings read from the environment."""

import logging
import os
from dataclasses import dataclass, replace
from typing import Mapping, Optional

logger = logging.getLogger(__name__)

WORKERS_VAR = "SDENUM_WORKERS"
CHUNK_BITS_VAR = "SDENUM_CHUNK_BITS"


def _positive_int(environ, name, default):
    raw = environ.get(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(
            f"Environment variable {name}={raw!r} is not an integer. "
            f"Unset it or give a positive whole number."
        )
    if value < 1:
        raise ValueError(f"Environment variable {name} must be positive, got {value}.")
    return value


@dataclass(frozen=True)
class Settings:
    """
    Knobs for codeword enumeration.

    Args:
        workers (int): Threads used to process codeword blocks.
        chunk_bits (int): Each block holds ``2**chunk_bits`` codewords.
    """

    workers: int = 1
    chunk_bits: int = 20

    @classmethod
    def from_env(cls, environ: Optional[Mapping[str, str]] = None) -> "Settings":
        """
        Build settings from ``SDENUM_WORKERS`` and ``SDENUM_CHUNK_BITS``.

        Raises:
            ValueError: If a variable is set but not a positive integer.
        """
        environ = os.environ if environ is None else environ
        settings = cls(
            workers=_positive_int(environ, WORKERS_VAR, cls.workers),
            chunk_bits=_positive_int(environ, CHUNK_BITS_VAR, cls.chunk_bits),
        )
        logger.debug("settings from environment: %s", settings)
        return settings

    def with_workers(self, workers: Optional[int]) -> "Settings":
        """Return a copy with ``workers`` overridden (``None`` keeps the current value)."""
        if workers is None:
            return self
        if workers < 1:
            raise ValueError(f"workers must be positive, got {workers}")
        return replace(self, workers=workers)


def get_settings() -> Settings:
    """Settings for the current process environment."""
    return Settings.from_env()
