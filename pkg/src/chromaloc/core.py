"""Shared scalar types: extended naturals, validated primes, and the error hierarchy."""
from __future__ import annotations

import math
from typing import Union

INF = math.inf

# A height or type: a nonnegative int, or INF.
ExtNat = Union[int, float]


class ChromalocError(Exception):
    """Base class for every error raised by this package."""


class PrimeError(ChromalocError, ValueError):
    pass


class DomainError(ChromalocError, ValueError):
    pass


class ZeroLiftError(ChromalocError, ValueError):
    """The zero p-local localisation has no lift; use the global zero instead."""


class NotAlgebraicallyCentral(ChromalocError, ValueError):
    pass


class ParamMismatch(ChromalocError, ValueError):
    pass


class ScaleError(ChromalocError, ValueError):
    pass


class ParseError(ChromalocError, ValueError):
    def __init__(self, message: str, offset: int, expected: frozenset[str] = frozenset()):
        self.offset = offset
        self.expected = frozenset(expected)
        detail = f"{message} at offset {offset}"
        if self.expected:
            detail += " (expected one of: " + ", ".join(sorted(self.expected)) + ")"
        super().__init__(detail)


def extnat(value) -> ExtNat:
    """Validate and normalise an extended natural: ints >= 0, INF, or the string 'inf'."""
    if isinstance(value, str):
        if value == "inf":
            return INF
        if value.isdigit():
            return int(value)
        raise DomainError(f"not an extended natural: {value!r}")
    if isinstance(value, bool):
        raise DomainError(f"not an extended natural: {value!r}")
    if isinstance(value, int):
        if value < 0:
            raise DomainError(f"extended naturals are nonnegative, got {value}")
        return value
    if isinstance(value, float) and value == INF:
        return INF
    raise DomainError(f"not an extended natural: {value!r}")


def format_extnat(n: ExtNat) -> str:
    return "inf" if n == INF else str(n)


def is_prime(n: int) -> bool:
    # sympy's test is deterministic below 2**64 and BPSW above.
    from sympy import isprime

    return isprime(n)


class Prime(int):
    """An int known to be prime; construction fails with PrimeError otherwise."""

    def __new__(cls, value):
        if isinstance(value, Prime):
            return value
        if isinstance(value, bool) or not isinstance(value, int):
            raise PrimeError(f"not an integer: {value!r}")
        if value < 2 or not _is_prime_cached(value):
            raise PrimeError(f"{value} is not prime")
        return super().__new__(cls, value)

    def __repr__(self) -> str:
        return f"Prime({int(self)})"

    __str__ = int.__repr__


_SMALL_PRIMES: dict[int, bool] = {}


def _is_prime_cached(n: int) -> bool:
    if n < 1 << 16:
        hit = _SMALL_PRIMES.get(n)
        if hit is None:
            hit = _SMALL_PRIMES[n] = _trial_division(n)
        return hit
    return is_prime(n)


def _trial_division(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, math.isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True
