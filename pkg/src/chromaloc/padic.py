"""Exact p-adic valuations of factorials and binomial coefficients.

Every function works on arbitrary-precision ints.  Divisions that the
theory says are exact are checked, and a remainder raises ArithmeticError.
"""
from __future__ import annotations

from .core import DomainError, Prime
from . import kernels

__all__ = [
    "digit_sum",
    "nu_factorial",
    "nu_factorial_oracle",
    "nu_binom",
    "nu_binom_power",
    "carries_in_addition",
    "valuation_sweep",
]


def _nonneg(x: int, name: str) -> int:
    if isinstance(x, bool) or not isinstance(x, int) or x < 0:
        raise DomainError(f"{name} must be a nonnegative integer, got {x!r}")
    return x


def _exact_div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"{num} is not divisible by {den}")
    return q


def digit_sum(n: int, p: int) -> int:
    p = Prime(p)
    n = _nonneg(n, "n")
    if p == 2:
        return n.bit_count() if hasattr(n, "bit_count") else bin(n).count("1")
    total = 0
    while n:
        n, r = divmod(n, p)
        total += r
    return total


def nu_factorial(n: int, p: int) -> int:
    """Legendre's formula: the exponent of ``p`` in ``n!``."""
    return _exact_div(_nonneg(n, "n") - digit_sum(n, p), p - 1)


def nu_factorial_oracle(n: int, p: int) -> int:
    """Sum of ``floor(n / p**j)`` over ``j >= 1``."""
    p = Prime(p)
    n = _nonneg(n, "n")
    total = 0
    while n:
        n //= p
        total += n
    return total


def nu_binom(n: int, k: int, p: int) -> int:
    _nonneg(n, "n")
    _nonneg(k, "k")
    if k > n:
        raise DomainError(f"binomial needs k <= n, got n={n}, k={k}")
    num = digit_sum(k, p) + digit_sum(n - k, p) - digit_sum(n, p)
    nu = _exact_div(num, p - 1)
    if nu < 0:
        raise ArithmeticError(f"negative valuation {nu} for C({n},{k}) at p={p}")
    return nu


def nu_binom_power(n: int, k: int, m: int, p: int) -> int:
    """Valuation of ``C(p**n, m * p**(n-k))``, which must equal ``k``."""
    p = Prime(p)
    _nonneg(n, "n")
    _nonneg(k, "k")
    if k > n:
        raise DomainError(f"need 0 <= k <= n, got n={n}, k={k}")
    if isinstance(m, bool) or not isinstance(m, int) or not 1 <= m < p**k:
        raise DomainError(f"need 1 <= m < p**k = {p**k}, got m={m}")
    if m % p == 0:
        raise DomainError(f"m={m} is divisible by p={p}")
    nu = nu_binom(p**n, m * p ** (n - k), p)
    if nu != k:
        raise ArithmeticError(f"valuation {nu} != {k} for n={n}, k={k}, m={m}, p={p}")
    return nu


def carries_in_addition(a: int, b: int, p: int) -> int:
    p = Prime(p)
    a, b = _nonneg(a, "a"), _nonneg(b, "b")
    carries = carry = 0
    while a or b or carry:
        a, da = divmod(a, p)
        b, db = divmod(b, p)
        carry = 1 if da + db + carry >= p else 0
        carries += carry
    return carries


def valuation_sweep(p: int, limit: int, backend: str | None = None) -> kernels.SweepResult:
    """Cross-check the valuation identities on every ``0 <= k <= n <= limit``.

    For each n: Legendre's formula against the sum of floors.  For each
    pair: the digit-sum binomial formula against the carry count and
    against the difference of factorial valuations.
    """
    p = Prime(p)
    _nonneg(limit, "limit")
    return kernels.get_backend(backend).valuation_sweep(int(p), limit)
