"""Arithmetic in (Z/p^j)[y, eps]/(eps^(p^k)) and the check that
(y + eps)^(p^n) == y^(p^n) there once n is large enough.

Elements are stored by eps-degree; each slot is a sparse polynomial in y,
kept as a sorted tuple of ``(y_degree, coefficient)`` pairs with no zero
coefficients.
"""
from __future__ import annotations

from collections.abc import Iterator, Mapping
from dataclasses import dataclass
from typing import NamedTuple, Optional

from .core import DomainError, ParamMismatch, Prime, ScaleError
from .padic import nu_binom

__all__ = [
    "TruncParams",
    "NilElement",
    "ring_add",
    "ring_neg",
    "ring_sub",
    "ring_mul",
    "ring_pow",
    "binomial_difference_fast",
    "binomial_difference_oracle",
    "verify_nilp_diff",
    "termwise_check",
    "minimal_n",
    "GridCell",
    "theorem_grid",
    "grid_row",
    "ORACLE_MAX_DEGREE",
]

ORACLE_MAX_DEGREE = 64

Poly = tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class TruncParams:
    p: Prime
    j: int
    k: int

    def __post_init__(self):
        object.__setattr__(self, "p", Prime(self.p))
        if isinstance(self.j, bool) or not isinstance(self.j, int) or self.j < 1:
            raise DomainError(f"j must be a positive integer, got {self.j!r}")
        if isinstance(self.k, bool) or not isinstance(self.k, int) or self.k < 0:
            raise DomainError(f"k must be a nonnegative integer, got {self.k!r}")

    @property
    def modulus(self) -> int:
        return self.p**self.j

    @property
    def eps_order(self) -> int:
        """E, the least power of eps that vanishes."""
        return self.p**self.k


def _clean(poly: Mapping[int, int], modulus: int) -> Poly:
    return tuple(sorted((d, c % modulus) for d, c in poly.items() if c % modulus))


@dataclass(frozen=True)
class NilElement:
    params: TruncParams
    coeffs: tuple[Poly, ...]

    def __post_init__(self):
        E, mod = self.params.eps_order, self.params.modulus
        if len(self.coeffs) > E:
            if any(self.coeffs[E:]):
                raise DomainError(f"eps-degree must stay below {E}")
        slots = [_clean(dict(poly), mod) for poly in self.coeffs[:E]]
        slots += [()] * (E - len(slots))
        object.__setattr__(self, "coeffs", tuple(slots))

    @classmethod
    def from_terms(cls, params: TruncParams, terms: Mapping[tuple[int, int], int]) -> "NilElement":
        """Build from ``{(eps_degree, y_degree): coefficient}``; eps-degrees >= E are dropped."""
        E = params.eps_order
        slots: list[dict[int, int]] = [{} for _ in range(E)]
        for (e, d), c in terms.items():
            if e < 0 or d < 0:
                raise DomainError(f"negative degree in term {(e, d)}")
            if e < E:
                slots[e][d] = slots[e].get(d, 0) + c
        return cls(params, tuple(_clean(s, params.modulus) for s in slots))

    @classmethod
    def zero(cls, params: TruncParams) -> "NilElement":
        return cls(params, ())

    @classmethod
    def one(cls, params: TruncParams) -> "NilElement":
        return cls.from_terms(params, {(0, 0): 1})

    @classmethod
    def y(cls, params: TruncParams) -> "NilElement":
        return cls.from_terms(params, {(0, 1): 1})

    @classmethod
    def eps(cls, params: TruncParams) -> "NilElement":
        return cls.from_terms(params, {(1, 0): 1})

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def terms(self) -> dict[tuple[int, int], int]:
        return {(e, d): c for e, poly in enumerate(self.coeffs) for d, c in poly}

    def __add__(self, other):
        return ring_add(self, other)

    def __sub__(self, other):
        return ring_sub(self, other)

    def __mul__(self, other):
        return ring_mul(self, other)

    def __neg__(self):
        return ring_neg(self)

    def __str__(self) -> str:
        parts = []
        for (e, d), c in sorted(self.terms().items()):
            mono = [str(c)] if c != 1 or (e == 0 and d == 0) else []
            if d:
                mono.append("y" if d == 1 else f"y^{d}")
            if e:
                mono.append("eps" if e == 1 else f"eps^{e}")
            parts.append("*".join(mono))
        return " + ".join(parts) if parts else "0"


def _check(a: NilElement, b: NilElement) -> TruncParams:
    if a.params != b.params:
        raise ParamMismatch(f"{a.params} != {b.params}")
    return a.params


def ring_add(a: NilElement, b: NilElement) -> NilElement:
    params = _check(a, b)
    slots = []
    for pa, pb in zip(a.coeffs, b.coeffs):
        acc = dict(pa)
        for d, c in pb:
            acc[d] = acc.get(d, 0) + c
        slots.append(_clean(acc, params.modulus))
    return NilElement(params, tuple(slots))


def ring_neg(a: NilElement) -> NilElement:
    return NilElement(a.params, tuple(tuple((d, -c) for d, c in poly) for poly in a.coeffs))


def ring_sub(a: NilElement, b: NilElement) -> NilElement:
    return ring_add(a, ring_neg(b))


def ring_mul(a: NilElement, b: NilElement) -> NilElement:
    params = _check(a, b)
    E = params.eps_order
    slots: list[dict[int, int]] = [{} for _ in range(E)]
    for ea, pa in enumerate(a.coeffs):
        if not pa:
            continue
        for eb in range(E - ea):
            pb = b.coeffs[eb]
            if not pb:
                continue
            acc = slots[ea + eb]
            for da, ca in pa:
                for db, cb in pb:
                    acc[da + db] = acc.get(da + db, 0) + ca * cb
    return NilElement(params, tuple(_clean(s, params.modulus) for s in slots))


def ring_pow(a: NilElement, N: int) -> NilElement:
    if N < 0:
        raise DomainError("negative exponent")
    result = NilElement.one(a.params)
    base = a
    while N:
        if N & 1:
            result = ring_mul(result, base)
        N >>= 1
        if N:
            base = ring_mul(base, base)
    return result


def binomial_difference_fast(params: TruncParams, n: int) -> NilElement:
    """(y + eps)^(p^n) - y^(p^n), built from C(p^n, i) mod p^j for the surviving i only."""
    if n < 0:
        raise DomainError(f"n must be nonnegative, got {n}")
    N = params.p**n
    mod = params.modulus
    top = min(N, params.eps_order - 1)
    terms = {}
    binom = 1
    for i in range(1, top + 1):
        binom = binom * (N - i + 1) // i
        if binom % mod:
            terms[(i, N - i)] = binom % mod
    return NilElement.from_terms(params, terms)


def binomial_difference_oracle(params: TruncParams, n: int) -> NilElement:
    if n < 0:
        raise DomainError(f"n must be nonnegative, got {n}")
    N = params.p**n
    if N > ORACLE_MAX_DEGREE:
        raise ScaleError(f"p^n = {N} exceeds the oracle limit {ORACLE_MAX_DEGREE}")
    y = NilElement.y(params)
    x = ring_add(y, NilElement.eps(params))
    return ring_sub(ring_pow(x, N), ring_pow(y, N))


def verify_nilp_diff(p: int, j: int, k: int, n: int) -> bool:
    return binomial_difference_fast(TruncParams(p, j, k), n).is_zero


def termwise_check(p: int, j: int, k: int, n: int) -> bool:
    """Every surviving term C(p^n, i) eps^i y^(p^n - i) has valuation >= j."""
    params = TruncParams(p, j, k)
    if n < 0:
        raise DomainError(f"n must be nonnegative, got {n}")
    N = params.p**n
    return all(nu_binom(N, i, params.p) >= j for i in range(1, min(N, params.eps_order - 1) + 1))


def minimal_n(p: int, j: int, k: int, search_bound: int) -> Optional[int]:
    if search_bound < 0:
        raise DomainError(f"search_bound must be >= 0, got {search_bound}")
    for n in range(search_bound + 1):
        if verify_nilp_diff(p, j, k, n):
            return n
    return None


class GridCell(NamedTuple):
    p: int
    j: int
    k: int
    n: int
    zero: bool
    termwise: bool

    @property
    def bound_met(self) -> bool:
        return self.n >= self.j + self.k

    @property
    def ok(self) -> bool:
        return self.zero == self.termwise and (self.zero or not self.bound_met)


def theorem_grid(primes=(2, 3, 5), j_max: int = 3, k_max: int = 3, slack: int = 2) -> Iterator[GridCell]:
    """Every (p, j, k, n) with 1 <= j <= j_max, 0 <= k <= k_max, n <= j + k + slack, in order."""
    for p in primes:
        for j in range(1, j_max + 1):
            for k in range(k_max + 1):
                yield from grid_row(p, j, k, slack)


def grid_row(p: int, j: int, k: int, slack: int = 2) -> list[GridCell]:
    return [
        GridCell(p, j, k, n, verify_nilp_diff(p, j, k, n), termwise_check(p, j, k, n))
        for n in range(j + k + slack + 1)
    ]
