"""The lattice of finite localisations of p-local spectra and of spectra.

A p-local finite localisation is ``L_n^f`` for a height ``n`` in
``{0, 1, ..., INF}``, or the zero localisation.  Zero is stored as height
``-1`` (it behaves exactly like ``L_{-1}^f``), so the order and composition
are plain ``<=`` and ``min`` on heights.

A nonzero finite localisation of spectra is a family of heights indexed by
primes.  Only families that are constant away from finitely many primes
are representable: a ``default`` height plus a finite ``exceptions`` map.
"""
from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from typing import Optional

from .core import INF, DomainError, ExtNat, Prime, ZeroLiftError, extnat, format_extnat

__all__ = [
    "PLocalFiniteLoc",
    "GlobalFiniteLoc",
    "P_ZERO",
    "P_IDENTITY",
    "lnf",
    "ZERO",
    "IDENTITY",
    "RATIONALISATION",
    "params",
    "p_localisation",
    "pl_compose",
    "pl_leq",
    "g_compose",
    "g_leq",
    "g_meet",
    "g_join",
    "restrict",
    "lift_to_global",
    "is_compactly_central",
    "invert_primes",
]

_ZERO_HEIGHT = -1


@dataclass(frozen=True, order=True)
class PLocalFiniteLoc:
    height: ExtNat

    def __post_init__(self):
        if self.height != _ZERO_HEIGHT:
            object.__setattr__(self, "height", extnat(self.height))

    @property
    def is_zero(self) -> bool:
        return self.height == _ZERO_HEIGHT

    @property
    def is_identity(self) -> bool:
        return self.height == INF

    def __str__(self) -> str:
        if self.is_zero:
            return "Zero"
        return f"LnF({format_extnat(self.height)})"

    __repr__ = __str__


P_ZERO = PLocalFiniteLoc(_ZERO_HEIGHT)
P_IDENTITY = PLocalFiniteLoc(INF)


def lnf(n) -> PLocalFiniteLoc:
    return PLocalFiniteLoc(extnat(n))


def pl_compose(a: PLocalFiniteLoc, b: PLocalFiniteLoc) -> PLocalFiniteLoc:
    return a if a.height <= b.height else b


def pl_leq(a: PLocalFiniteLoc, b: PLocalFiniteLoc) -> bool:
    return a.height <= b.height


@dataclass(frozen=True)
class GlobalFiniteLoc:
    """A finite localisation of spectra.

    ``default is None`` marks the zero localisation; otherwise the height at
    prime ``p`` is ``dict(exceptions).get(p, default)``.  Instances are
    canonical after construction, so ``==`` is equality of localisations.
    """

    default: Optional[ExtNat]
    exceptions: tuple[tuple[Prime, ExtNat], ...] = ()

    def __post_init__(self):
        if self.default is None:
            if self.exceptions:
                raise DomainError("the zero localisation carries no parameters")
            return
        default = extnat(self.default)
        items = self.exceptions.items() if isinstance(self.exceptions, Mapping) else self.exceptions
        table: dict[Prime, ExtNat] = {}
        for p, n in items:
            p = Prime(p)
            if p in table:
                raise DomainError(f"duplicate exception prime {p}")
            table[p] = extnat(n)
        canon = tuple(sorted((p, n) for p, n in table.items() if n != default))
        object.__setattr__(self, "default", default)
        object.__setattr__(self, "exceptions", canon)

    @property
    def is_zero(self) -> bool:
        return self.default is None

    def height(self, p: int) -> ExtNat:
        if self.default is None:
            raise DomainError("the zero localisation has no parameters")
        for q, n in self.exceptions:
            if q == p:
                return n
        return self.default

    def exception_primes(self) -> tuple[Prime, ...]:
        return tuple(p for p, _ in self.exceptions)

    def to_text(self) -> str:
        """Canonical atom syntax, re-parseable by :func:`chromaloc.expr.parse_lattice_expr`."""
        if self.default is None:
            return "zero"
        parts = [format_extnat(self.default)]
        parts += [f"{p}->{format_extnat(n)}" for p, n in self.exceptions]
        return "params(" + ";".join(parts) + ")"

    def __str__(self) -> str:
        return self.to_text()


ZERO = GlobalFiniteLoc(None)
IDENTITY = GlobalFiniteLoc(INF)
RATIONALISATION = GlobalFiniteLoc(0)


def params(default, exceptions: Mapping | Iterable = ()) -> GlobalFiniteLoc:
    return GlobalFiniteLoc(default, exceptions if isinstance(exceptions, Mapping) else tuple(exceptions))


def p_localisation(p: int) -> GlobalFiniteLoc:
    return GlobalFiniteLoc(0, {p: INF})


def _pointwise(F: GlobalFiniteLoc, G: GlobalFiniteLoc, op) -> GlobalFiniteLoc:
    primes = set(F.exception_primes()) | set(G.exception_primes())
    return GlobalFiniteLoc(
        op(F.default, G.default),
        {p: op(F.height(p), G.height(p)) for p in primes},
    )


def g_compose(F: GlobalFiniteLoc, G: GlobalFiniteLoc) -> GlobalFiniteLoc:
    if F.is_zero or G.is_zero:
        return ZERO
    return _pointwise(F, G, min)


g_meet = g_compose


def g_join(F: GlobalFiniteLoc, G: GlobalFiniteLoc) -> GlobalFiniteLoc:
    if F.is_zero:
        return G
    if G.is_zero:
        return F
    return _pointwise(F, G, max)


def g_leq(F: GlobalFiniteLoc, G: GlobalFiniteLoc) -> bool:
    if F.is_zero:
        return True
    if G.is_zero:
        return False
    if F.default > G.default:
        return False
    primes = set(F.exception_primes()) | set(G.exception_primes())
    return all(F.height(p) <= G.height(p) for p in primes)


def restrict(F: GlobalFiniteLoc, p: int) -> PLocalFiniteLoc:
    p = Prime(p)
    if F.is_zero:
        return P_ZERO
    return PLocalFiniteLoc(F.height(p))


def lift_to_global(p: int, L: PLocalFiniteLoc) -> GlobalFiniteLoc:
    """The localisation of spectra that is ``L`` at ``p`` and the identity at every other prime."""
    p = Prime(p)
    if L.is_zero:
        raise ZeroLiftError(f"cannot lift the zero localisation at p={p}")
    return GlobalFiniteLoc(INF, {p: L.height})


def is_compactly_central(F: GlobalFiniteLoc) -> bool:
    # Only finitely many primes may carry a non-identity height; exceptions are finite.
    return F.is_zero or F.default == INF


def invert_primes(primes: Iterable[int]) -> GlobalFiniteLoc:
    return GlobalFiniteLoc(INF, {Prime(p): 0 for p in set(primes)})
