"""K(n)-homology profiles of maps out of the p-local sphere.

A profile records, for each height ``0, 1, 2, ..., INF``, whether Morava
K-theory sends the map to zero or to an isomorphism.  Profiles are
eventually constant: a finite ``prefix`` and a ``tail`` that covers every
later height including ``INF``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import reduce
from typing import Optional

from .core import INF, DomainError, ExtNat, NotAlgebraicallyCentral, ParseError, Prime
from .lattice import P_ZERO, PLocalFiniteLoc

__all__ = [
    "Kn",
    "MapProfile",
    "FieldVector",
    "ALL_ISO",
    "ALL_ZERO",
    "type_profile",
    "parse_profile",
    "is_algebraically_central",
    "profile_tensor",
    "tensor_power_profile",
    "cofibre_type",
    "induced_localisation",
    "vector_central_bruteforce",
    "vector_central_predict",
]


class Kn(enum.Enum):
    ZERO = "Z"
    ISO = "I"

    def __and__(self, other: "Kn") -> "Kn":
        return Kn.ISO if self is Kn.ISO and other is Kn.ISO else Kn.ZERO


@dataclass(frozen=True)
class MapProfile:
    prefix: tuple[Kn, ...]
    tail: Kn

    def __post_init__(self):
        prefix = list(self.prefix)
        while prefix and prefix[-1] is self.tail:
            prefix.pop()
        object.__setattr__(self, "prefix", tuple(prefix))

    def entry(self, n: ExtNat) -> Kn:
        if n == INF or n >= len(self.prefix):
            return self.tail
        return self.prefix[n]

    def to_text(self) -> str:
        return "".join(e.value for e in self.prefix) + "/" + self.tail.value

    def __str__(self) -> str:
        return self.to_text()


ALL_ISO = MapProfile((), Kn.ISO)
ALL_ZERO = MapProfile((), Kn.ZERO)


def type_profile(m: ExtNat) -> MapProfile:
    """The algebraically central profile of type ``m``: iso below ``m``, zero from ``m`` on."""
    if m == INF:
        return ALL_ISO
    return MapProfile((Kn.ISO,) * m, Kn.ZERO)


def parse_profile(text: str) -> MapProfile:
    """Parse ``prefix/tail`` literals such as ``"II/Z"``.

    Literals whose prefix ends in the tail character are rejected rather than
    canonicalised, so every accepted literal is the canonical spelling.
    """
    head, sep, tail = text.partition("/")
    if not sep:
        raise ParseError("profile literal needs a '/'", len(text), frozenset({"/"}))
    for i, ch in enumerate(head):
        if ch not in "IZ":
            raise ParseError(f"bad profile character {ch!r}", i, frozenset({"I", "Z", "/"}))
    if len(tail) != 1 or tail not in "IZ":
        raise ParseError("profile tail must be a single I or Z", len(head) + 1, frozenset({"I", "Z"}))
    if head and head[-1] == tail:
        raise ParseError(
            f"non-canonical profile literal, prefix may not end with the tail {tail!r}",
            len(head) - 1,
        )
    return MapProfile(tuple(Kn(ch) for ch in head), Kn(tail))


def is_algebraically_central(pr: MapProfile) -> Optional[ExtNat]:
    """Return the type ``m`` if ``pr`` is iso below ``m`` and zero at and above it, else None."""
    if pr.tail is Kn.ISO:
        return INF if not pr.prefix else None
    if all(e is Kn.ISO for e in pr.prefix):
        return len(pr.prefix)
    return None


def profile_tensor(a: MapProfile, b: MapProfile) -> MapProfile:
    n = max(len(a.prefix), len(b.prefix))
    return MapProfile(tuple(a.entry(i) & b.entry(i) for i in range(n)), a.tail & b.tail)


def tensor_power_profile(pr: MapProfile, N: int) -> MapProfile:
    if N < 1:
        raise DomainError(f"tensor power must be >= 1, got {N}")
    return reduce(profile_tensor, [pr] * N)


def cofibre_type(pr: MapProfile) -> ExtNat:
    m = is_algebraically_central(pr)
    if m is None:
        raise NotAlgebraicallyCentral(f"profile {pr} is not algebraically central")
    return m


def induced_localisation(pr: MapProfile) -> PLocalFiniteLoc:
    m = cofibre_type(pr)
    if m == 0:
        return P_ZERO
    return PLocalFiniteLoc(m - 1 if m != INF else INF)


@dataclass(frozen=True)
class FieldVector:
    """A vector over F_p, i.e. a map from the unit into F_p^d."""

    p: Prime
    entries: tuple[int, ...]

    def __post_init__(self):
        p = Prime(self.p)
        entries = tuple(self.entries)
        for x in entries:
            if not 0 <= x < p:
                raise DomainError(f"entry {x} is not a residue mod {p}")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "entries", entries)

    @property
    def dim(self) -> int:
        return len(self.entries)


def _outer(u, w, p):
    return [[(a * b) % p for b in w] for a in u]


def vector_central_bruteforce(v: FieldVector) -> bool:
    """Check v (x) w == w (x) v against every standard basis vector w."""
    d, p = v.dim, v.p
    for i in range(d):
        w = [0] * d
        w[i] = 1
        if _outer(v.entries, w, p) != _outer(w, v.entries, p):
            return False
    return True


def vector_central_predict(v: FieldVector) -> bool:
    return v.dim <= 1 or not any(v.entries)
