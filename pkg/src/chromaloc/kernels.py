"""Backend selection for the hot loops.

The compiled ``_ckernels`` extension is used when it was built; otherwise
the pure-Python ``_pykernels`` module provides the same functions.
"""
from __future__ import annotations

from types import ModuleType
from typing import NamedTuple, Optional

from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None


class SweepResult(NamedTuple):
    p: int
    limit: int
    factorials_checked: int
    pairs_checked: int
    mismatches: int
    # (n, k, formula, carries, factorial_difference) of the first failing pair;
    # k == -1 marks a factorial mismatch with (n, -1, formula, oracle, 0).
    first_mismatch: Optional[tuple[int, int, int, int, int]]

    @property
    def ok(self) -> bool:
        return self.mismatches == 0


class _Backend:
    def __init__(self, module: ModuleType):
        self.module = module
        self.name = module.BACKEND_NAME

    def valuation_sweep(self, p: int, limit: int) -> SweepResult:
        return SweepResult(p, limit, *self.module.valuation_sweep(p, limit))


AVAILABLE: dict[str, _Backend] = {"python": _Backend(_pykernels)}
if _ckernels is not None:
    AVAILABLE["cython"] = _Backend(_ckernels)

DEFAULT = "cython" if "cython" in AVAILABLE else "python"


def get_backend(name: str | None = None) -> _Backend:
    name = DEFAULT if name is None else name
    try:
        return AVAILABLE[name]
    except KeyError:
        raise ValueError(f"backend {name!r} unavailable; have {sorted(AVAILABLE)}") from None
