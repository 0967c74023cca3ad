"""Search caps and cooperative cancellation shared by the exact solvers."""

from __future__ import annotations

import os
from typing import Callable, Optional

#: default caps, keyed by search kind
DEFAULT_CAPS = {
    "hamilton_order": 40,
    "edge_coloring_size": 50,
    "canonical_order": 16,
    "eulerian_size": 24,
    "planarity_witness_order": 20,
    "coarsening_order": 12,
}

CAP_ENV = "TRUNKIT_CAP_OVERRIDE"

Cancel = Optional[Callable[[], bool]]


class CapExceeded(ValueError):
    """Input is larger than the exact search is allowed to attempt."""

    def __init__(self, kind: str, value: int, cap: int):
        super().__init__(f"{kind}: {value} exceeds cap {cap} (set {CAP_ENV} to raise)")
        self.kind = kind
        self.value = value
        self.cap = cap


class SearchCancelled(RuntimeError):
    pass


def cap(kind: str) -> int:
    """Current cap for `kind`; the env override is a multiplier (may run long)."""
    base = DEFAULT_CAPS[kind]
    raw = os.environ.get(CAP_ENV)
    if not raw:
        return base
    try:
        factor = float(raw)
    except ValueError:
        return base
    return max(base, int(base * factor))


def check_cap(kind: str, value: int) -> None:
    limit = cap(kind)
    if value > limit:
        raise CapExceeded(kind, value, limit)


class Ticker:
    """Polls a cancel callback every `every` search nodes."""

    __slots__ = ("cancel", "every", "count")

    def __init__(self, cancel: Cancel, every: int = 1024):
        self.cancel = cancel
        self.every = every
        self.count = 0

    def tick(self) -> None:
        self.count += 1
        if self.cancel is not None and self.count % self.every == 0 and self.cancel():
            raise SearchCancelled(f"cancelled after {self.count} nodes")
