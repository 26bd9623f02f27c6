"""Partitions of n, dual partitions, cell diagrams, and degree data.

Partitions exchange with the CLI as comma-separated text such as "2,2,1".
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import UsageError

MAX_ENUMERATION_N = 12


@dataclass(frozen=True, order=True)
class Partition:
    """Weakly decreasing positive integer parts; the empty partition is rejected."""

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        if not parts:
            raise UsageError("empty partition: n >= 1 is required")
        if any(p <= 0 for p in parts):
            raise UsageError(f"partition parts must be positive, got {parts}")
        if any(parts[k] < parts[k + 1] for k in range(len(parts) - 1)):
            raise UsageError(f"partition parts must be weakly decreasing, got {parts}")

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)


@dataclass(frozen=True)
class Diagram:
    """Cells (i, j) with i < sigma_j, listed in (j, i)-lexicographic order."""

    cells: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class DegreePair:
    d1: int
    d2: int


def parse_partition(text: str) -> Partition:
    """Parse the comma-separated exchange format, e.g. "2,2,1"."""
    try:
        parts = tuple(int(tok) for tok in text.strip().split(","))
    except ValueError as exc:
        raise UsageError(f"cannot parse partition from {text!r}") from exc
    return Partition(parts)


def all_partitions(n: int) -> list[Partition]:
    """Every partition of n exactly once, in reverse-lexicographic order."""
    if not 1 <= n <= MAX_ENUMERATION_N:
        raise UsageError(
            f"partition enumeration needs 1 <= n <= {MAX_ENUMERATION_N}, got {n}"
        )
    return [Partition(p) for p in _descending_parts(n, n)]


def _descending_parts(n, cap):
    if n == 0:
        yield ()
        return
    for first in range(min(n, cap), 0, -1):
        for rest in _descending_parts(n - first, first):
            yield (first,) + rest


def dual(sigma: Partition) -> Partition:
    """Conjugate partition: column lengths of the diagram of sigma."""
    parts = sigma.parts
    return Partition(tuple(sum(1 for p in parts if p > s) for s in range(parts[0])))


def diagram(sigma: Partition) -> Diagram:
    """The n-cell diagram of sigma in the canonical (j, i) order."""
    cells = tuple(
        (i, j) for j in range(len(sigma.parts)) for i in range(sigma.parts[j])
    )
    return Diagram(cells)


def degrees(sigma: Partition) -> DegreePair:
    """(d1, d2): coordinate sums over the diagram; d2 also equals sum of C(dual_s, 2)."""
    cells = diagram(sigma).cells
    d1 = sum(i for i, _ in cells)
    d2 = sum(j for _, j in cells)
    d2_binomial = sum(comb(s, 2) for s in dual(sigma).parts)
    if d2 != d2_binomial:
        raise RuntimeError(f"degree bookkeeping out of sync for {sigma}: {d2} != {d2_binomial}")
    return DegreePair(d1, d2)
