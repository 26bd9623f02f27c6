"""Resource caps threaded through the long-running computations.

Defaults are sized so that every n <= 5 computation completes with room to
spare; n = 6 runs are the intended consumers of tighter custom caps.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .errors import ResourceLimitError


@dataclass(frozen=True)
class Limits:
    max_pairs: int = 200_000
    max_block_cells: int = 2_000_000
    deadline: float | None = None  # absolute time.monotonic() value

    def check_deadline(self, what: str) -> None:
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise ResourceLimitError(f"wall-clock limit exceeded during {what}")

    def check_block(self, cells: int, what: str) -> None:
        if cells > self.max_block_cells:
            raise ResourceLimitError(
                f"{what} needs a {cells}-cell block, above the cap {self.max_block_cells}",
                cells=cells,
            )


def with_timeout(seconds: float | None, *, max_pairs: int | None = None,
                 max_block_cells: int | None = None) -> Limits:
    """Limits with a wall-clock deadline measured from now; 0/None disables it."""
    base = Limits()
    return Limits(
        max_pairs=max_pairs if max_pairs is not None else base.max_pairs,
        max_block_cells=max_block_cells if max_block_cells is not None else base.max_block_cells,
        deadline=time.monotonic() + seconds if seconds else None,
    )


DEFAULT_LIMITS = Limits()
