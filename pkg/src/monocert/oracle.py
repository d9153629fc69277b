"""Query counting around a function under test.

Algorithms receive a CountingOracle rather than the bare function, so the
cost model is explicit: every evaluation routed through the oracle counts,
nothing is memoized, and an optional budget fails a query before the
underlying function runs. The brute-force verifier deliberately bypasses
this layer; its work is never part of an algorithm's query count.
"""

from __future__ import annotations

from .errors import BudgetError, ContractError, DimensionError
from .model import MonotoneFunction, Point


class CountingOracle:
    """Counts, optionally logs, and optionally budgets evaluations.

    The count is the number of evaluations issued through this instance.
    Wrapping the outermost function an algorithm sees makes derived views
    built on top of it (mirrored or thresholded queries) cost exactly one
    count per outer evaluation, which is the intended accounting.
    """

    def __init__(self, inner: MonotoneFunction, budget: int | None = None,
                 log: bool = False):
        if not isinstance(inner, MonotoneFunction):
            raise TypeError(f"expected MonotoneFunction, got {type(inner).__name__}")
        if budget is not None and budget < 0:
            raise ContractError(f"budget must be nonnegative, got {budget!r}")
        self.inner = inner
        self.budget = budget
        self._count = 0
        self._log: list[tuple[Point, int | float]] | None = [] if log else None

    @property
    def n(self) -> int:
        return self.inner.n

    @property
    def kind(self) -> str:
        return self.inner.kind

    @property
    def count(self) -> int:
        return self._count

    def query(self, x: Point) -> int | float:
        if x.n != self.inner.n:
            raise DimensionError(
                f"point on {x.n} coordinates, function takes {self.inner.n}")
        return self.query_mask(x.mask)

    def query_mask(self, mask: int) -> int | float:
        """Evaluate at a raw bitmask; the hot path, skips Point validation."""
        if self.budget is not None and self._count >= self.budget:
            raise BudgetError(f"query budget of {self.budget} exhausted")
        value = self.inner.evaluate_mask(mask)
        self._count += 1
        if self._log is not None:
            self._log.append((Point(self.inner.n, mask), value))
        return value

    def reset(self) -> None:
        """Zero the count and clear the transcript."""
        self._count = 0
        if self._log is not None:
            self._log = []

    def take_log(self) -> list[tuple[Point, int | float]]:
        """The transcript in issue order; requires logging to be enabled."""
        if self._log is None:
            raise ContractError("logging was not enabled for this oracle")
        return list(self._log)
