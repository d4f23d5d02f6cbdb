"""Counters, the counting ordering wrapper, and the adversarial input.

A :class:`Metrics` instance belongs to a single sort invocation and is a
deterministic function of (input, config). Comparison counting happens in
the ordering wrapper; the driver and kernels only bump coarse counters.
"""

from __future__ import annotations

import operator
from collections import Counter
from dataclasses import dataclass, fields
from typing import Any, Callable, MutableSequence, Optional

from .driver import DEFAULT_CONFIG, SortConfig, _default_branch_cheap, _sort_range

Ordering = Callable[[Any, Any], bool]

# Column order of the counter fragment in benchmark CSV rows.
METRIC_FIELDS = (
    "comparisons",
    "element_moves",
    "exchanges",
    "partition_right_calls",
    "partition_left_calls",
    "bad_partitions",
    "heapsort_fallbacks",
    "partial_insertion_attempts",
    "partial_insertion_aborts",
    "max_depth",
)


@dataclass
class Metrics:
    """Counters accumulated by one sort.

    ``comparisons`` counts ordering-relation calls; ``exchanges`` counts
    two-element swaps (one resolved pair per block-round entry);
    ``element_moves`` counts single-element relocations (insertion-sort
    hole shifting, block rotations, pivot placement). ``max_depth`` is the
    deepest recursive call, with the top-level call at depth 0.
    ``distinct_pivot_reuse`` maps pivot values to times chosen and is only
    populated when pivot tracing was requested.
    """

    comparisons: int = 0
    element_moves: int = 0
    exchanges: int = 0
    partition_right_calls: int = 0
    partition_left_calls: int = 0
    bad_partitions: int = 0
    heapsort_fallbacks: int = 0
    partial_insertion_attempts: int = 0
    partial_insertion_aborts: int = 0
    max_depth: int = 0
    distinct_pivot_reuse: Optional[dict] = None

    def counter_values(self) -> tuple:
        """The CSV row fragment, in METRIC_FIELDS order."""
        return tuple(getattr(self, name) for name in METRIC_FIELDS)


assert METRIC_FIELDS == tuple(
    f.name for f in fields(Metrics) if f.name != "distinct_pivot_reuse"
)


def counting_ordering(base: Ordering, metrics: Metrics) -> Ordering:
    """Wrap ``base`` so every call increments ``metrics.comparisons``."""

    def counted(a, b):
        metrics.comparisons += 1
        return base(a, b)

    return counted


def instrumented_sort(
    data: MutableSequence,
    lt: Ordering = operator.lt,
    config: SortConfig = DEFAULT_CONFIG,
    branch_cheap: Optional[bool] = None,
    trace_pivots: bool = False,
) -> Metrics:
    """Sort ``data`` in place and return the accumulated :class:`Metrics`.

    ``trace_pivots=True`` additionally records every chosen pivot value
    (elements must be hashable) into ``distinct_pivot_reuse``; leave it
    off when measuring, the trace is test machinery.
    """
    metrics = Metrics()
    if branch_cheap is None:
        branch_cheap = _default_branch_cheap(data, lt)
    use_block = config.use_block_partition and branch_cheap
    trace = [] if trace_pivots else None
    _sort_range(
        data,
        0,
        len(data),
        counting_ordering(lt, metrics),
        config,
        use_block,
        metrics,
        trace,
    )
    if trace is not None:
        metrics.distinct_pivot_reuse = dict(Counter(trace))
    return metrics


def adversary_input(n: int, config: SortConfig = DEFAULT_CONFIG) -> list:
    """A permutation of 0..n-1 crafted against the deterministic pivot rule.

    The sort runs once over an index array under a relation that keeps
    values indeterminate ("gas") as long as possible; whenever two gas
    values meet, the one involved in the previous gas comparison -- in a
    quicksort, the pivot -- is pinned to the smallest unused value, which
    drags every partition toward the unbalanced side. Pinned values only
    grow, so each answer given during construction also holds under the
    final frozen values: replaying the frozen array through the same
    scalar-kernel configuration reproduces the construction run exactly.
    """
    if n < 1:
        raise ValueError("adversary needs n >= 1")
    gas = n
    values = [gas] * n
    next_solid = 0
    candidate = -1

    def pinning(x, y):
        nonlocal next_solid, candidate
        vx = values[x]
        vy = values[y]
        if vx == gas and vy == gas:
            if x == candidate:
                values[x] = vx = next_solid
            else:
                values[y] = vy = next_solid
            next_solid += 1
        if vx == gas:
            candidate = x
        elif vy == gas:
            candidate = y
        return vx < vy

    order = list(range(n))
    _sort_range(order, 0, n, pinning, config, use_block=False)
    # Anything never forced solid is pinned in final arrangement order,
    # a consistent refinement of the revealed ordering.
    for idx in order:
        if values[idx] == gas:
            values[idx] = next_solid
            next_solid += 1
    return values
