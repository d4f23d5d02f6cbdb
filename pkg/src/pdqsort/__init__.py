"""Pattern-defeating quicksort.

An in-place, unstable hybrid of quicksort, insertion sort and heapsort:
tripartite handling of equal elements through paired partition kernels, a
bad-partition budget with deterministic pattern breaking, an optimistic
linear path for nearly sorted inputs, and an optional block-based
branch-free partitioner. Every heuristic is individually toggleable via
:class:`SortConfig`. The ``pdqsort`` CLI adds benchmark, input-generation,
entropy-table and verification commands.
"""

from .datagen import (
    DISTRIBUTION_KINDS,
    ELEMENT_TYPES,
    DistributionSpec,
    array_digest,
    generate,
)
from .driver import (
    DEFAULT_CONFIG,
    SortConfig,
    break_patterns,
    choose_pivot,
    introsort_baseline,
    is_bad_partition,
    sort,
    sort_with,
    sort_with_config,
)
from .instrumentation import (
    METRIC_FIELDS,
    Metrics,
    adversary_input,
    counting_ordering,
    instrumented_sort,
)
from .partition import (
    BlockBuffers,
    PartitionResult,
    block_partition_right,
    partition_left,
    partition_right,
)
from .small_sorts import (
    heapsort,
    insertion_sort,
    partial_insertion_sort,
    sort3,
    unguarded_insertion_sort,
)

__version__ = "0.1.0"

__all__ = [
    "BlockBuffers",
    "DEFAULT_CONFIG",
    "DISTRIBUTION_KINDS",
    "DistributionSpec",
    "ELEMENT_TYPES",
    "METRIC_FIELDS",
    "Metrics",
    "PartitionResult",
    "SortConfig",
    "adversary_input",
    "array_digest",
    "block_partition_right",
    "break_patterns",
    "choose_pivot",
    "counting_ordering",
    "generate",
    "heapsort",
    "insertion_sort",
    "instrumented_sort",
    "introsort_baseline",
    "is_bad_partition",
    "partial_insertion_sort",
    "partition_left",
    "partition_right",
    "sort",
    "sort3",
    "sort_with",
    "sort_with_config",
    "unguarded_insertion_sort",
]
