"""Exact bin packing through scheduling feasibility.

Items become unit-rate jobs whose work is the item size, all due at the bin
capacity. They can all finish on time on ``m`` machines exactly when they fit
into ``m`` bins, and each machine's job set is then a bin's contents.

The DP state space grows like ``(b + 1) ** (m - 1)``, so this is practical only
while the bin count stays small.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from .errors import PreconditionError, RangeError, ResourceLimitError
from .feasibility import DEFAULT_MEMORY_CAP_BITS, FeasibilityResult, feasible_general
from .instance import Instance, Job, MachinePark

Strategy = Literal["scan", "bisect"]
BRUTE_FORCE_MAX_ITEMS = 10


@dataclass(frozen=True)
class BinPackInstance:
    item_sizes: tuple[int, ...]
    bin_capacity: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "item_sizes", tuple(self.item_sizes))
        if self.bin_capacity < 1:
            raise RangeError(f"bin capacity must be >= 1, got {self.bin_capacity}")
        for i, size in enumerate(self.item_sizes):
            if not 1 <= size <= self.bin_capacity:
                raise RangeError(f"item {i} has size {size}, outside [1, {self.bin_capacity}]")

    @property
    def n(self) -> int:
        return len(self.item_sizes)


@dataclass(frozen=True)
class Packing:
    bins: int
    bin_of: tuple[int, ...]  # 1-based bin per item


def to_scheduling_instance(bp: BinPackInstance, m: int) -> Instance:
    if m < 1:
        raise PreconditionError(f"need at least one machine, got {m}")
    jobs = tuple(Job(size, bp.bin_capacity, i) for i, size in enumerate(bp.item_sizes))
    return Instance(MachinePark.identical(m), jobs)


def _fits(bp: BinPackInstance, m: int, memory_cap_bits: int) -> FeasibilityResult:
    return feasible_general(to_scheduling_instance(bp, m), memory_cap_bits)


def pack(
    bp: BinPackInstance,
    strategy: Strategy = "scan",
    memory_cap_bits: int = DEFAULT_MEMORY_CAP_BITS,
) -> Packing:
    """Minimum bin count plus the packing that achieves it.

    ``scan`` tries ``m = 1, 2, ...`` and stops at the first that fits. Small
    ``m`` probes are the cheap ones. ``bisect`` searches ``[1, n]``. Both rely
    on feasibility being monotone in ``m`` and return the same count.
    """
    if bp.n == 0:
        raise PreconditionError("bin packing needs at least one item")
    if strategy == "scan":
        for m in range(1, bp.n + 1):
            result = _fits(bp, m, memory_cap_bits)
            if result.feasible:
                assert result.witness is not None
                return Packing(m, result.witness.machine_of)
        raise AssertionError("n bins always suffice")
    if strategy != "bisect":
        raise PreconditionError(f"unknown strategy {strategy!r}")
    lo, hi = 1, bp.n
    best = None
    while lo < hi:
        mid = (lo + hi) // 2
        result = _fits(bp, mid, memory_cap_bits)
        if result.feasible:
            hi, best = mid, result
        else:
            lo = mid + 1
    if best is None:
        best = _fits(bp, hi, memory_cap_bits)
    assert best.feasible and best.witness is not None
    return Packing(hi, best.witness.machine_of)


def min_bins(
    bp: BinPackInstance,
    strategy: Strategy = "scan",
    memory_cap_bits: int = DEFAULT_MEMORY_CAP_BITS,
) -> int:
    return pack(bp, strategy, memory_cap_bits).bins


def brute_force_min_bins(bp: BinPackInstance, max_items: int = BRUTE_FORCE_MAX_ITEMS) -> int:
    """Exact minimum by enumerating set partitions.

    An item may only open the lowest-numbered empty bin, which skips
    relabelings of the same partition. Branches that already use as many
    bins as the best known packing are cut.
    """
    if bp.n > max_items:
        raise ResourceLimitError("bin enumeration (items)", bp.n, max_items)
    sizes = bp.item_sizes
    best = len(sizes)
    loads: list[int] = []

    def place(i: int) -> None:
        nonlocal best
        if len(loads) >= best:
            return
        if i == len(sizes):
            best = len(loads)
            return
        for k in range(len(loads)):
            if loads[k] + sizes[i] <= bp.bin_capacity:
                loads[k] += sizes[i]
                place(i + 1)
                loads[k] -= sizes[i]
        loads.append(sizes[i])
        place(i + 1)
        loads.pop()

    place(0)
    return best
