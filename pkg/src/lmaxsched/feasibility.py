"""Exact feasibility (every job on time) by layered dynamic programming.

Jobs are processed in EDD order, so the job being added is always the last
one on whichever machine receives it. The state after a job prefix is the
vector ``(w_1, ..., w_{m-1})`` of work placed on the first ``m - 1`` machines.
The last machine's load is implied by the prefix's total work. Machine ``j``
finishes at ``rates[j] * w_j``, and a placement is legal when that is no later
than the added job's deadline.

Deadline tests are done in work units by dividing. ``rate * w <= d`` holds
exactly when ``w <= d // rate`` (floor division), so no product is ever formed
and negative deadlines need no special case.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .errors import InvariantError, PreconditionError, ResourceLimitError
from .instance import Assignment, Instance, edd_order

DEFAULT_MEMORY_CAP_BITS = 2**31


@dataclass(frozen=True)
class DpLayer:
    """Boolean table over work-allocation vectors, stored one bit per cell."""

    dims: tuple[int, ...]
    bits: np.ndarray

    @classmethod
    def pack(cls, table: np.ndarray) -> "DpLayer":
        return cls(tuple(table.shape), np.packbits(table.ravel()))

    def table(self) -> np.ndarray:
        size = math.prod(self.dims)
        return np.unpackbits(self.bits, count=size).astype(bool).reshape(self.dims)

    def true_cells(self) -> set[tuple[int, ...]]:
        return {tuple(int(v) for v in idx) for idx in np.argwhere(self.table())}


@dataclass(frozen=True)
class FeasibilityResult:
    feasible: bool
    witness: Optional[Assignment] = None

    def __bool__(self) -> bool:
        return self.feasible


def layer_dims(instance: Instance) -> tuple[int, ...]:
    """Extent of each of the ``m - 1`` state coordinates.

    A machine holding any work finishes no later than some job's deadline, so
    ``w_j <= max_deadline // rate_j``; it also never exceeds the total work.
    """
    total = instance.total_work
    max_deadline = max((job.deadline for job in instance.jobs), default=0)
    return tuple(min(total, max(0, max_deadline // rate)) + 1 for rate in instance.rates[:-1])


def required_bits(instance: Instance) -> int:
    return (instance.n + 1) * math.prod(layer_dims(instance))


def _check_cap(required: int, memory_cap_bits: int) -> None:
    if required > memory_cap_bits:
        raise ResourceLimitError("DP table", required, memory_cap_bits)


def _axis_slice(ndim: int, axis: int, sl: slice) -> tuple[slice, ...]:
    index = [slice(None)] * ndim
    index[axis] = sl
    return tuple(index)


def _axis_column(values: np.ndarray, ndim: int, axis: int) -> np.ndarray:
    shape = [1] * ndim
    shape[axis] = len(values)
    return values.reshape(shape)


def dp_layers(
    instance: Instance, memory_cap_bits: int = DEFAULT_MEMORY_CAP_BITS
) -> list[DpLayer]:
    """All layers for the EDD-ordered job prefixes, layer 0 first.

    Stops after the first all-false layer, so a list shorter than ``n + 1``
    means infeasible.
    """
    dims = layer_dims(instance)
    _check_cap(required_bits(instance), memory_cap_bits)
    k = len(dims)
    rates = instance.rates
    last_rate = rates[-1]

    # load on the first m-1 machines, per cell
    max_load = sum(extent - 1 for extent in dims)
    dtype = np.min_scalar_type(max_load + 1)
    load = np.zeros(dims, dtype=dtype)
    for axis, extent in enumerate(dims):
        load += _axis_column(np.arange(extent, dtype=dtype), k, axis)

    table = np.zeros(dims, dtype=bool)
    table[(0,) * k] = True
    layers = [DpLayer.pack(table)]
    prefix = 0
    for i in edd_order(instance):
        work, deadline = instance.jobs[i].work, instance.jobs[i].deadline
        prefix += work
        # job goes last on machine m: its load is prefix - load
        threshold = min(max(prefix - deadline // last_rate, 0), max_load + 1)
        nxt = table & (load >= threshold)
        for axis, extent in enumerate(dims):
            if work >= extent:
                continue
            limit = deadline // rates[axis]
            targets = np.arange(work, extent, dtype=np.int64)
            on_time = _axis_column(targets <= limit, k, axis)
            src = table[_axis_slice(k, axis, slice(0, extent - work))]
            nxt[_axis_slice(k, axis, slice(work, extent))] |= src & on_time
        table = nxt
        layers.append(DpLayer.pack(table))
        if not table.any():
            break
    return layers


def reconstruct_assignment(layers: Sequence[DpLayer], instance: Instance) -> Assignment:
    """Walk back from a true cell of the final layer, choosing a machine per job."""
    if len(layers) != instance.n + 1:
        raise InvariantError(f"expected {instance.n + 1} layers, got {len(layers)}")
    order = edd_order(instance)
    rates = instance.rates
    k = instance.m - 1
    final = layers[-1].table()
    if not final.any():
        raise InvariantError("final layer has no true cell")
    cell = [int(v) for v in np.unravel_index(int(np.argmax(final)), final.shape)]
    prefix = instance.total_work
    machine_of = [0] * instance.n
    for step in range(instance.n, 0, -1):
        job = instance.jobs[order[step - 1]]
        prev = layers[step - 1].table()
        chosen = 0
        for axis in range(k):
            w = cell[axis]
            if w >= job.work and rates[axis] * w <= job.deadline:
                cand = list(cell)
                cand[axis] = w - job.work
                if prev[tuple(cand)]:
                    chosen, cell = axis + 1, cand
                    break
        if not chosen:
            if prev[tuple(cell)] and rates[-1] * (prefix - sum(cell)) <= job.deadline:
                chosen = instance.m
            else:
                raise InvariantError(f"no predecessor for job {job.id} at cell {tuple(cell)}")
        machine_of[job.id] = chosen
        prefix -= job.work
    if any(cell):
        raise InvariantError(f"backtracking ended at {tuple(cell)}, not the origin")
    return Assignment(tuple(machine_of))


def feasible_general(
    instance: Instance, memory_cap_bits: int = DEFAULT_MEMORY_CAP_BITS
) -> FeasibilityResult:
    """Can every job meet its deadline on these related machines?"""
    layers = dp_layers(instance, memory_cap_bits)
    if len(layers) < instance.n + 1 or not layers[-1].table().any():
        return FeasibilityResult(False)
    return FeasibilityResult(True, reconstruct_assignment(layers, instance))


def two_machine_table(
    instance: Instance, memory_cap_bits: int = DEFAULT_MEMORY_CAP_BITS
) -> np.ndarray:
    """Rows ``D[i][t]``: some on-time schedule of the first ``i`` EDD jobs has
    machine 1 finishing at exactly ``t``. Shape ``(n + 1, W + 1)``.
    """
    if instance.m != 2 or not instance.machines.unit_rates:
        raise PreconditionError("two-machine DP needs exactly two unit-rate machines")
    total = instance.total_work
    _check_cap((instance.n + 1) * (total + 1), memory_cap_bits)
    times = np.arange(total + 1, dtype=np.int64)
    rows = np.zeros((instance.n + 1, total + 1), dtype=bool)
    rows[0, 0] = True
    before = 0  # work of jobs already placed
    for row, i in enumerate(edd_order(instance), start=1):
        work, deadline = instance.jobs[i].work, instance.jobs[i].deadline
        prev = rows[row - 1]
        # job on machine 1, which then finishes at t
        rows[row, work:] = prev[: total + 1 - work] & (times[work:] <= deadline)
        # job on machine 2, which had finished at before - t
        rows[row] |= prev & (before - times <= deadline - work)
        before += work
    return rows


def feasible_two_machines(
    instance: Instance, memory_cap_bits: int = DEFAULT_MEMORY_CAP_BITS
) -> FeasibilityResult:
    """Time-indexed DP specialised to two identical machines."""
    rows = two_machine_table(instance, memory_cap_bits)
    if not rows[-1].any():
        return FeasibilityResult(False)
    order = edd_order(instance)
    t = int(np.argmax(rows[-1]))
    machine_of = [0] * instance.n
    for row in range(instance.n, 0, -1):
        job = instance.jobs[order[row - 1]]
        if t >= job.work and t <= job.deadline and rows[row - 1, t - job.work]:
            machine_of[job.id] = 1
            t -= job.work
        elif rows[row - 1, t]:
            machine_of[job.id] = 2
        else:
            raise InvariantError(f"no predecessor for job {job.id} at time {t}")
    return FeasibilityResult(True, Assignment(tuple(machine_of)))
