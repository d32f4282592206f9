"""Exhaustive reference solvers for small instances.

Nothing here touches the dynamic programs. Every answer comes from
enumerating assignments (and, for :func:`brute_force_all_orders_feasible`,
job orders as well), so these functions serve as independent checks.
"""

from __future__ import annotations

from itertools import product
from typing import Sequence

import numpy as np

from .errors import ResourceLimitError
from .instance import Assignment, Instance, edd_order, evaluate_schedule
from .solver import OptimalResult

DEFAULT_ENUM_CAP = 20_000_000
ALL_ORDERS_MAX_JOBS = 6
_CHUNK = 1 << 16


def _assignment_digits(start: int, stop: int, n: int, m: int) -> np.ndarray:
    """Rows ``start..stop-1`` of the base-``m`` counting table, job 0 most significant."""
    idx = np.arange(start, stop, dtype=np.int64)
    digits = np.empty((stop - start, n), dtype=np.int64)
    for job in range(n - 1, -1, -1):
        idx, digits[:, job] = np.divmod(idx, m)
    return digits


def brute_force_min_lmax(instance: Instance, enum_cap: int = DEFAULT_ENUM_CAP) -> OptimalResult:
    """Best of all ``m**n`` assignments, each machine running EDD.

    Ties go to the lexicographically smallest machine vector. ``probes`` is
    always 0 since no feasibility test is involved.
    """
    n, m = instance.n, instance.m
    if n == 0:
        return OptimalResult(None, Assignment(()), 0)
    total = m**n
    if total > enum_cap:
        raise ResourceLimitError("assignment enumeration", total, enum_cap)
    order = edd_order(instance)
    rates = np.array(instance.rates, dtype=np.int64)
    best_value, best_row = None, -1
    for start in range(0, total, _CHUNK):
        stop = min(total, start + _CHUNK)
        digits = _assignment_digits(start, stop, n, m)
        rows = np.arange(stop - start)
        load = np.zeros((stop - start, m), dtype=np.int64)
        lateness = np.full(stop - start, np.iinfo(np.int64).min, dtype=np.int64)
        for i in order:
            job = instance.jobs[i]
            machine = digits[:, i]
            load[rows, machine] += job.work
            finish = load[rows, machine] * rates[machine]
            np.maximum(lateness, finish - job.deadline, out=lateness)
        local = int(np.argmin(lateness))
        if best_value is None or lateness[local] < best_value:
            best_value, best_row = int(lateness[local]), start + local
    machine_of = tuple(int(v) + 1 for v in _assignment_digits(best_row, best_row + 1, n, m)[0])
    assignment = Assignment(machine_of)
    report = evaluate_schedule(instance, assignment)
    return OptimalResult(report.lmax, assignment, 0)


def brute_force_feasible(instance: Instance, lateness: int, enum_cap: int = DEFAULT_ENUM_CAP) -> bool:
    if instance.n == 0:
        return True
    return brute_force_min_lmax(instance, enum_cap).lmax <= lateness


def brute_force_all_orders_feasible(instance: Instance, max_jobs: int = ALL_ORDERS_MAX_JOBS) -> bool:
    """Does any assignment with any per-machine job order meet every deadline?"""
    if instance.n > max_jobs:
        raise ResourceLimitError("order enumeration (jobs)", instance.n, max_jobs)
    if instance.n == 0:
        return True
    work = np.array([[job.work for job in instance.jobs]], dtype=np.int64)
    deadline = np.array([[job.deadline for job in instance.jobs]], dtype=np.int64)
    return bool(all_orders_feasible_batch(work, deadline, instance.rates)[0])


# Batched forms: one row per instance, all rows sharing n and the rates.
# They exist so exhaustive sweeps over hundreds of thousands of instances stay fast.


def edd_min_lmax_batch(work: np.ndarray, deadline: np.ndarray, rates: Sequence[int]) -> np.ndarray:
    """Optimal Lmax per row, enumerating every assignment under per-machine EDD."""
    work = np.asarray(work, dtype=np.int64)
    deadline = np.asarray(deadline, dtype=np.int64)
    count, n = work.shape
    m = len(rates)
    if n == 0:
        raise ValueError("rows need at least one job")
    order = np.argsort(deadline, axis=1, kind="stable")
    work = np.take_along_axis(work, order, axis=1)
    deadline = np.take_along_axis(deadline, order, axis=1)
    best = np.full(count, np.iinfo(np.int64).max, dtype=np.int64)
    for machine_of in product(range(m), repeat=n):
        # machine_of is indexed by EDD position; all m**n maps are covered either way
        load = np.zeros((count, m), dtype=np.int64)
        lateness = np.full(count, np.iinfo(np.int64).min, dtype=np.int64)
        for pos, j in enumerate(machine_of):
            load[:, j] += work[:, pos]
            np.maximum(lateness, load[:, j] * rates[j] - deadline[:, pos], out=lateness)
        np.minimum(best, lateness, out=best)
    return best


def all_orders_feasible_batch(work: np.ndarray, deadline: np.ndarray, rates: Sequence[int]) -> np.ndarray:
    """Per row: can the jobs be split over the machines and each machine's jobs
    ordered somehow so that nothing is late?

    For every machine and every job subset, all orderings of that subset are
    tried (depth-first over ordered prefixes). The results are then combined
    over all ``m**n`` assignments.
    """
    work = np.asarray(work, dtype=np.int64)
    deadline = np.asarray(deadline, dtype=np.int64)
    count, n = work.shape
    m = len(rates)
    full = 1 << n

    def orderable(rate: int) -> list[np.ndarray]:
        ok = [np.zeros(count, dtype=bool) for _ in range(full)]
        ok[0][:] = True

        def extend(mask: int, finish: np.ndarray, alive: np.ndarray) -> None:
            for job in range(n):
                bit = 1 << job
                if mask & bit:
                    continue
                nxt_finish = finish + work[:, job]
                nxt_alive = alive & (nxt_finish * rate <= deadline[:, job])
                ok[mask | bit] |= nxt_alive
                if nxt_alive.any():
                    extend(mask | bit, nxt_finish, nxt_alive)

        extend(0, np.zeros(count, dtype=np.int64), np.ones(count, dtype=bool))
        return ok

    per_machine = [orderable(rate) for rate in rates]
    answer = np.zeros(count, dtype=bool)
    for machine_of in product(range(m), repeat=n):
        masks = [0] * m
        for job, j in enumerate(machine_of):
            masks[j] |= 1 << job
        combined = per_machine[0][masks[0]].copy()
        for j in range(1, m):
            combined &= per_machine[j][masks[j]]
        answer |= combined
    return answer
