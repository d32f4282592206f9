"""Minimum maximum lateness by bisection over feasibility probes.

A schedule has ``Lmax <= L`` exactly when it meets every deadline after all
deadlines are pushed back by ``L``. Feasibility is monotone in ``L``, so the
optimum is the smallest ``L`` whose probe succeeds.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import InvariantError, PreconditionError
from .feasibility import DEFAULT_MEMORY_CAP_BITS, FeasibilityResult, feasible_general
from .instance import Assignment, Instance, evaluate_schedule, shift_deadlines


@dataclass(frozen=True)
class OptimalResult:
    lmax: Optional[int]
    assignment: Assignment
    probes: int = 0


@dataclass(frozen=True)
class SearchBounds:
    lo: int
    hi: int


def probe(
    instance: Instance, lateness: int, memory_cap_bits: int = DEFAULT_MEMORY_CAP_BITS
) -> FeasibilityResult:
    """Is there a schedule with maximum lateness at most ``lateness``?"""
    return feasible_general(shift_deadlines(instance, lateness), memory_cap_bits)


def search_bounds(instance: Instance) -> SearchBounds:
    """Bracket the optimum.

    Completions are nonnegative, so no lateness is below ``-max(d)``. Putting
    every job on one machine finishes everything by ``max(rate) * W``, which
    makes ``hi`` feasible.
    """
    if instance.n == 0:
        raise PreconditionError("search bounds need at least one job")
    deadlines = [job.deadline for job in instance.jobs]
    return SearchBounds(
        lo=-max(deadlines),
        hi=max(instance.rates) * instance.total_work - min(deadlines),
    )


def min_lmax(
    instance: Instance, memory_cap_bits: int = DEFAULT_MEMORY_CAP_BITS
) -> OptimalResult:
    if instance.n == 0:
        return OptimalResult(None, Assignment(()), 0)
    bounds = search_bounds(instance)
    lo, hi = bounds.lo, bounds.hi
    probes = 0
    witness: Optional[Assignment] = None
    while lo < hi:
        mid = (lo + hi) // 2
        result = probe(instance, mid, memory_cap_bits)
        probes += 1
        if result.feasible:
            hi, witness = mid, result.witness
        else:
            lo = mid + 1
    if witness is None:
        # every probe failed, so hi itself was never probed
        result = probe(instance, hi, memory_cap_bits)
        probes += 1
        if not result.feasible:
            raise InvariantError(f"upper bound {hi} is not feasible")
        witness = result.witness
    assert witness is not None
    achieved = evaluate_schedule(instance, witness).lmax
    if achieved != lo:
        raise InvariantError(f"witness lateness {achieved} differs from the optimum {lo}")
    return OptimalResult(achieved, witness, probes)
