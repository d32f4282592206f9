"""Jobs, machines, instances and schedule evaluation.

Machines are uniformly related: machine ``j`` needs ``rates[j]`` time units per
unit of work, so identical machines are the special case where every rate is 1.
Machine indices in an :class:`Assignment` are 1-based and follow input order.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Iterable, Optional, Sequence

from .errors import PreconditionError, RangeError

INT64_MIN = -(2**63)
INT64_MAX = 2**63 - 1


def _check_int(value: object, name: str) -> int:
    # bool is an int subclass; reject it so True never sneaks in as 1
    if not isinstance(value, int) or isinstance(value, bool):
        raise RangeError(f"{name} must be an integer, got {value!r}")
    if not INT64_MIN <= value <= INT64_MAX:
        raise RangeError(f"{name}={value} does not fit in a signed 64-bit integer")
    return value


@dataclass(frozen=True)
class Job:
    work: int
    deadline: int
    id: int

    def __post_init__(self) -> None:
        _check_int(self.work, "work")
        _check_int(self.deadline, "deadline")
        _check_int(self.id, "id")
        if self.work < 0:
            raise RangeError(f"job {self.id}: work must be >= 0, got {self.work}")


@dataclass(frozen=True)
class MachinePark:
    rates: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "rates", tuple(self.rates))
        if not self.rates:
            raise RangeError("at least one machine is required")
        for j, rate in enumerate(self.rates, start=1):
            _check_int(rate, f"rate of machine {j}")
            if rate < 1:
                raise RangeError(f"rate of machine {j} must be >= 1, got {rate}")

    @classmethod
    def identical(cls, m: int) -> "MachinePark":
        return cls((1,) * m)

    @property
    def m(self) -> int:
        return len(self.rates)

    @property
    def unit_rates(self) -> bool:
        return all(rate == 1 for rate in self.rates)


@dataclass(frozen=True)
class Instance:
    machines: MachinePark
    jobs: tuple[Job, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "jobs", tuple(self.jobs))
        for position, job in enumerate(self.jobs):
            if job.id != position:
                raise RangeError(f"job at position {position} carries id {job.id}")
        # every DP comparison multiplies work by a rate; keep that product in int64
        if self.total_work * max(self.machines.rates) > INT64_MAX:
            raise RangeError("total work times the largest rate overflows a signed 64-bit integer")

    @classmethod
    def build(cls, rates: Iterable[int], jobs: Iterable[tuple[int, int]]) -> "Instance":
        """Convenience constructor from plain ``(work, deadline)`` pairs."""
        return cls(
            MachinePark(tuple(rates)),
            tuple(Job(work, deadline, i) for i, (work, deadline) in enumerate(jobs)),
        )

    @property
    def n(self) -> int:
        return len(self.jobs)

    @property
    def m(self) -> int:
        return self.machines.m

    @property
    def rates(self) -> tuple[int, ...]:
        return self.machines.rates

    @property
    def total_work(self) -> int:
        return sum(job.work for job in self.jobs)

    @property
    def max_work(self) -> int:
        return max((job.work for job in self.jobs), default=0)

    def pairs(self) -> list[tuple[int, int]]:
        return [(job.work, job.deadline) for job in self.jobs]


@dataclass(frozen=True)
class Assignment:
    """Job id -> 1-based machine index. Each machine runs its jobs in EDD order."""

    machine_of: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "machine_of", tuple(self.machine_of))

    def jobs_on(self, machine: int) -> list[int]:
        return [i for i, j in enumerate(self.machine_of) if j == machine]


@dataclass(frozen=True)
class LatenessReport:
    per_machine_completion: tuple[int, ...]
    lmax: Optional[int]
    per_job_completion: tuple[int, ...]


def edd_order(instance: Instance) -> list[int]:
    """Job ids sorted by deadline, ties broken by id."""
    return sorted(range(instance.n), key=lambda i: (instance.jobs[i].deadline, i))


def shift_deadlines(instance: Instance, x: int) -> Instance:
    """Return a copy of ``instance`` with every deadline moved by ``x``."""
    _check_int(x, "shift")
    jobs = []
    for job in instance.jobs:
        deadline = job.deadline + x
        if not INT64_MIN <= deadline <= INT64_MAX:
            raise RangeError(f"job {job.id}: shifted deadline {deadline} overflows int64")
        jobs.append(replace(job, deadline=deadline))
    return Instance(instance.machines, tuple(jobs))


def validate_assignment(instance: Instance, assignment: Assignment) -> None:
    if len(assignment.machine_of) != instance.n:
        raise PreconditionError(
            f"assignment has {len(assignment.machine_of)} entries for {instance.n} jobs"
        )
    for i, j in enumerate(assignment.machine_of):
        if isinstance(j, bool) or not isinstance(j, int) or not 1 <= j <= instance.m:
            raise PreconditionError(f"job {i} assigned to invalid machine {j!r}")


def evaluate_schedule(instance: Instance, assignment: Assignment) -> LatenessReport:
    """Simulate every machine running its jobs in EDD order at its rate."""
    validate_assignment(instance, assignment)
    load = [0] * instance.m
    completion = [0] * instance.n
    for i in edd_order(instance):
        j = assignment.machine_of[i] - 1
        load[j] += instance.jobs[i].work
        completion[i] = instance.rates[j] * load[j]
    lmax = max(
        (completion[i] - job.deadline for i, job in enumerate(instance.jobs)),
        default=None,
    )
    per_machine = tuple(rate * w for rate, w in zip(instance.rates, load))
    return LatenessReport(per_machine, lmax, tuple(completion))


# SplitMix64 constants (Steele, Lea, Flood 2014; public domain reference code)
_MASK64 = (1 << 64) - 1


class SplitMix64:
    """Minimal SplitMix64 stream, bit-exact with the public-domain C version."""

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in ``[lo, hi]``; rejection sampling removes modulo bias."""
        span = hi - lo + 1
        limit = (1 << 64) - (1 << 64) % span
        while True:
            x = self.next_u64()
            if x < limit:
                return lo + x % span


def generate_random(
    n: int,
    m: int,
    max_work: int,
    max_deadline: int,
    max_rate: int,
    seed: int,
) -> Instance:
    """Reproducible random instance.

    Draws come from :class:`SplitMix64` seeded with ``seed`` (taken mod 2**64)
    in this order: the ``m`` rates, then ``work, deadline`` for each job.
    Work is uniform in ``[1, max_work]``, deadlines in ``[0, max_deadline]``
    and rates in ``[1, max_rate]``.
    """
    for name, value, low in (
        ("n", n, 0),
        ("m", m, 1),
        ("max_work", max_work, 1),
        ("max_deadline", max_deadline, 0),
        ("max_rate", max_rate, 1),
    ):
        _check_int(value, name)
        if value < low:
            raise RangeError(f"{name} must be >= {low}, got {value}")
    if not isinstance(seed, int) or isinstance(seed, bool):
        raise RangeError(f"seed must be an integer, got {seed!r}")
    rng = SplitMix64(seed)
    rates = tuple(rng.randint(1, max_rate) for _ in range(m))
    jobs = []
    for i in range(n):
        work = rng.randint(1, max_work)
        deadline = rng.randint(0, max_deadline)
        jobs.append(Job(work, deadline, i))
    return Instance(MachinePark(rates), tuple(jobs))


def permuted(instance: Instance, order: Sequence[int]) -> Instance:
    """Relabel jobs so that new job ``k`` is old job ``order[k]``."""
    jobs = tuple(
        Job(instance.jobs[old].work, instance.jobs[old].deadline, new)
        for new, old in enumerate(order)
    )
    return Instance(instance.machines, jobs)
