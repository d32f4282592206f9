"""Line-oriented text formats for scheduling and bin-packing instances.

Scheduling instance::

    # m followed by the m rates
    2 1 1
    3          # n
    2 2        # work deadline, one job per line
    2 2
    2 4

Bin-packing instance: capacity ``b`` on the first line, then ``n``, then
``n`` item sizes, one per line. In both formats ``#`` starts a comment and
blank lines are ignored.
"""

from __future__ import annotations

import re
from typing import Iterator

from .binpack import BinPackInstance
from .errors import ParseError, SchedulingError
from .instance import Instance, Job, MachinePark

_TOKEN = re.compile(r"\S+")
_INTEGER = re.compile(r"[+-]?[0-9]+")

Token = tuple[int, int, str]  # (line, column, text)


def _lines(text: str) -> Iterator[tuple[int, list[Token]]]:
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        tokens = [(lineno, mo.start() + 1, mo.group()) for mo in _TOKEN.finditer(body)]
        if tokens:
            yield lineno, tokens


def _int(token: Token) -> int:
    line, column, text = token
    if not _INTEGER.fullmatch(text):
        raise ParseError(f"expected an integer, found {text!r}", line, column)
    return int(text)


class _Reader:
    def __init__(self, text: str):
        self._lines = _lines(text)
        self.last_line = max(1, len(text.splitlines()))

    def line(self, what: str, count: int | None = None) -> list[Token]:
        try:
            _, tokens = next(self._lines)
        except StopIteration:
            raise ParseError(f"unexpected end of input, expected {what}", self.last_line) from None
        if count is not None and len(tokens) != count:
            line, column, _ = tokens[count] if len(tokens) > count else tokens[-1]
            raise ParseError(f"expected {count} integer(s) for {what}, found {len(tokens)}", line, column)
        return tokens

    def finish(self) -> None:
        for _, tokens in self._lines:
            line, column, text = tokens[0]
            raise ParseError(f"trailing content {text!r}", line, column)


def _count(token: Token, what: str, minimum: int) -> int:
    value = _int(token)
    if value < minimum:
        raise ParseError(f"{what} must be >= {minimum}, got {value}", token[0], token[1])
    return value


def parse_instance(text: str) -> Instance:
    reader = _Reader(text)
    header = reader.line("machine count and rates")
    m = _count(header[0], "machine count", 1)
    if len(header) != m + 1:
        line, column, _ = header[-1]
        raise ParseError(f"expected {m} rate(s) after the machine count, found {len(header) - 1}", line, column)
    rates = [_count(token, "rate", 1) for token in header[1:]]
    n = _count(reader.line("job count", 1)[0], "job count", 0)
    jobs = []
    for i in range(n):
        work_tok, deadline_tok = reader.line(f"job {i} (work deadline)", 2)
        work = _count(work_tok, "work", 0)
        deadline = _int(deadline_tok)
        try:
            jobs.append(Job(work, deadline, i))
        except SchedulingError as exc:
            raise ParseError(str(exc), deadline_tok[0], deadline_tok[1]) from exc
    reader.finish()
    try:
        return Instance(MachinePark(tuple(rates)), tuple(jobs))
    except SchedulingError as exc:
        raise ParseError(str(exc), 1, 1) from exc


def format_instance(instance: Instance) -> str:
    lines = [" ".join(str(v) for v in (instance.m, *instance.rates)), str(instance.n)]
    lines.extend(f"{job.work} {job.deadline}" for job in instance.jobs)
    return "\n".join(lines) + "\n"


def parse_binpack(text: str) -> BinPackInstance:
    reader = _Reader(text)
    capacity_tok = reader.line("bin capacity", 1)[0]
    capacity = _count(capacity_tok, "bin capacity", 1)
    n = _count(reader.line("item count", 1)[0], "item count", 0)
    sizes = []
    for i in range(n):
        token = reader.line(f"size of item {i}", 1)[0]
        size = _count(token, "item size", 1)
        if size > capacity:
            raise ParseError(f"item {i} of size {size} exceeds bin capacity {capacity}", token[0], token[1])
        sizes.append(size)
    reader.finish()
    return BinPackInstance(tuple(sizes), capacity)


def format_binpack(bp: BinPackInstance) -> str:
    return "\n".join([str(bp.bin_capacity), str(len(bp.item_sizes)), *map(str, bp.item_sizes)]) + "\n"
