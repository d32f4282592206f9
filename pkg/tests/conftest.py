import pytest
from hypothesis import settings
from hypothesis import strategies as st

from lmaxsched import Instance

settings.register_profile("default", deadline=None)
settings.load_profile("default")

# criterion number -> (passed, summary), filled in by test_acceptance.py
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


@pytest.fixture
def acceptance():
    def record(number: int, passed: bool, summary: str) -> None:
        ACCEPTANCE[number] = (passed, summary)

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        passed, summary = ACCEPTANCE[number]
        terminalreporter.write_line(f"[{'PASS' if passed else 'FAIL'}] criterion {number}: {summary}")


@st.composite
def small_instances(draw, max_n=6, max_m=3, max_work=4, min_deadline=0, max_deadline=10, max_rate=3):
    m = draw(st.integers(1, max_m))
    rates = draw(st.lists(st.integers(1, max_rate), min_size=m, max_size=m))
    jobs = draw(
        st.lists(
            st.tuples(st.integers(0, max_work), st.integers(min_deadline, max_deadline)),
            max_size=max_n,
        )
    )
    return Instance.build(rates, jobs)


@st.composite
def two_machine_instances(draw, max_n=8, max_work=4, max_deadline=8):
    jobs = draw(
        st.lists(st.tuples(st.integers(0, max_work), st.integers(0, max_deadline)), max_size=max_n)
    )
    return Instance.build([1, 1], jobs)
