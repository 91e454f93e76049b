import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from canon_descent.dyck import DyckPath, enumerate_dyck

settings.register_profile("default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def dyck_paths(draw, min_n: int = 1, max_n: int = 8) -> DyckPath:
    """Uniform-ish random walk that never drops below the axis and always closes."""
    n = draw(st.integers(min_n, max_n))
    steps, ups, h = [], 0, 0
    while len(steps) < 2 * n:
        can_up, can_down = ups < n, h > 0
        if can_up and can_down:
            up = draw(st.booleans())
        else:
            up = can_up
        steps.append(1 if up else 0)
        ups += up
        h += 1 if up else -1
    return DyckPath(tuple(steps))


@st.composite
def permutations_of(draw, n: int) -> tuple[int, ...]:
    return tuple(draw(st.permutations(range(1, n + 1))))


def paths_up_to(max_n: int) -> list[DyckPath]:
    return [d for n in range(1, max_n + 1) for d in enumerate_dyck(n)]


@pytest.fixture(scope="session")
def paths7() -> list[DyckPath]:
    return paths_up_to(7)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
