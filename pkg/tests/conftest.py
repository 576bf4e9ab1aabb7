import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from qtensor import builtin

settings.register_profile(
    "repo", max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("repo")


def relabel(G, perm):
    """Same group with element ``i`` renamed ``perm[i]``; identity stays at 0."""
    perm = np.asarray(perm)
    inv = np.argsort(perm)
    table = perm[G.table[np.ix_(inv, inv)]]
    from qtensor import FiniteGroup

    return FiniteGroup(table, label=G.label + "'")


@pytest.fixture(scope="session")
def s3():
    return builtin("S3")


@pytest.fixture(scope="session")
def d4():
    return builtin("D4")


@pytest.fixture(scope="session")
def q8():
    return builtin("Q8")


ACCEPTANCE_LINES: list[str] = []


def record_acceptance(number: int, title: str, ok: bool, detail: str) -> None:
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number:>2}: {title} -- {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split("criterion")[1].split(":")[0])):
            terminalreporter.write_line(line)
