import pytest

from bluescheme.models import grassmannian_2_4, grassmannian_2_4_presentation, projective_space

# filled by test_acceptance.criterion(); printed at the end of the run
ACCEPTANCE_RESULTS = []


@pytest.fixture(scope="session")
def gr24():
    return grassmannian_2_4_presentation()


@pytest.fixture(scope="session")
def gr24_proj():
    return grassmannian_2_4()


@pytest.fixture(scope="session")
def p1_proj():
    return projective_space(1)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    # a criterion may be checked by several tests; it passes only if all do
    merged = {}
    for number, text, ok in ACCEPTANCE_RESULTS:
        prev = merged.get(number, (text, True))
        merged[number] = (prev[0], prev[1] and ok)
    for number in sorted(merged):
        text, ok = merged[number]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {number}. {text}")
