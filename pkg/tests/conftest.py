import pytest

# criterion number -> (passed, description); filled in by test_acceptance
ACCEPTANCE = {}


def record(number, passed, text):
    ACCEPTANCE[number] = (bool(passed), text)
    print(f"[{'PASS' if passed else 'FAIL'}] criterion {number}: {text}")


@pytest.fixture
def acceptance():
    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        passed, text = ACCEPTANCE[number]
        terminalreporter.write_line(f"[{'PASS' if passed else 'FAIL'}] criterion {number}: {text}")
