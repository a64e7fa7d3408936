"""Shared test plumbing: an acceptance-criterion reporter.

Acceptance tests record one line per criterion; the lines are echoed in a
terminal summary section so they are visible even when pytest captures
per-test output.
"""

ACCEPTANCE_LINES = []


def record_criterion(ok: bool, name: str, detail: str) -> bool:
    line = f"[{'PASS' if ok else 'FAIL'}] {name}: {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line, flush=True)
    return ok


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
