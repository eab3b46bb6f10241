"""Shared test plumbing.

The acceptance tests record one line per criterion; the terminal summary
hook replays them so the pass/fail lines are visible in the normal pytest
output, not only under -s.
"""

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
