"""Shared pytest plumbing: the acceptance summary block.

Acceptance tests register one line each through `record_acceptance`; the
lines are echoed as a terminal section at the end of the run so the
verdicts stay visible whatever else the suite prints.
"""

ACCEPTANCE_RESULTS = []


def record_acceptance(line: str):
    ACCEPTANCE_RESULTS.append(line)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(line)
