"""Shared pytest plumbing: echo the acceptance criterion results.

test_acceptance.py records one line per criterion; printing them from a
terminal-summary hook keeps them visible even though pytest captures
stdout of passing tests.
"""

acceptance_lines = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in acceptance_lines:
            terminalreporter.write_line(line)
