"""Shared pytest wiring.

The acceptance module records one verdict line per criterion here; the
terminal-summary hook prints them after the run so they are visible without
-s and survive output capture.
"""

acceptance_lines = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    for line in acceptance_lines:
        terminalreporter.write_line(line)
