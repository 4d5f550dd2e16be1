"""Shared pytest configuration.

Hypothesis runs derandomized so a red test on one machine is red
everywhere; deadlines are off because a few property bodies rebuild
matroid views per example. The terminal-summary hook echoes the
acceptance criterion verdicts collected by tests/test_acceptance.py,
so they stay visible even though pytest captures per-test output.
"""

from hypothesis import HealthCheck, settings

settings.register_profile(
    "suite",
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
