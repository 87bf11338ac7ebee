"""Shared pytest configuration.

Prints one summary line per acceptance check after the run, so the outcome of
each headline requirement is visible at a glance.
"""

from __future__ import annotations

ACCEPTANCE_LABELS = {
    "test_demo_table_reproduction": "demo analysis table: groups, representatives, extensions",
    "test_unfiltered_extension_menus": "unfiltered minimal extension menus before the cautious filter",
    "test_clique_suite": "clique memberships, weights, and minimum clique cover",
    "test_ordering_suite": "group ordering and per-group extension orderings",
    "test_scripted_replay": "four-step scripted resolution replay with intermediate order",
    "test_cover_soundness": "every cover x extension combination removes all conflicts",
    "test_uniform_and_diagnosis": "exhaustive uniform data sweep plus diagnosis answer set",
    "test_oracle_equivalence": "randomized equivalence against brute-force oracles",
}

_results: dict[str, str] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1].split("[")[0]
    if name not in ACCEPTANCE_LABELS:
        return
    if report.when == "call":
        outcome = "PASS" if report.passed else "FAIL"
    elif report.when == "setup" and report.skipped:
        outcome = "SKIP"
    elif report.when == "setup" and report.failed:
        outcome = "FAIL"
    else:
        return
    if _results.get(name) != "FAIL":
        _results[name] = outcome


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.write_sep("=", "acceptance summary")
    for name, label in ACCEPTANCE_LABELS.items():
        outcome = _results.get(name)
        if outcome is not None:
            terminalreporter.write_line(f"{outcome}: {label}")
