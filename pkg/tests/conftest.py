"""Terminal reporting for the acceptance suite.

Each acceptance criterion is one test named test_criterion_NN_<label>; this
hook prints a single PASS/FAIL line per criterion at the end of every run,
outside pytest's capture, so the acceptance verdict is always visible.
"""

import re

_PATTERN = re.compile(r"test_acceptance\.py::test_criterion_(\d+)_(\w+)")


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    verdicts = {}
    for outcome, label in (("passed", "PASS"), ("failed", "FAIL"), ("error", "FAIL")):
        for report in terminalreporter.stats.get(outcome, []):
            match = _PATTERN.search(getattr(report, "nodeid", ""))
            if match is None:
                continue
            number = int(match.group(1))
            name = match.group(2).replace("_", " ")
            if label == "FAIL" or number not in verdicts:
                verdicts[number] = (name, label)
    if not verdicts:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for number in sorted(verdicts):
        name, label = verdicts[number]
        terminalreporter.write_line(f"criterion {number:02d} ({name}): {label}")
