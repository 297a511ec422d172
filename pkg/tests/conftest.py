"""Shared test plumbing: the acceptance summary table."""

ACCEPTANCE_RESULTS = {}


def record_acceptance(key: str, ok: bool, detail: str = "") -> None:
    ACCEPTANCE_RESULTS[key] = (ok, detail)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_RESULTS):
        ok, detail = ACCEPTANCE_RESULTS[key]
        word = "PASS" if ok else "FAIL"
        suffix = f"  ({detail})" if detail else ""
        terminalreporter.write_line(f"{key}: {word}{suffix}")
