"""Shared test plumbing.

Keeps a registry of acceptance-criterion outcomes so the terminal summary can
print one PASS/FAIL line per criterion, and an audit trail of every
(price, v_B) pair sampled by the acceptance tests so the price-range check in
criterion 7 can cover all of them.
"""

from __future__ import annotations

ACCEPTANCE: dict[int, tuple[bool, str]] = {}

# (price, v_B) pairs accumulated by criteria 1-6 for the criterion-7 audit.
SAMPLED_PRICES: list[tuple[float, float]] = []


def record_criterion(num: int, passed: bool, detail: str) -> None:
    ACCEPTANCE[num] = (bool(passed), detail)


def note_price(price, v_B: float) -> None:
    if price is not None:
        SAMPLED_PRICES.append((float(price), float(v_B)))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE):
        passed, detail = ACCEPTANCE[num]
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"CRITERION {num}: {status} - {detail}")
