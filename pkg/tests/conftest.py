import pytest

# filled by test_acceptance.py: criterion id -> (passed, detail)
ACCEPTANCE: dict[str, list] = {}


def record(cid: str, passed: bool, detail: str) -> None:
    ACCEPTANCE.setdefault(cid, []).append((passed, detail))


@pytest.fixture
def acceptance():
    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for cid in sorted(ACCEPTANCE, key=lambda s: int(s.split()[0])):
        rows = ACCEPTANCE[cid]
        ok = all(p for p, _ in rows)
        bad = [d for p, d in rows if not p]
        tail = "; ".join(bad) if bad else rows[-1][1]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {cid}: {tail}")
