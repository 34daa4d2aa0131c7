from __future__ import annotations

import os
import subprocess
import sys
from contextlib import contextmanager

import pytest
from hypothesis import settings

settings.register_profile("default", deadline=None, max_examples=200)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

_CRITERIA = pytest.StashKey[dict]()


def pytest_configure(config):
    config.stash[_CRITERIA] = {}


@pytest.fixture
def criterion(request):
    """Record a pass/fail line for an acceptance criterion (or one of its sub-checks)."""
    results = request.config.stash[_CRITERIA]

    @contextmanager
    def check(number: int, label: str):
        try:
            yield
        except Exception:
            results.setdefault(number, []).append((label, False))
            print(f"criterion {number}: FAIL ({label})")
            raise
        results.setdefault(number, []).append((label, True))
        print(f"criterion {number}: PASS ({label})")

    return check


def pytest_terminal_summary(terminalreporter, config):
    results = config.stash.get(_CRITERIA, {})
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        subs = results[number]
        verdict = "PASS" if all(ok for _, ok in subs) else "FAIL"
        detail = "; ".join(f"{label}: {'ok' if ok else 'FAILED'}" for label, ok in subs)
        terminalreporter.write_line(f"criterion {number:2d}  {verdict}  {detail}")


@pytest.fixture
def run_cli():
    def run(*args: str, timeout: float = 300) -> subprocess.CompletedProcess:
        return subprocess.run(
            [sys.executable, "-m", "numtasks", *args],
            capture_output=True,
            timeout=timeout,
            check=False,
        )

    return run
