from math import isqrt

import pytest

_acceptance = []


def sieve(limit):
    """Primality flags for 0..limit-1."""
    flags = bytearray([1]) * limit
    flags[0:2] = b"\x00\x00"
    for p in range(2, isqrt(limit - 1) + 1):
        if flags[p]:
            flags[p * p :: p] = bytes(len(range(p * p, limit, p)))
    return flags


def primes_below(limit):
    return [i for i, f in enumerate(sieve(limit)) if f]


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _acceptance.append((marker.args[0], marker.kwargs.get("title", item.name), report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    verdicts = {}
    for number, title, outcome in _acceptance:
        prev = verdicts.get(number, (title, True))
        verdicts[number] = (prev[0], prev[1] and outcome == "passed")
    terminalreporter.section("acceptance criteria")
    for number in sorted(verdicts):
        title, ok = verdicts[number]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}")
