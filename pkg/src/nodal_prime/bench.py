"""Timing harness: cubic test vs a single-base Miller-Rabin baseline."""

import csv
import io
import random
import statistics
import time
from dataclasses import dataclass
from typing import List

from . import _backend
from .modarith import small_primes_below
from .primality import quick_test
from .strongprp import decompose, strong_probable_prime

__all__ = [
    "BenchRow",
    "compare_backends",
    "format_rows",
    "gen_probable_prime",
    "growth_ratios",
    "run_bench",
]

_SIEVE_PRIMES = small_primes_below(2000)[1:]
_MR_BASES = small_primes_below(200)[:40]


def gen_probable_prime(bits, seed):
    """Odd integer of exactly ``bits`` bits passing strong tests to the first 40 primes.

    Deterministic in ``(bits, seed)``; uses nothing from the cubic test.
    """
    if bits < 16:
        raise ValueError(f"bits must be >= 16, got {bits}")
    rng = random.Random(seed)
    top = 1 << (bits - 1)
    while True:
        n = rng.getrandbits(bits) | top | 1
        if any(n % p == 0 for p in _SIEVE_PRIMES):
            continue
        d = decompose(n)
        if all(strong_probable_prime(n, b, d) for b in _MR_BASES):
            return n


@dataclass(frozen=True)
class BenchRow:
    bits: int
    reps: int
    cubic_median_ms: float
    cubic_mean_ms: float
    cubic_std_ms: float
    mr_median_ms: float
    mr_mean_ms: float
    mr_std_ms: float

    @property
    def overhead(self):
        """Cubic test time relative to one Miller-Rabin round."""
        return self.cubic_median_ms / self.mr_median_ms if self.mr_median_ms else float("inf")


def _time_ms(fn, arg):
    t0 = time.perf_counter()
    result = fn(arg)
    return (time.perf_counter() - t0) * 1e3, result


def _mr_round(n):
    return strong_probable_prime(n, 2)


def run_bench(bits_list, reps, seed):
    """Time :func:`quick_test` on ``reps`` fresh probable primes per size.

    One warm-up call per size is discarded. Raises RuntimeError if any
    timed verdict is not a probable prime, since that would mean timing an
    early exit rather than the full group computation.
    """
    if reps < 1:
        raise ValueError("reps must be >= 1")
    rows = []
    for bits in bits_list:
        inputs = [gen_probable_prime(bits, seed * 1_000_003 + bits * 1009 + r) for r in range(reps)]
        quick_test(inputs[0])
        _mr_round(inputs[0])
        cubic, mr = [], []
        for n in inputs:
            ms, verdict = _time_ms(quick_test, n)
            if not verdict.is_probable_prime:
                raise RuntimeError(f"benchmark input {n} was not reported prime: {verdict}")
            cubic.append(ms)
            mr.append(_time_ms(_mr_round, n)[0])
        rows.append(
            BenchRow(
                bits,
                reps,
                statistics.median(cubic),
                statistics.fmean(cubic),
                statistics.stdev(cubic) if reps > 1 else 0.0,
                statistics.median(mr),
                statistics.fmean(mr),
                statistics.stdev(mr) if reps > 1 else 0.0,
            )
        )
    return rows


def growth_ratios(rows):
    """``(bits, 2*bits, ratio)`` of median cubic times for every doubling present."""
    by_bits = {row.bits: row for row in rows}
    out = []
    for row in rows:
        nxt = by_bits.get(2 * row.bits)
        if nxt is not None and row.cubic_median_ms > 0:
            out.append((row.bits, nxt.bits, nxt.cubic_median_ms / row.cubic_median_ms))
    return out


_COLUMNS = ["bits", "reps", "cubic_ms", "cubic_std", "mr_ms", "mr_std", "overhead"]


def _cells(row):
    return [
        str(row.bits),
        str(row.reps),
        f"{row.cubic_median_ms:.3f}",
        f"{row.cubic_std_ms:.3f}",
        f"{row.mr_median_ms:.3f}",
        f"{row.mr_std_ms:.3f}",
        f"{row.overhead:.1f}",
    ]


def format_rows(rows: List[BenchRow], fmt="text"):
    """Render rows as ``text`` (aligned), ``csv`` or ``markdown``."""
    cells = [_cells(r) for r in rows]
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(_COLUMNS)
        writer.writerows(cells)
        return buf.getvalue()
    if fmt == "markdown":
        lines = ["| " + " | ".join(_COLUMNS) + " |", "|" + "---:|" * len(_COLUMNS)]
        lines += ["| " + " | ".join(c) + " |" for c in cells]
        return "\n".join(lines) + "\n"
    if fmt != "text":
        raise ValueError(f"unknown format {fmt!r}")
    widths = [max(len(h), *(len(c[i]) for c in cells)) for i, h in enumerate(_COLUMNS)]
    lines = ["  ".join(h.rjust(w) for h, w in zip(_COLUMNS, widths))]
    lines += ["  ".join(v.rjust(w) for v, w in zip(c, widths)) for c in cells]
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class BackendComparison:
    start: int
    stop: int
    count: int
    kernel_s: float
    python_s: float

    @property
    def speedup(self):
        return self.python_s / self.kernel_s if self.kernel_s else float("inf")


def compare_backends(start, stop):
    """Time the quick test over odd n in [start, stop] on both backends.

    Both passes must return identical verdicts. Requires the compiled
    kernel.
    """
    if _backend.kernel is None:
        raise RuntimeError("compiled kernel not available; nothing to compare")
    numbers = range(start | 1, stop + 1, 2)
    t0 = time.perf_counter()
    fast = [quick_test(n) for n in numbers]
    t1 = time.perf_counter()
    slow = [quick_test(n, use_kernel=False) for n in numbers]
    t2 = time.perf_counter()
    for a, b in zip(fast, slow):
        if a != b:
            raise RuntimeError(f"backends disagree at n={a.n}: {a} vs {b}")
    return BackendComparison(start, stop, len(numbers), t1 - t0, t2 - t1)
