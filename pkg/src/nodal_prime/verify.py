"""Oracles and exhaustive checks against the quick test.

The oracle for scans is trial division, so a disagreement can only come
from the cubic test itself. Scans stream one JSON object per line and keep
a checkpoint that lets an interrupted run resume and produce the same
record stream.
"""

import json
import logging
import os
import tempfile
import time
from dataclasses import asdict, dataclass, field
from datetime import datetime, timezone
from multiprocessing import Pool
from pathlib import Path
from typing import Callable, List, NamedTuple, Optional

from . import _backend
from .cubic_jacobian import CurveContext
from .primality import Inconclusive, Verdict, quick_test
from .strongprp import is_spsp2

log = logging.getLogger(__name__)

DEFAULT_CHECKPOINT_INTERVAL = 10_000
MAX_COUNTEREXAMPLES = 100


def trial_division(n):
    """Smallest prime factor of ``n >= 2``, or None when ``n`` is prime."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if _backend.kernel is not None and n < _backend.WORD_LIMIT:
        p = _backend.kernel.smallest_factor(n)
        return None if p == n else p
    for p in (2, 3):
        if n % p == 0:
            return None if n == p else p
    d = 5
    while d * d <= n:
        if n % d == 0:
            return d
        if n % (d + 2) == 0:
            return d + 2
        d += 6
    return None


class GroupSummary(NamedTuple):
    order: int
    is_cyclic: bool


def enumerate_group(q, a):
    """Count the group of y^2 = x(x-a)^2 over F_q by brute force.

    The candidate set is every non-singular slope plus the identity. Each
    element's multiples are generated by repeated addition, checking that
    they stay inside the set; an element whose multiples exhaust the whole
    set proves the set is a cyclic group.
    """
    if q < 3 or q % 2 == 0 or trial_division(q) is not None:
        raise ValueError(f"q must be an odd prime, got {q}")
    if not 1 <= a < q:
        raise ValueError(f"a must lie in [1, q-1], got {a}")
    ctx = CurveContext(q, a)
    slopes = [t for t in range(q) if (t * t - a) % q]
    members = set(slopes)
    order = len(slopes) + 1
    add = ctx._add

    for g in slopes:
        k, cur = 1, g
        while cur is not None:
            if cur not in members:
                raise AssertionError(f"{cur} escaped the group (q={q}, a={a})")
            cur = add(cur, g)
            k += 1
        if k == order:
            return GroupSummary(order, True)
    return GroupSummary(order, order == 1)


@dataclass(frozen=True)
class ScanRecord:
    n: int
    verdict: Optional[Verdict]
    oracle_composite: bool
    micros: int

    @property
    def agree(self):
        if self.verdict is None:
            return False
        return self.verdict.is_composite == self.oracle_composite

    def to_dict(self):
        if self.verdict is None:
            d = {"n": self.n, "verdict": "inconclusive", "stage": None, "base_a": None, "param_t": None}
        else:
            d = self.verdict.to_dict()
        d["agree"] = self.agree
        d["micros"] = self.micros
        return d

    def to_json(self):
        return json.dumps(self.to_dict(), separators=(",", ":"))


def _now():
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


@dataclass
class Checkpoint:
    start: int
    stop: int
    next_n: int
    count: int = 0
    disagreements: int = 0
    counterexamples: List[int] = field(default_factory=list)
    out_offset: int = 0
    started_at: str = field(default_factory=_now)
    updated_at: str = field(default_factory=_now)

    def save(self, path):
        """Write atomically: temp file in the same directory, then rename."""
        path = Path(path)
        self.updated_at = _now()
        fd, tmp = tempfile.mkstemp(dir=path.parent or ".", prefix=path.name, suffix=".tmp")
        try:
            with os.fdopen(fd, "w") as fh:
                json.dump(asdict(self), fh, indent=2)
                fh.flush()
                os.fsync(fh.fileno())
            os.replace(tmp, path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise

    @classmethod
    def load(cls, path):
        with open(path) as fh:
            return cls(**json.load(fh))


class ScanSummary(NamedTuple):
    start: int
    stop: int
    count: int
    disagreements: int
    counterexamples: List[int]


def _checkpoint_interval(interval):
    if interval is not None:
        return interval
    raw = os.environ.get("NODAL_PRIME_CHECKPOINT_INTERVAL")
    if raw is None:
        return DEFAULT_CHECKPOINT_INTERVAL
    value = int(raw)
    if value <= 0:
        raise ValueError(f"NODAL_PRIME_CHECKPOINT_INTERVAL must be positive, got {raw!r}")
    return value


def scan_one(n):
    t0 = time.perf_counter_ns()
    try:
        verdict = quick_test(n)
    except Inconclusive:
        verdict = None
    micros = (time.perf_counter_ns() - t0) // 1000
    return ScanRecord(n, verdict, trial_division(n) is not None, micros)


def _scan_chunk(bounds):
    lo, hi = bounds
    return [scan_one(n) for n in range(lo, hi + 1, 2)]


def _chunks(first, stop, size):
    # odd n only; each chunk covers `size` numbers
    lo = first
    while lo <= stop:
        hi = min(lo + 2 * (size - 1), stop)
        yield lo, hi
        lo = hi + 2


def scan_range(
    start,
    stop,
    out=None,
    checkpoint=None,
    *,
    interval=None,
    jobs=1,
    on_record: Optional[Callable[[ScanRecord], None]] = None,
):
    """Compare :func:`quick_test` with trial division on every odd n in [start, stop].

    ``out`` is a path for the JSON-lines record stream. With ``checkpoint``
    set, progress is saved every ``interval`` tested numbers (default from
    ``NODAL_PRIME_CHECKPOINT_INTERVAL``) and an existing checkpoint for the
    same range is resumed, truncating ``out`` back to the saved offset.
    ``jobs > 1`` farms chunks out to worker processes; records are still
    written in order by this process.
    """
    if start < 3:
        raise ValueError(f"start must be >= 3, got {start}")
    if start > stop:
        raise ValueError(f"empty range [{start}, {stop}]")
    interval = _checkpoint_interval(interval)
    first = start | 1

    state = None
    if checkpoint is not None and os.path.exists(checkpoint):
        state = Checkpoint.load(checkpoint)
        if (state.start, state.stop) != (start, stop):
            raise ValueError(
                f"checkpoint {checkpoint} is for [{state.start}, {state.stop}], not [{start}, {stop}]"
            )
        log.info("resuming scan at n=%d", state.next_n)
    if state is None:
        state = Checkpoint(start, stop, first)

    sink = None
    if out is not None:
        sink = open(out, "r+b" if os.path.exists(out) else "wb")
        sink.truncate(state.out_offset)
        sink.seek(state.out_offset)

    def save():
        if sink is not None:
            sink.flush()
            os.fsync(sink.fileno())
            state.out_offset = sink.tell()
        if checkpoint is not None:
            state.save(checkpoint)

    chunks = _chunks(state.next_n, stop, min(interval, 4096))
    pool = Pool(jobs) if jobs > 1 else None
    try:
        batches = pool.imap(_scan_chunk, chunks) if pool else map(_scan_chunk, chunks)
        since_save = 0
        for batch in batches:
            for rec in batch:
                if sink is not None:
                    sink.write(rec.to_json().encode() + b"\n")
                if on_record is not None:
                    on_record(rec)
                state.count += 1
                if not rec.agree:
                    state.disagreements += 1
                    if len(state.counterexamples) < MAX_COUNTEREXAMPLES:
                        state.counterexamples.append(rec.n)
                    log.warning("disagreement at n=%d: %s", rec.n, rec.to_dict())
            state.next_n = batch[-1].n + 2
            since_save += len(batch)
            if since_save >= interval:
                save()
                since_save = 0
        save()
    finally:
        if pool is not None:
            pool.terminate()
        if sink is not None:
            sink.close()
    return ScanSummary(start, stop, state.count, state.disagreements, list(state.counterexamples))


def read_int_list(path):
    """Decimal integers, one per line; ``#`` starts a comment."""
    values = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            text = line.split("#", 1)[0].strip()
            if not text:
                continue
            try:
                values.append(int(text, 10))
            except ValueError:
                raise ValueError(f"{path}:{lineno}: not a decimal integer: {text!r}") from None
    return values


class SpspSummary(NamedTuple):
    total: int
    caught: int
    missed: List[int]
    inconclusive: List[int]


def check_spsp_list(path):
    """Run the quick test on every listed (known composite) number."""
    caught, missed, inconclusive = 0, [], []
    values = read_int_list(path)
    for n in values:
        try:
            verdict = quick_test(n)
        except Inconclusive:
            inconclusive.append(n)
            continue
        if verdict.is_composite:
            caught += 1
        else:
            missed.append(n)
    return SpspSummary(len(values), caught, missed, inconclusive)


def spsp2_composites(limit):
    """Odd composites below ``limit`` that pass the base-2 strong test."""
    return [n for n in range(9, limit, 2) if trial_division(n) is not None and is_spsp2(n)]
