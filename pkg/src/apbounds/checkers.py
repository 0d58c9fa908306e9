"""Finite-range interval checkers.

A parameter choice (alpha, delta, rho) claims that for x in a stated range,
every window (x, x + h(x)] contains a prime in each coprime class mod q.
The checkers replay that claim against the actual primes:

* check1 walks every class prime and carries the current deadline
  x + h1(x); a prime at or past its class deadline, or a deadline that dies
  before the end of the range, is a failure.

* check_sqrt does the same for the taller hsqrt windows but only inspects
  every N-th class prime, N = isqrt(floor(deadline)) + 1: the thinned scan
  proves the (slightly weaker) claim at sqrt-count density in a fraction of
  the work.

Primes stream in segments from the sieve; results are invariant under how
the stream is chunked, which the tests exercise with deliberately awkward
chunk sizes.
"""
from __future__ import annotations

import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .sieve import prime_array_segments
from .tables import ExceptionBlock, load_table5, load_table6
from .thm1 import h1, hsqrt

__all__ = ["GUARD", "CheckReport", "check1", "check_sqrt",
           "run_exception_tables"]

# absorbs float rounding in deadline comparisons: a window is only counted
# as covering a prime when it clears it by more than this
GUARD = 1e-6


@dataclass(frozen=True)
class CheckReport:
    """Outcome of one checker run: empty `failures` means the claim held."""

    q: int
    x0: int
    x_end: int
    mode: str  # "single" or "sqrt"
    failures: tuple[tuple[int, float], ...]  # (residue, missed deadline)
    primes_scanned: int
    wall_time: float


def _coprime_classes(q: int) -> list[int]:
    return [a for a in range(1, q) if math.gcd(a, q) == 1]


def check1(alpha: float, delta: float, rho: float, q: int,
           x0: int, x_end: int, *, prime_source=None) -> CheckReport:
    """Every-prime scan of [x0, x_end] with window length h1."""
    t_start = time.perf_counter()
    source = prime_source if prime_source is not None else prime_array_segments
    hi = math.floor(x_end + h1(alpha, delta, rho, q, float(x_end)))
    classes = _coprime_classes(q)
    init = float(x0 + h1(alpha, delta, rho, q, float(x0)))
    carry = dict.fromkeys(classes, init)
    failures: list[tuple[int, float]] = []
    scanned = 0
    for seg in source(x0, hi):
        seg = np.asarray(seg)
        if seg.size == 0:
            continue
        res = seg % q
        for a in classes:
            cp = seg[res == a].astype(np.float64)
            if cp.size == 0:
                continue
            scanned += cp.size
            dl = np.empty_like(cp)
            dl[0] = carry[a]
            if cp.size > 1:
                dl[1:] = cp[:-1] + h1(alpha, delta, rho, q, cp[:-1])
            for i in np.flatnonzero(dl - GUARD <= cp):
                failures.append((a, float(dl[i])))
            carry[a] = float(cp[-1] + h1(alpha, delta, rho, q, cp[-1]))
    for a in classes:
        if carry[a] - GUARD < x_end:
            failures.append((a, carry[a]))
    failures.sort()
    return CheckReport(q=q, x0=x0, x_end=x_end, mode="single",
                       failures=tuple(failures), primes_scanned=scanned,
                       wall_time=time.perf_counter() - t_start)


def check_sqrt(alpha: float, delta: float, rho: float, q: int,
               x0: int, x_end: int, *, prime_source=None,
               count_override: int | None = None) -> CheckReport:
    """Thinned scan of [x0, x_end] with window length hsqrt.

    Between inspections, isqrt(floor(deadline)) class primes pass unexamined
    — enough headroom that the thinned claim survives any placement of the
    skipped primes.  `count_override` replaces the computed jump with a
    fixed one (1 inspects everything; huge values starve the scan, leaving
    the final-sweep check to fire).
    """
    t_start = time.perf_counter()
    source = prime_source if prime_source is not None else prime_array_segments
    hi = math.floor(x_end + hsqrt(alpha, delta, rho, q, float(x_end)))
    classes = _coprime_classes(q)

    def jump(deadline: float) -> int:
        if count_override is not None:
            return count_override
        return math.isqrt(math.floor(deadline)) + 1

    init = float(x0 + hsqrt(alpha, delta, rho, q, float(x0)))
    deadline = dict.fromkeys(classes, init)
    # 1-based countdown to the next inspected class prime
    todo = dict.fromkeys(classes, jump(init))
    failures: list[tuple[int, float]] = []
    scanned = 0
    for seg in source(x0, hi):
        seg = np.asarray(seg)
        if seg.size == 0:
            continue
        res = seg % q
        for a in classes:
            cp = seg[res == a]
            n = int(cp.size)
            if n == 0:
                continue
            scanned += n
            idx = todo[a] - 1  # 0-based position of the next inspection
            while idx < n:
                p = float(cp[idx])
                if deadline[a] - GUARD <= p:
                    failures.append((a, deadline[a]))
                deadline[a] = float(p + hsqrt(alpha, delta, rho, q, p))
                idx += jump(deadline[a])
            todo[a] = idx - n + 1
    for a in classes:
        if deadline[a] - GUARD < x_end:
            failures.append((a, deadline[a]))
    failures.sort()
    return CheckReport(q=q, x0=x0, x_end=x_end, mode="sqrt",
                       failures=tuple(failures), primes_scanned=scanned,
                       wall_time=time.perf_counter() - t_start)


# ---------------------------------------------------------------------------
# exception-table driver
# ---------------------------------------------------------------------------

def _run_row(job: tuple[str, tuple]) -> CheckReport:
    mode, args = job
    return check1(*args) if mode == "single" else check_sqrt(*args)


def run_exception_tables(table: str, block: int | None = None,
                         jobs: int = 1) -> list[CheckReport]:
    """Run every row of one exception table (or one of its blocks).

    t5 rows take the every-prime scan, t6 rows the thinned one.  Reports
    come back in table order regardless of `jobs`.
    """
    name = table.lower()
    if name == "t5":
        blocks, mode = load_table5(), "single"
    elif name == "t6":
        blocks, mode = load_table6(), "sqrt"
    else:
        raise ValueError(f"unknown exception table {table!r} (want t5 or t6)")
    if block is not None:
        if not 1 <= block <= len(blocks):
            raise ValueError(
                f"{name} has blocks 1..{len(blocks)}, got {block}")
        picked: tuple[ExceptionBlock, ...] = (blocks[block - 1],)
    else:
        picked = blocks
    work = [(mode, (b.alpha, b.delta, b.rho, q, lo, hi))
            for b in picked for (q, lo, hi) in b.rows]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_run_row, work))
    return [_run_row(j) for j in work]
