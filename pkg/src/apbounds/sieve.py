"""Segmented prime generation and small multiplicative tables.

The checkers stream primes in numpy blocks; everything here is
odd-only segmented sieving sized so a block's strike masks stay in cache.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterator

import numpy as np

__all__ = [
    "PrimeRange",
    "phi_table",
    "prime_array_segments",
    "primes_between",
    "primes_in_range",
    "spf_table",
]

SEG = 1 << 22  # odd numbers per segment
_HI_CAP = 2**63  # keep everything inside int64


@dataclass(frozen=True)
class PrimeRange:
    lo: int
    hi: int

    def __post_init__(self) -> None:
        if self.lo > self.hi:
            raise ValueError(f"empty range: lo={self.lo} > hi={self.hi}")
        if self.lo < 0 or self.hi >= _HI_CAP:
            raise ValueError(f"range must sit inside [0, 2^63): ({self.lo}, {self.hi})")


def _simple_primes(n: int) -> np.ndarray:
    """Primes <= n by a plain byte sieve (base primes for the segments)."""
    if n < 2:
        return np.empty(0, dtype=np.int64)
    mask = np.ones(n + 1, dtype=bool)
    mask[:2] = False
    for p in range(2, math.isqrt(n) + 1):
        if mask[p]:
            mask[p * p::p] = False
    return np.flatnonzero(mask).astype(np.int64)


def prime_array_segments(lo: int, hi: int) -> Iterator[np.ndarray]:
    """Yield increasing int64 arrays that together hold every prime in [lo, hi]."""
    lo = max(int(lo), 2)
    hi = int(hi)
    if hi < lo:
        return
    base = _simple_primes(math.isqrt(hi))
    if lo <= 2 <= hi:
        yield np.array([2], dtype=np.int64)
    start = lo if lo % 2 else lo + 1  # first odd >= lo
    if start > hi:
        return
    odd_base = base[base > 2]
    while start <= hi:
        end = min(start + 2 * SEG - 2, hi if hi % 2 else hi - 1)  # last odd covered
        n_odd = (end - start) // 2 + 1
        mask = np.ones(n_odd, dtype=bool)
        for p in odd_base:
            p = int(p)
            if p * p > end:
                break
            m = max(p * p, ((start + p - 1) // p) * p)  # first multiple >= start
            if m % 2 == 0:
                m += p  # align to the odd lattice
            if m > end:
                continue
            mask[(m - start) // 2::p] = False
        yield start + 2 * np.flatnonzero(mask).astype(np.int64)
        start = end + 2


def primes_between(lo: int, hi: int) -> np.ndarray:
    parts = list(prime_array_segments(lo, hi))
    if not parts:
        return np.empty(0, dtype=np.int64)
    return np.concatenate(parts)


def primes_in_range(range_spec: PrimeRange | tuple[int, int],
                    consumer: Callable[[int], object]) -> None:
    """Feed each prime in the range, in increasing order, to `consumer`."""
    if not isinstance(range_spec, PrimeRange):
        range_spec = PrimeRange(*range_spec)
    for seg in prime_array_segments(range_spec.lo, range_spec.hi):
        for p in seg:
            consumer(int(p))


def spf_table(limit: int) -> np.ndarray:
    """Smallest-prime-factor table for 0..limit, with spf[1] = 1."""
    if limit > 10**8:
        raise ValueError(f"spf table capped at 1e8 entries, asked for {limit}")
    spf = np.zeros(limit + 1, dtype=np.int64)
    if limit >= 1:
        spf[1] = 1
    for p in range(2, math.isqrt(limit) + 1):
        if spf[p] == 0:
            view = spf[p * p::p]
            view[view == 0] = p
    untouched = spf == 0
    if limit >= 2:
        untouched[:2] = False
    spf[untouched] = np.flatnonzero(untouched)
    return spf


def phi_table(n: int) -> np.ndarray:
    """Euler totients 0..n, computed by striking each prime once per multiple."""
    ph = np.arange(n + 1, dtype=np.int64)
    for p in primes_between(2, n):
        p = int(p)
        view = ph[p::p]
        view -= view // p
    return ph
