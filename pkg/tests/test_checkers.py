"""Tests for the interval checkers: the every-prime scan, the sqrt-thinned
jump scan, and the exception-table driver."""
from __future__ import annotations

import math

import numpy as np
import pytest

from apbounds.checkers import GUARD, CheckReport, check1, check_sqrt, run_exception_tables
from apbounds.sieve import primes_between
from apbounds.thm1 import h1, hsqrt

R1 = (0.5, 1.0, 30.0, 3, 23656, 193269)       # every-prime, q=3
R1_Q24 = (0.5, 1.0, 30.0, 24, 3167368, 3372409)
RS = (0.5, 1.0, 30.0, 3, 81589, 332263)        # sqrt-thinned, q=3
RS_Q8 = (0.5, 1.0, 30.0, 8, 1169230, 1295310)


def naive_check1(alpha, delta, rho, q, x0, x_end):
    """Per-prime reference loop, dict state, no vectorization."""
    phi = sum(1 for a in range(1, q) if math.gcd(a, q) == 1)
    M = {a: x0 + h1(alpha, delta, rho, q, float(x0))
         for a in range(1, q) if math.gcd(a, q) == 1}
    hi = math.floor(x_end + h1(alpha, delta, rho, q, float(x_end)))
    failures, count = [], 0
    for p in primes_between(x0, hi).tolist():
        a = p % q
        if a not in M:
            continue
        count += 1
        if M[a] - GUARD <= p:
            failures.append((a, M[a]))
        M[a] = p + h1(alpha, delta, rho, q, float(p))
    for a in M:
        if M[a] - GUARD < x_end:
            failures.append((a, M[a]))
    return sorted(failures), count, phi


def naive_check_sqrt(alpha, delta, rho, q, x0, x_end):
    """Countdown reference for the thinned scan: inspect every N-th class
    prime, N = isqrt(floor(deadline)) + 1."""
    M = {a: x0 + hsqrt(alpha, delta, rho, q, float(x0))
         for a in range(1, q) if math.gcd(a, q) == 1}
    N = {a: math.isqrt(math.floor(M[a])) + 1 for a in M}
    hi = math.floor(x_end + hsqrt(alpha, delta, rho, q, float(x_end)))
    failures = []
    for p in primes_between(x0, hi).tolist():
        a = p % q
        if a not in M:
            continue
        N[a] -= 1
        if N[a]:
            continue
        if M[a] - GUARD <= p:
            failures.append((a, M[a]))
        M[a] = p + hsqrt(alpha, delta, rho, q, float(p))
        N[a] = math.isqrt(math.floor(M[a])) + 1
    for a in M:
        if M[a] - GUARD < x_end:
            failures.append((a, M[a]))
    return sorted(failures)


# ---------------------------------------------------------------- check1

def test_check1_report_shape():
    rep = check1(*R1)
    assert isinstance(rep, CheckReport)
    assert (rep.q, rep.x0, rep.x_end, rep.mode) == (3, 23656, 193269, "single")
    assert rep.failures == ()
    assert rep.primes_scanned == 17470
    assert rep.wall_time >= 0.0


def test_check1_matches_naive_loop():
    want_fail, want_count, _ = naive_check1(*R1)
    rep = check1(*R1)
    assert list(rep.failures) == want_fail
    assert rep.primes_scanned == want_count


def test_check1_q24_row():
    rep = check1(*R1_Q24)
    assert rep.failures == ()
    assert rep.primes_scanned == 53206


def test_check1_deterministic():
    a = check1(*R1)
    b = check1(*R1)
    assert (a.q, a.x0, a.x_end, a.mode, a.failures, a.primes_scanned) == \
           (b.q, b.x0, b.x_end, b.mode, b.failures, b.primes_scanned)


def test_check1_split_invariance():
    def choppy(lo, hi):
        # hand the scan awkwardly sized chunks; results must not move
        P = primes_between(lo, hi)
        k = 0
        sizes = [1, 997, 3, 4096]
        i = 0
        while k < P.size:
            n = sizes[i % len(sizes)]
            yield P[k:k + n]
            k += n
            i += 1

    rep = check1(*R1, prime_source=choppy)
    ref = check1(*R1)
    assert rep.failures == ref.failures
    assert rep.primes_scanned == ref.primes_scanned


def test_check1_brute_window_coverage():
    # independent view: walking the class primes directly and carrying the
    # deadline by hand must succeed for both classes mod 3 on [23656, 1e5]
    alpha, delta, rho, q, x0, xe = 0.5, 1.0, 30.0, 3, 23656, 100000
    hi = math.floor(xe + h1(alpha, delta, rho, q, float(xe)))
    P = primes_between(x0, hi)
    for a in (1, 2):
        cp = P[P % 3 == a].tolist()
        M = x0 + h1(alpha, delta, rho, q, float(x0))
        for p in cp:
            assert M - GUARD > p, (a, p, M)
            M = p + h1(alpha, delta, rho, q, float(p))
        assert M - GUARD >= xe


def test_check1_forced_failure():
    # shrink the window to 40% of the largest class gap: the scan must trip
    P = primes_between(10**4, 10**5)
    cp = P[P % 3 == 1]
    gaps = np.diff(cp)
    i = int(np.argmax(gaps))
    gmax, at = int(gaps[i]), int(cp[i])
    assert (gmax, at) == (162, 69499)
    rho_star = 0.4 * gmax / (2 * math.sqrt(at))
    rep = check1(0.0, 0.0, rho_star, 3, 10**4, 10**5)
    assert len(rep.failures) == 548
    assert all(isinstance(a, int) and isinstance(d, float) for a, d in rep.failures)
    # failures come out sorted by (residue, deadline)
    assert list(rep.failures) == sorted(rep.failures)


def test_check1_failures_match_naive_on_forced_row():
    args = (0.0, 0.0, 0.1229, 3, 10**4, 10**5)
    want_fail, want_count, _ = naive_check1(*args)
    rep = check1(*args)
    assert rep.primes_scanned == want_count
    assert len(rep.failures) == len(want_fail)
    for (a, d), (wa, wd) in zip(rep.failures, want_fail):
        assert a == wa and d == pytest.approx(wd, rel=1e-12)


# ---------------------------------------------------------------- check_sqrt

def test_check_sqrt_report_shape():
    rep = check_sqrt(*RS)
    assert rep.mode == "sqrt"
    assert rep.failures == ()
    assert rep.primes_scanned == 25093


def test_check_sqrt_q8_row():
    rep = check_sqrt(*RS_Q8)
    assert rep.failures == ()
    assert rep.primes_scanned == 26078


def test_check_sqrt_matches_naive_countdown():
    assert list(check_sqrt(*RS).failures) == naive_check_sqrt(*RS)
    # and on a deliberately failing configuration: alpha = -1 cancels the
    # scan's built-in +1 length shift, leaving bare rho*phi*sqrt(x) windows
    # that the thinned jumps overshoot
    args = (-1.0, 0.0, 5.0, 3, 10**4, 10**5)
    want = naive_check_sqrt(*args)
    got = list(check_sqrt(*args).failures)
    assert len(got) == len(want) > 0
    for (a, d), (wa, wd) in zip(got, want):
        assert a == wa and d == pytest.approx(wd, rel=1e-12)


def test_check_sqrt_split_invariance():
    def tiny(lo, hi):
        P = primes_between(lo, hi)
        for k in range(0, P.size, 709):
            yield P[k:k + 709]

    rep = check_sqrt(*RS, prime_source=tiny)
    ref = check_sqrt(*RS)
    assert rep.failures == ref.failures
    assert rep.primes_scanned == ref.primes_scanned


def test_check_sqrt_count_override_every_prime():
    # forcing the jump to 1 inspects every class prime; that must agree with
    # a check1-style scan run with the taller interval function
    alpha, delta, rho, q, x0, xe = 0.5, 1.0, 30.0, 3, 81589, 150000
    rep = check_sqrt(alpha, delta, rho, q, x0, xe, count_override=1)
    M = {a: x0 + hsqrt(alpha, delta, rho, q, float(x0)) for a in (1, 2)}
    hi = math.floor(xe + hsqrt(alpha, delta, rho, q, float(xe)))
    want = []
    for p in primes_between(x0, hi).tolist():
        a = p % 3
        if a == 0:
            continue
        if M[a] - GUARD <= p:
            want.append((a, M[a]))
        M[a] = p + hsqrt(alpha, delta, rho, q, float(p))
    for a in (1, 2):
        if M[a] - GUARD < xe:
            want.append((a, M[a]))
    assert list(rep.failures) == sorted(want)


def test_check_sqrt_count_override_starves_scan():
    # a jump longer than the whole prime list means nothing is ever
    # inspected, so every class must be flagged by the final sweep
    rep = check_sqrt(0.5, 1.0, 30.0, 3, 81589, 332263, count_override=10**9)
    assert len(rep.failures) == 2
    assert [a for a, _ in rep.failures] == [1, 2]
    m0 = 81589 + hsqrt(0.5, 1.0, 30.0, 3, 81589.0)
    for _, d in rep.failures:
        assert d == pytest.approx(m0, rel=1e-12)


# ---------------------------------------------------------------- table driver

def test_run_exception_tables_t5_block2():
    reps = run_exception_tables("t5", block=2)
    assert [r.q for r in reps] == [3, 4, 6]
    assert all(r.mode == "single" for r in reps)
    assert all(r.failures == () for r in reps)
    assert reps[0].x0 == 156420 and reps[0].x_end == 415044


def test_run_exception_tables_t5_block3_vacuous():
    assert run_exception_tables("t5", block=3) == []


def test_run_exception_tables_t6_block2():
    reps = run_exception_tables("t6", block=2)
    assert len(reps) == 1
    rep = reps[0]
    assert rep.mode == "sqrt"
    assert (rep.q, rep.x0, rep.x_end) == (3, 682534, 752106)
    assert rep.failures == ()


def test_run_exception_tables_rejects_unknown():
    with pytest.raises(ValueError):
        run_exception_tables("t9")
    with pytest.raises(ValueError):
        run_exception_tables("t5", block=12)
