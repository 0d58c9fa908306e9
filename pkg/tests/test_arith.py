"""Unit tests for the arithmetic/special-function primitives.

Expected values here come from independent routes: mpmath at 40+ digits,
exact identities (Si(2y) - sin^2(y)/y for the oscillatory integral), and
brute-force counting for the multiplicative functions.
"""
from __future__ import annotations

import math

import mpmath as mp
import numpy as np
import pytest

from apbounds.arith import (
    FactorData,
    Theta,
    digamma,
    factorize,
    omega_of,
    phi_of,
    sin2_integral,
    theta_of,
    zeta_log_deriv,
)

EULER_GAMMA = 0.5772156649015329


# ---------------------------------------------------------------- factorize

def test_factorize_one():
    fd = factorize(1)
    assert fd.phi == 1 and fd.omega == 0 and fd.prime_log_sum == 0.0
    assert fd.factors == ()


def test_factorize_twelve():
    fd = factorize(12)
    assert fd.phi == 4 and fd.omega == 2
    assert fd.factors == ((2, 2), (3, 1))
    assert abs(fd.prime_log_sum - (math.log(2) + math.log(3) / 2)) < 1e-15


def test_factorize_thirtyfive():
    fd = factorize(35)
    assert fd.phi == 24 and fd.omega == 2
    assert fd.factors == ((5, 1), (7, 1))


def test_factorize_rejects_zero():
    with pytest.raises(ValueError):
        factorize(0)
    with pytest.raises(ValueError):
        factorize(-5)


def brute_phi(q: int) -> int:
    return sum(1 for k in range(1, q + 1) if math.gcd(k, q) == 1)


def test_phi_matches_brute_force_small():
    for q in range(1, 2000):
        assert factorize(q).phi == brute_phi(q), q


def test_phi_matches_brute_force_sampled():
    rng = np.random.default_rng(20260816)
    for q in rng.integers(2000, 10**6, size=120):
        q = int(q)
        assert factorize(q).phi == brute_phi(q), q


def test_phi_lower_bound_sqrt():
    # phi(q) >= sqrt(q) with exactly two exceptions, q = 2 and q = 6
    assert phi_of(2) == 1 and phi_of(6) == 2
    for q in range(3, 10_000):
        if q != 6:
            assert phi_of(q) ** 2 >= q, q
        assert phi_of(q) <= q


def test_factor_data_invariants():
    for q in (1, 2, 3, 4, 30, 1024, 510510, 999983):
        fd = factorize(q)
        assert fd.omega == len(fd.factors)
        prod = 1
        for p, e in fd.factors:
            prod *= p**e
        assert prod == q or (q == 1 and prod == 1)
        # log_disc = phi log q - phi * prime_log_sum, nonnegative for q >= 3
        assert abs(fd.log_disc - (fd.phi * math.log(q) - fd.phi * fd.prime_log_sum)) < 1e-9 * max(1.0, abs(fd.log_disc))
        if q >= 3:
            assert fd.log_disc >= 0.0
        assert (fd.prime_log_sum == 0.0) == (q == 1)


def test_factorize_deterministic():
    a, b = factorize(123456), factorize(123456)
    assert a == b and isinstance(a, FactorData)


def test_omega_of():
    assert omega_of(1) == 0
    assert omega_of(2) == 1
    assert omega_of(60) == 3
    assert omega_of(97) == 1


# ---------------------------------------------------------------- digamma

def test_digamma_anchors():
    assert abs(digamma(1.0) + EULER_GAMMA) < 1e-12
    assert abs(digamma(2.0) - (1.0 - EULER_GAMMA)) < 1e-12
    # psi(1/2) = -gamma - 2 log 2
    assert abs(digamma(0.5) - (-1.9635100260214235)) < 1e-12


def test_digamma_recurrence_grid():
    s = 0.5
    while s <= 50.0:
        assert abs(digamma(s + 1.0) - digamma(s) - 1.0 / s) < 1e-11, s
        s += 0.5


def test_digamma_vs_mpmath():
    with mp.workdps(30):
        for x in (0.51, 0.875, 1.375, 2.625, 4.125, 7.999, 8.0, 25.0, 1000.0):
            ref = float(mp.digamma(x))
            assert abs(digamma(x) - ref) < 1e-12 * max(1.0, abs(ref)), x


def test_digamma_rejects_nonpositive():
    with pytest.raises(ValueError):
        digamma(0.0)
    with pytest.raises(ValueError):
        digamma(-1.5)


# ---------------------------------------------------------------- zeta'/zeta

def test_zeta_log_deriv_anchor_two():
    # independent value: mpmath zeta'(2)/zeta(2)
    assert abs(zeta_log_deriv(2.0) - (-0.56996099309453281)) < 1e-12


def test_zeta_log_deriv_small_tail():
    v = zeta_log_deriv(12.25)
    assert abs(v - (-0.00014390549527352336)) < 1e-14
    # geometric tail domination for s >= 4
    for s in (4.0, 6.0, 9.5, 20.0, 30.0):
        assert abs(zeta_log_deriv(s)) <= 2 * math.log(2) * 2.0**-s, s


def test_zeta_log_deriv_vs_mpmath_grid():
    with mp.workdps(30):
        for j in range(1, 24):
            s = 0.75 + 0.5 * j
            ref = float(mp.zeta(s, 1, 1) / mp.zeta(s))
            assert abs(zeta_log_deriv(s) - ref) < 1e-12 * abs(ref), s


def test_zeta_log_deriv_vs_dirichlet_series():
    # -zeta'/zeta(s) = sum Lambda(n) n^{-s}; truncation tail bounded by
    # N^{1-s} (log N/(s-1) + 1/(s-1)^2).
    nmax = 100_000
    lam = np.zeros(nmax + 1)
    sieve = np.ones(nmax + 1, dtype=bool)
    sieve[:2] = False
    for p in range(2, int(nmax**0.5) + 1):
        if sieve[p]:
            sieve[p * p :: p] = False
    for p in np.flatnonzero(sieve):
        p = int(p)
        pk = p
        while pk <= nmax:
            lam[pk] = math.log(p)
            pk *= p
    n = np.arange(2, nmax + 1, dtype=float)
    for s in (1.5, 2.0, 3.0, 4.25, 12.25):
        series = -float(np.sum(lam[2:] * n**-s))
        tail = nmax ** (1 - s) * (math.log(nmax) / (s - 1) + 1 / (s - 1) ** 2)
        assert abs(zeta_log_deriv(s) - series) < tail + 1e-12, s


def test_zeta_log_deriv_rejects_pole():
    with pytest.raises(ValueError):
        zeta_log_deriv(1.0)
    with pytest.raises(ValueError):
        zeta_log_deriv(0.5)


# ------------------------------------------------------- oscillatory integral

def _I_ref(y: float) -> float:
    # exact identity: int_0^y sin^2 t / t^2 dt = Si(2y) - sin^2(y)/y
    with mp.workdps(50):
        ym = mp.mpf(y)
        return float(mp.si(2 * ym) - mp.sin(ym) ** 2 / ym)


def test_sin2_integral_anchor_one():
    assert abs(sin2_integral(1.0) - 0.89733955852912366) < 1e-10


def test_sin2_integral_small_y_limit():
    y = 1e-3
    # integrand -> 1, so the integral -> y (next order: -y^3/9)
    assert abs(sin2_integral(y) - y) < 2e-10


def test_sin2_integral_large_y():
    v = sin2_integral(1e6)
    assert abs(v - (math.pi / 2 - 5e-7)) < 2.5e-13 + 1e-12


def test_sin2_integral_vs_identity_grid():
    for y in (0.01, 0.5, 1.0, 7.7, 50.0, 99.0, 100.0, 101.0, 314.15, 1e4, 1e5):
        assert abs(sin2_integral(y) - _I_ref(y)) < 1e-10, y


def test_sin2_integral_rejects_nonpositive():
    with pytest.raises(ValueError):
        sin2_integral(0.0)
    with pytest.raises(ValueError):
        sin2_integral(-1.0)


# ---------------------------------------------------------------- theta_of

THETA_REF = {
    0.01: 0.019375681424838,
    1.0: -0.693827073063092,
    5.0: 0.364411451633218,
    100.0: 0.878036784329747,
    357.3587: 0.999989586448656,
    1e4: -0.581903433297903,
    1e6: 0.655715070571583,
}


def test_theta_against_reference():
    for y, ref in THETA_REF.items():
        th = theta_of(y)
        assert isinstance(th, Theta) and th.y == y
        tol = 1e-8 if y < 100 else max(5e-6 * (100.0 / y) ** 3, 1e-12)
        assert abs(th.theta - ref) < tol, (y, th.theta, ref)


def test_theta_definition_consistency():
    for y in (0.5, 3.0, 40.0, 250.0):
        th = theta_of(y)
        direct = 4 * y * y * (sin2_integral(y) - math.pi / 2 + 1 / (2 * y))
        assert abs(th.theta - direct) < 1e-9


def test_theta_bounded_on_log_grid():
    ys = np.logspace(-2, 6, 500)
    worst = max(abs(theta_of(float(y)).theta) for y in ys)
    assert worst <= 1 + 1e-6
    # the grid does approach the extreme (near y ~ 357 the bound is nearly met)
    assert worst > 0.9999
