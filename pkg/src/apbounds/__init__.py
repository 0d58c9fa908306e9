"""Explicit bounds for primes in arithmetic progressions, verified numerically.

The package re-derives every number behind a family of explicit
conditional bounds: interval widths that capture a prime in each coprime
residue class, sqrt-scale prime counts in those intervals, the rho = 100
specialization with its per-modulus thresholds, an exponential-scale variant,
a progression-count corollary, the Sturm-certified Dirichlet-series majorant
the proofs lean on, and the prime-by-prime scans that close out the finitely
many exception intervals.
"""
from __future__ import annotations

__version__ = "1.0.0"
