"""Cosine sums over the vertex angles of a regular polygon.

For angles ``theta_k = alpha - (k - 1) * 2*pi/n``, k = 1..n:

* ``sum_k cos(m * theta_k)`` is 0 unless n divides m, in which case it is
  ``n * cos(m * alpha)``.
* ``sum_k cos(theta_k)**m`` for ``m < n`` is 0 for odd m and
  ``n * C(m, m/2) / 2**m`` for even m.

Each analytic evaluator has a term-by-term ``*_direct`` counterpart.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from . import config
from .errors import DomainError, NumericOverflowError
from .polygon import TWO_PI, _check_count, _check_real


def _check_order(m):
    _check_count("m", m, 1)
    if m > config.MAX_EXACT_ORDER:
        raise NumericOverflowError(
            f"m={m} exceeds the supported exact order {config.MAX_EXACT_ORDER}"
        )


def cosine_multiple_sum(n: int, m: int, alpha: float) -> float:
    _check_count("n", n, 2)
    _check_count("m", m, 1)
    alpha = _check_real("alpha", alpha)
    if m % n:
        return 0.0
    return n * math.cos(m * alpha)


def cosine_multiple_sum_direct(n: int, m: int, alpha: float) -> float:
    _check_count("n", n, 2)
    _check_count("m", m, 1)
    alpha = _check_real("alpha", alpha)
    # m*(k-1)*2pi/n reduced modulo 2pi in integers so large m keeps full precision
    return math.fsum(
        math.cos(m * alpha - TWO_PI * ((m * (k - 1)) % n) / n) for k in range(1, n + 1)
    )


def cosine_power_sum_exact(n: int, m: int) -> Fraction:
    """Exact rational value of ``sum_k cos(theta_k)**m`` for ``1 <= m < n``."""
    _check_count("n", n, 2)
    _check_order(m)
    if m >= n:
        raise DomainError(
            f"cosine power sum is alpha-free only for m < n, got n={n}, m={m}",
            code="DOMAIN_M_GE_N",
        )
    if m % 2:
        return Fraction(0)
    return Fraction(n * comb(m, m // 2), 2**m)


def cosine_power_sum(n: int, m: int, alpha: float = 0.0) -> float:
    """Float value of :func:`cosine_power_sum_exact`; ``alpha`` is accepted
    for symmetry with the direct sum and does not affect the result."""
    _check_real("alpha", alpha)
    return float(cosine_power_sum_exact(n, m))


def cosine_power_sum_direct(n: int, m: int, alpha: float) -> float:
    _check_count("n", n, 2)
    _check_count("m", m, 1)
    alpha = _check_real("alpha", alpha)
    return math.fsum(math.cos(alpha - (k - 1) * TWO_PI / n) ** m for k in range(1, n + 1))


@dataclass(frozen=True)
class PowerReductionExpansion:
    """``cos(theta)**m`` as a constant plus a sum of harmonics.

    Coefficients are stored as integer numerators over the common
    denominator ``2**m``. ``harmonic_numerators`` pairs each frequency
    ``m - 2k`` (k = 0, 1, ...) with the numerator of its weight; frequencies
    strictly decrease by 2 and stay >= 1.
    """

    m: int
    constant_numerator: int
    harmonic_numerators: tuple

    @property
    def denominator_exponent(self):
        return self.m

    @property
    def constant_term(self) -> Fraction:
        return Fraction(self.constant_numerator, 2**self.m)

    @property
    def harmonics(self):
        """List of ``(frequency, Fraction weight)``."""
        return [(j, Fraction(num, 2**self.m)) for j, num in self.harmonic_numerators]

    def __call__(self, theta):
        scale = 2.0**-self.m
        terms = [self.constant_numerator * scale]
        terms += [num * scale * math.cos(j * theta) for j, num in self.harmonic_numerators]
        return math.fsum(terms)


def power_reduction(m: int) -> PowerReductionExpansion:
    """Power-reduction expansion of ``cos(theta)**m``.

    >>> e = power_reduction(4)
    >>> e.constant_term, e.harmonics
    (Fraction(3, 8), [(4, Fraction(1, 8)), (2, Fraction(1, 2))])
    """
    _check_order(m)
    constant = comb(m, m // 2) if m % 2 == 0 else 0
    harmonics = tuple((m - 2 * k, 2 * comb(m, k)) for k in range((m + 1) // 2))
    return PowerReductionExpansion(m, constant, harmonics)
