"""Sums of even powers of distances from a point to the vertices of a
regular polygon.

Two independent engines are provided:

* :func:`power_sum_direct` adds up ``d_k**(2m)`` vertex by vertex. It works
  for every ``m`` and serves as the reference.
* :func:`power_sum_closed` evaluates the alpha-free closed form

      S = n * [A**m + sum_{k=1}^{m//2} C(m, 2k) * C(2k, k) * A**(m-2k) * (r*ell)**(2k)]

  with ``A = r**2 + ell**2``. It holds only for ``m <= n - 1``; above that
  the sum picks up ``cos(p*n*alpha)`` harmonics, which :func:`alpha_scan`
  measures.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from math import comb

from . import config
from .errors import DomainError, NumericOverflowError
from .polygon import TWO_PI, ProbePoint, RegularPolygon, _check_count, _check_real, squared_distance


@dataclass(frozen=True)
class PowerSumSpec:
    """Vertex count ``n`` and half-power ``m`` (the distance power is 2m)."""

    n: int
    m: int

    def __post_init__(self):
        _check_count("n", self.n, 3)
        _check_count("m", self.m, 1)

    @property
    def circle_theorem_applies(self):
        return self.m <= self.n - 1

    def require_circle_theorem(self):
        if not self.circle_theorem_applies:
            raise DomainError(
                f"closed form needs m <= n - 1, got n={self.n}, m={self.m}; "
                "the sum depends on alpha here",
                code="DOMAIN_M_GE_N",
            )


@dataclass(frozen=True)
class ClosedFormTerm:
    k: int
    coeff: int


@dataclass(frozen=True)
class AlphaScanReport:
    n: int
    m: int
    r: float
    ell: float
    samples: int
    s_min: float
    s_max: float
    amplitude: float
    relative_amplitude: float
    # (alpha, sum) pairs over the grid, in grid order
    grid: tuple = field(default=(), repr=False, compare=False)


def closed_form_terms(m):
    """Exact integer coefficients ``C(m, 2k) * C(2k, k)`` for k = 1..m//2.

    >>> [t.coeff for t in closed_form_terms(4)]
    [12, 6]
    """
    _check_count("m", m, 1)
    if m > config.MAX_EXACT_ORDER:
        raise NumericOverflowError(
            f"m={m} exceeds the supported exact order {config.MAX_EXACT_ORDER}"
        )
    return [ClosedFormTerm(k, comb(m, 2 * k) * comb(2 * k, k)) for k in range(1, m // 2 + 1)]


def power_sum_direct(poly: RegularPolygon, p: ProbePoint, m: int) -> float:
    """Sum of ``d_k**(2m)`` over all vertices, for any ``m >= 1``."""
    _check_count("m", m, 1)
    try:
        total = math.fsum(squared_distance(poly, k, p) ** m for k in range(1, poly.n + 1))
    except OverflowError:
        total = math.inf
    if not math.isfinite(total):
        raise NumericOverflowError(f"power sum overflows for m={m}")
    return total


def _closed_form_from_squares(spec, r2, u, coeffs):
    # u = ell**2; A = r2 + u, (r*ell)**2 = r2*u
    a = r2 + u
    n, m = spec.n, spec.m
    try:
        if a > 0.0:
            t = (r2 / a) * (u / a)  # (r*ell / A)**2, at most 1/4
            acc = 0.0
            for c in reversed(coeffs):
                acc = acc * t + float(c)
            acc = acc * t + 1.0
            value = n * a**m * acc
        else:
            p2 = r2 * u
            value = n * math.fsum(
                [a**m] + [float(c) * a ** (m - 2 * k) * p2**k for k, c in enumerate(coeffs, 1)]
            )
    except OverflowError:
        value = math.inf
    if not math.isfinite(value):
        raise NumericOverflowError(f"closed form overflows for n={n}, m={m}")
    return value


def power_sum_closed(spec: PowerSumSpec, r: float, ell: float) -> float:
    """Evaluate the alpha-free closed form of the power sum.

    Raises DomainError (code ``DOMAIN_M_GE_N``) when ``m >= n``: the sum is
    not alpha-independent there, use :func:`power_sum_direct` instead.
    """
    spec.require_circle_theorem()
    r = _check_real("r", r, positive=True)
    ell = _check_real("ell", ell, nonnegative=True)
    coeffs = [t.coeff for t in closed_form_terms(spec.m)]
    return _closed_form_from_squares(spec, r * r, ell * ell, coeffs)


def alpha_scan(poly: RegularPolygon, ell: float, m: int, samples: int = 256) -> AlphaScanReport:
    """Evaluate the direct power sum on an even alpha grid over one symmetry
    period ``[0, 2*pi/n)`` and report its spread.

    For ``m <= n - 1`` the relative amplitude is rounding noise; for ``m`` a
    multiple of ``n`` it is of order one.
    """
    _check_count("samples", samples, 8)
    ell = _check_real("ell", ell, positive=True)
    period = TWO_PI / poly.n
    grid = []
    for j in range(samples):
        alpha = j * period / samples
        grid.append((alpha, power_sum_direct(poly, ProbePoint(ell, alpha), m)))
    sums = [s for _, s in grid]
    s_min, s_max = min(sums), max(sums)
    amplitude = s_max - s_min
    return AlphaScanReport(
        n=poly.n,
        m=m,
        r=poly.r,
        ell=ell,
        samples=samples,
        s_min=s_min,
        s_max=s_max,
        amplitude=amplitude,
        relative_amplitude=amplitude / s_min if s_min > 0 else math.inf,
        grid=tuple(grid),
    )
