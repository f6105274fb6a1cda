"""Loci defined by constant distance power sums.

:func:`classify_power_locus` handles level sets of the regular-polygon power
sum (circle / point / empty set). :func:`classify_weighted_locus` handles the
weighted sum of squared distances to arbitrary points, which can also
degenerate to a line or the whole plane when the weights sum to zero.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Optional, Sequence

from . import config
from .errors import DomainError, NoRootError
from .polygon import PlanarPoint, _check_real
from .power_sums import PowerSumSpec, _closed_form_from_squares, closed_form_terms

ORIGIN = PlanarPoint(0.0, 0.0)


class LocusKind(str, enum.Enum):
    CIRCLE = "circle"
    POINT = "point"
    EMPTY = "empty"
    LINE = "line"
    WHOLE_PLANE = "whole_plane"


@dataclass(frozen=True)
class LocusResult:
    kind: LocusKind
    circle_radius: Optional[float] = None
    circle_center: Optional[PlanarPoint] = None
    line_coeffs: Optional[tuple] = None

    def __post_init__(self):
        kind = LocusKind(self.kind)
        object.__setattr__(self, "kind", kind)
        if (self.circle_radius is not None) != (kind is LocusKind.CIRCLE):
            raise ValueError("circle_radius is required for, and only for, a circle")
        if kind is LocusKind.CIRCLE and not self.circle_radius > 0:
            raise ValueError(f"circle radius must be positive, got {self.circle_radius}")
        if (self.circle_center is not None) != (kind in (LocusKind.CIRCLE, LocusKind.POINT)):
            raise ValueError("circle_center is required for, and only for, a circle or point")
        if (self.line_coeffs is not None) != (kind is LocusKind.LINE):
            raise ValueError("line_coeffs is required for, and only for, a line")
        if kind is LocusKind.LINE:
            a, b, _ = self.line_coeffs
            if a == 0 and b == 0:
                raise ValueError("line needs a nonzero normal (a, b)")


@dataclass(frozen=True)
class WeightedPointSet:
    points: Sequence[PlanarPoint]
    weights: Sequence[float]
    target: float

    def __post_init__(self):
        points = tuple(p if isinstance(p, PlanarPoint) else PlanarPoint(*p) for p in self.points)
        weights = tuple(_check_real("weight", w) for w in self.weights)
        if not points:
            raise DomainError("at least one point is required", code="INVALID_INPUT")
        if len(points) != len(weights):
            raise DomainError(
                f"{len(points)} points but {len(weights)} weights", code="INVALID_INPUT"
            )
        object.__setattr__(self, "points", points)
        object.__setattr__(self, "weights", weights)
        object.__setattr__(self, "target", _check_real("target", self.target))

    def weighted_sum(self, x, y):
        """Left-hand side ``sum_i w_i * |X - P_i|**2`` at ``X = (x, y)``."""
        return math.fsum(
            w * ((x - p.x) ** 2 + (y - p.y) ** 2) for p, w in zip(self.points, self.weights)
        )


@dataclass(frozen=True)
class BisectionInfo:
    iterations: int
    bracket: tuple
    converged: bool


def bisect_increasing(f, lo, hi, rel_tol=config.BISECTION_REL_TOL, max_iter=config.BISECTION_MAX_ITER):
    """Root of a strictly increasing ``f`` on ``[lo, hi]`` with
    ``f(lo) <= 0 <= f(hi)``.

    Stops when the bracket width is at most ``rel_tol * hi`` or the midpoint
    is no longer representable between the ends. Returns ``(x, info)``.
    """
    flo, fhi = f(lo), f(hi)
    if flo > 0 or fhi < 0:
        raise NoRootError(f"no sign change on [{lo!r}, {hi!r}]")
    if flo == 0:
        return lo, BisectionInfo(0, (lo, hi), True)
    if fhi == 0:
        return hi, BisectionInfo(0, (lo, hi), True)
    it = 0
    converged = False
    while it < max_iter:
        if hi - lo <= rel_tol * abs(hi):
            converged = True
            break
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            converged = True
            break
        it += 1
        fmid = f(mid)
        if fmid == 0:
            return mid, BisectionInfo(it, (mid, mid), True)
        if fmid < 0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi), BisectionInfo(it, (lo, hi), converged)


def center_sum(spec: PowerSumSpec, r: float) -> float:
    """Power sum at the polygon center, ``n * r**(2m)``."""
    return spec.n * float(r) ** (2 * spec.m)


def solve_radius(spec: PowerSumSpec, r: float, target_sum: float, *,
                 rel_tol=config.BISECTION_REL_TOL, full_output=False):
    """Radius ``ell`` of the circle on which the power sum equals
    ``target_sum``.

    Bisection runs on ``u = ell**2`` over ``[0, (target_sum/n)**(1/m)]``,
    which brackets the root because ``S/n >= (r**2 + u)**m > u**m``. With
    ``full_output=True`` returns ``(ell, BisectionInfo)``.
    """
    spec.require_circle_theorem()
    r = _check_real("r", r, positive=True)
    target_sum = _check_real("target_sum", target_sum)
    base = center_sum(spec, r)
    if not target_sum > base:
        raise NoRootError(
            f"target sum {target_sum!r} does not exceed the center value {base!r}; no circle"
        )
    coeffs = [t.coeff for t in closed_form_terms(spec.m)]
    r2 = r * r
    hi = (target_sum / spec.n) ** (1.0 / spec.m)

    def excess(u):
        return _closed_form_from_squares(spec, r2, u, coeffs) - target_sum

    # the float bound can land a rounding error below the true root
    while excess(hi) < 0:
        hi *= 1.0 + 1e-12
    u, info = bisect_increasing(excess, 0.0, hi, rel_tol=rel_tol)
    ell = math.sqrt(u)
    return (ell, info) if full_output else ell


def classify_power_locus(spec: PowerSumSpec, r: float, target_sum: float, *,
                         rel_tol=config.POINT_BAND_REL_TOL) -> LocusResult:
    """Circle, point or empty set for ``{X : S(X) = target_sum}``.

    Sums within ``rel_tol * n * r**(2m)`` of the center value count as the
    center point.
    """
    spec.require_circle_theorem()
    r = _check_real("r", r, positive=True)
    target_sum = _check_real("target_sum", target_sum)
    base = center_sum(spec, r)
    if abs(target_sum - base) <= rel_tol * base:
        return LocusResult(LocusKind.POINT, circle_center=ORIGIN)
    if target_sum < base:
        return LocusResult(LocusKind.EMPTY)
    return LocusResult(
        LocusKind.CIRCLE,
        circle_radius=solve_radius(spec, r, target_sum),
        circle_center=ORIGIN,
    )


def weighted_scale(wps: WeightedPointSet) -> float:
    return max(
        1.0,
        math.fsum(abs(w) * (p.x**2 + p.y**2) for p, w in zip(wps.points, wps.weights)),
        abs(wps.target),
    )


def classify_weighted_locus(wps: WeightedPointSet, *, rel_tol=config.WEIGHTED_REL_TOL) -> LocusResult:
    """Locus of ``sum_i w_i * |X - P_i|**2 = target``.

    With ``W = sum w_i`` nonzero the equation reads
    ``W * |X - c|**2 = target - sum_i w_i * |P_i - c|**2`` about the weighted
    centroid ``c``. With ``W = 0`` it is linear in X.
    """
    pts, ws, target = wps.points, wps.weights, wps.target
    scale = weighted_scale(wps)
    total = math.fsum(ws)
    if abs(total) > rel_tol * math.fsum(abs(w) for w in ws):
        cx = math.fsum(w * p.x for p, w in zip(pts, ws)) / total
        cy = math.fsum(w * p.y for p, w in zip(pts, ws)) / total
        spread = math.fsum(w * ((p.x - cx) ** 2 + (p.y - cy) ** 2) for p, w in zip(pts, ws))
        excess = target - spread  # = W * rho**2
        center = PlanarPoint(cx, cy)
        if abs(excess) <= rel_tol * scale:
            return LocusResult(LocusKind.POINT, circle_center=center)
        rho2 = excess / total
        if rho2 < 0:
            return LocusResult(LocusKind.EMPTY)
        return LocusResult(LocusKind.CIRCLE, circle_radius=math.sqrt(rho2), circle_center=center)

    # 2*(sum w a) x + 2*(sum w b) y + (target - sum w |P|^2) = 0
    ga = 2.0 * math.fsum(w * p.x for p, w in zip(pts, ws))
    gb = 2.0 * math.fsum(w * p.y for p, w in zip(pts, ws))
    c = target - math.fsum(w * (p.x**2 + p.y**2) for p, w in zip(pts, ws))
    grad_scale = max(1.0, 2.0 * math.fsum(abs(w) * math.hypot(p.x, p.y) for p, w in zip(pts, ws)))
    norm = math.hypot(ga, gb)
    if norm <= rel_tol * grad_scale:
        if abs(c) <= rel_tol * scale:
            return LocusResult(LocusKind.WHOLE_PLANE)
        return LocusResult(LocusKind.EMPTY)
    a, b, c = ga / norm, gb / norm, c / norm
    if a < 0 or (a == 0 and b < 0):
        a, b, c = -a, -b, -c
    return LocusResult(LocusKind.LINE, line_coeffs=(a + 0.0, b + 0.0, c + 0.0))
