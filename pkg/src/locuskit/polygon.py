"""Regular polygons, probe points and vertex distances.

Vertex ``k`` (1-based) of a regular n-gon sits at angle ``(k - 1) * 2*pi/n``
measured counterclockwise from the positive x axis. Angles are radians.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError

TWO_PI = 2.0 * math.pi


def _check_count(name, value, minimum):
    if isinstance(value, bool) or not isinstance(value, int):
        raise DomainError(f"{name} must be an integer, got {value!r}", code="INVALID_INPUT")
    if value < minimum:
        raise DomainError(f"{name} must be >= {minimum}, got {value}", code="INVALID_INPUT")


def _check_real(name, value, *, positive=False, nonnegative=False):
    value = float(value)
    if not math.isfinite(value):
        raise DomainError(f"{name} must be finite, got {value!r}", code="INVALID_INPUT")
    if positive and not value > 0:
        raise DomainError(f"{name} must be > 0, got {value!r}", code="INVALID_INPUT")
    if nonnegative and value < 0:
        raise DomainError(f"{name} must be >= 0, got {value!r}", code="INVALID_INPUT")
    return value


@dataclass(frozen=True)
class PlanarPoint:
    x: float
    y: float

    def __post_init__(self):
        object.__setattr__(self, "x", _check_real("x", self.x))
        object.__setattr__(self, "y", _check_real("y", self.y))


@dataclass(frozen=True)
class RegularPolygon:
    """A regular polygon with ``n`` vertices on a circle of radius ``r``
    centered at the origin."""

    n: int
    r: float = 1.0

    def __post_init__(self):
        _check_count("n", self.n, 3)
        object.__setattr__(self, "r", _check_real("r", self.r, positive=True))

    def vertex(self, k):
        theta = vertex_angle(self, k)
        return PlanarPoint(self.r * math.cos(theta), self.r * math.sin(theta))

    def vertices(self):
        return [self.vertex(k) for k in range(1, self.n + 1)]


@dataclass(frozen=True)
class ProbePoint:
    """Query point in polar form: distance ``ell`` from the polygon center
    and angular position ``alpha``."""

    ell: float
    alpha: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "ell", _check_real("ell", self.ell, nonnegative=True))
        object.__setattr__(self, "alpha", _check_real("alpha", self.alpha))

    @classmethod
    def from_cartesian(cls, x, y):
        return cls(math.hypot(x, y), math.atan2(y, x))

    def to_cartesian(self):
        return PlanarPoint(self.ell * math.cos(self.alpha), self.ell * math.sin(self.alpha))


def vertex_angle(poly, k):
    """Angle of vertex ``k`` (1-based); vertex 1 is at angle 0."""
    if isinstance(k, bool) or not isinstance(k, int) or not 1 <= k <= poly.n:
        raise DomainError(
            f"vertex index must be in 1..{poly.n}, got {k!r}", code="INDEX_OUT_OF_RANGE"
        )
    return (k - 1) * TWO_PI / poly.n


def squared_distance(poly, k, p):
    """Squared distance from probe ``p`` to vertex ``k`` by the law of cosines.

    Rounding can push the result a hair below zero when the probe sits on a
    vertex; such values are clamped to 0.
    """
    theta = vertex_angle(poly, k)
    r, ell = poly.r, p.ell
    d2 = r * r + ell * ell - 2.0 * r * ell * math.cos(p.alpha - theta)
    return d2 if d2 > 0.0 else 0.0
