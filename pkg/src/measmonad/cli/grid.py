"""Uniform grid measures on plane regions.

The uniform distribution on a region is approximated by equal point masses at
the centres of a ``k x k`` grid laid over the region's bounding box, keeping
the centres that fall inside the (closed) region.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from ..signed_measure import SignedMeasure
from ..spaces import RationalVector, to_fraction


class EmptyRegion(ValueError):
    """No grid centre lies inside the region."""


@dataclass(frozen=True)
class Box:
    lo: tuple
    hi: tuple

    def bounding_box(self):
        return self.lo, self.hi

    def coordinates(self):
        return self.lo + self.hi

    def scaled_test(self, s):
        # the region is its own bounding box
        return lambda x, y: True


@dataclass(frozen=True)
class Triangle:
    a: tuple
    b: tuple
    c: tuple

    def bounding_box(self):
        xs = [self.a[0], self.b[0], self.c[0]]
        ys = [self.a[1], self.b[1], self.c[1]]
        return (min(xs), min(ys)), (max(xs), max(ys))

    def coordinates(self):
        return self.a + self.b + self.c

    def scaled_test(self, s):
        """Closed-triangle membership of ``(x, y) / s`` for integers ``x, y``.

        ``s`` must clear every vertex denominator.
        """
        (ax, ay), (bx, by), (cx, cy) = [(int(v[0] * s), int(v[1] * s)) for v in (self.a, self.b, self.c)]

        def test(x, y):
            d1 = (bx - ax) * (y - ay) - (by - ay) * (x - ax)
            d2 = (cx - bx) * (y - by) - (cy - by) * (x - bx)
            d3 = (ax - cx) * (y - cy) - (ay - cy) * (x - cx)
            return not ((d1 < 0 or d2 < 0 or d3 < 0) and (d1 > 0 or d2 > 0 or d3 > 0))

        return test


def _vec(v) -> tuple:
    return tuple(to_fraction(c) for c in v)


def unit_square() -> Box:
    return Box((Fraction(0), Fraction(0)), (Fraction(1), Fraction(1)))


def box(lo, hi) -> Box:
    lo, hi = _vec(lo), _vec(hi)
    if not (lo[0] < hi[0] and lo[1] < hi[1]):
        raise EmptyRegion(f"degenerate box {lo} .. {hi}")
    return Box(lo, hi)


def triangle(a, b, c) -> Triangle:
    return Triangle(_vec(a), _vec(b), _vec(c))


def grid_uniform(region, resolution: int) -> SignedMeasure:
    """Uniform probability measure on the grid centres inside ``region``.

    ``region`` is a :class:`Box`, a :class:`Triangle`, or the string ``"unit-square"``.
    """
    if resolution < 1:
        raise ValueError("resolution must be at least 1")
    if region == "unit-square":
        region = unit_square()
    k = resolution
    (x0, y0), (x1, y1) = region.bounding_box()
    if x0 == x1 or y0 == y1:
        raise EmptyRegion("region has an empty interior")
    # centre (i, j) sits at x0 + (2i + 1)(x1 - x0) / 2k; work in integers over a common denominator
    s = 2 * k * lcm(*(q.denominator for q in region.coordinates()))
    X0, Y0 = int(x0 * s), int(y0 * s)
    dx, dy = int((x1 - x0) * s) // (2 * k), int((y1 - y0) * s) // (2 * k)
    inside_region = region.scaled_test(s)
    inside = []
    for i in range(k):
        X = X0 + (2 * i + 1) * dx
        for j in range(k):
            Y = Y0 + (2 * j + 1) * dy
            if inside_region(X, Y):
                inside.append((X, Y))
    if not inside:
        raise EmptyRegion(f"no grid centre at resolution {k} lies inside {region}")
    w = Fraction(1, len(inside))
    # generated in increasing (x, y) order, which is the canonical point order
    atoms = tuple(((Fraction(X, s), Fraction(Y, s)), w) for X, Y in inside)
    return SignedMeasure(RationalVector(2), atoms)
