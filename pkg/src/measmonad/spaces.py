"""Measurable bornological sets with representable carriers.

A :class:`Space` describes a carrier (its points, their canonical order) and a
basis for its bornology.  Sigma-algebras are always discrete: every measure in
this package is finitely supported, so integrands are only ever evaluated at
atoms and measurability is vacuous.

Points are plain Python values:

* ``FiniteLabeled`` -- ``str`` labels
* ``IntegerLine`` -- ``int``
* ``RationalLine`` -- ``Fraction``
* ``RationalVector(n)`` -- ``tuple`` of ``n`` Fractions
* ``ProductSpace`` -- ``tuple`` with one entry per factor
* ``MeasureSpace(X)`` -- a :class:`~measmonad.signed_measure.SignedMeasure` on ``X``
* ``Subspace(X, A)`` -- points of ``X`` lying in the bounded set ``A``
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational
from typing import Any, Callable, Iterable, Sequence

from .errors import BornologyViolation, KindMismatch

Point = Any

#: numerators and denominators of generated rationals stay within this range
WEIGHT_NUM = 8
WEIGHT_DEN = 8
#: default sampling window for unbounded numeric carriers
WINDOW = 8


def to_fraction(value) -> Fraction:
    """Coerce an exact number (or ``"p/q"`` string) to a Fraction.

    Floats are rejected: every quantity in the core is exact.
    """
    if isinstance(value, bool):
        raise KindMismatch(f"boolean {value!r} is not a rational number")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise KindMismatch(f"malformed rational {value!r}") from exc
    raise KindMismatch(f"{value!r} ({type(value).__name__}) is not an exact rational")


def random_rational(rng: random.Random, num: int = WEIGHT_NUM, den: int = WEIGHT_DEN) -> Fraction:
    return Fraction(rng.randint(-num, num), rng.randint(1, den))


def random_rational_in(rng: random.Random, lo: Fraction, hi: Fraction) -> Fraction:
    """Uniform choice among the rationals ``lo + (hi - lo) * k / 8``."""
    if lo == hi:
        return Fraction(lo)
    k = rng.randint(0, WEIGHT_DEN)
    return lo + (hi - lo) * Fraction(k, WEIGHT_DEN)


# ---------------------------------------------------------------------------
# spaces


class Space:
    """Base class for measurable bornological sets."""

    kind: str = "abstract"

    def contains(self, p: Point) -> bool:
        raise NotImplementedError

    def coerce(self, p: Point) -> Point:
        """Normalise ``p`` to this space's point representation or raise KindMismatch."""
        if not self.contains(p):
            raise KindMismatch(f"{p!r} is not a point of {self}")
        return p

    def key(self, p: Point):
        """Sort key realising the canonical total order on points."""
        raise NotImplementedError

    def basis(self, n: int) -> "BoundedSet":
        """The ``n``-th member (``n >= 1``) of an increasing basis for the bornology."""
        raise NotImplementedError

    def sample_basis(self) -> list["BoundedSet"]:
        """A few basis sets, smallest first, used by spot checks."""
        return [self.basis(n) for n in (1, 2, 4, 8)]

    def join(self, a: "BoundedSet", b: "BoundedSet") -> "BoundedSet":
        """A basis set containing both ``a`` and ``b``."""
        raise NotImplementedError

    def cover(self, points: Iterable[Point]) -> "BoundedSet":
        """A basis set containing every point of a finite collection."""
        raise NotImplementedError

    def random_point(self, rng: random.Random) -> Point:
        raise NotImplementedError

    def sorted(self, points: Iterable[Point]) -> list[Point]:
        return sorted(points, key=self.key)

    def finite(self, points: Iterable[Point]) -> "FiniteSet":
        return FiniteSet(self, frozenset(self.coerce(p) for p in points))


@dataclass(frozen=True)
class FiniteLabeled(Space):
    """A finite set of string labels; every subset is bounded."""

    labels: frozenset
    kind = "finite"

    def __post_init__(self):
        if not self.labels:
            raise ValueError("a labeled space needs at least one label")
        if not all(isinstance(x, str) for x in self.labels):
            raise KindMismatch("labels must be strings")

    def contains(self, p):
        return isinstance(p, str) and p in self.labels

    def key(self, p):
        return p

    def basis(self, n):
        return WholeSet(self)

    def sample_basis(self):
        return [WholeSet(self)]

    def join(self, a, b):
        return WholeSet(self)

    def cover(self, points):
        return WholeSet(self)

    def random_point(self, rng):
        return rng.choice(sorted(self.labels))

    def __repr__(self):
        return "FiniteLabeled{" + ",".join(sorted(self.labels)) + "}"


class _NumericLine(Space):
    """Shared behaviour of the integer and rational lines (basis ``[-n, n]``)."""

    def key(self, p):
        return p

    def basis(self, n):
        return Interval(self, -n, n)

    def join(self, a, b):
        return self.basis(max(_line_radius(a), _line_radius(b), 1))

    def cover(self, points):
        pts = list(points)
        r = max((abs(p) for p in pts), default=0)
        return self.basis(max(_ceil(r), 1))


@dataclass(frozen=True)
class IntegerLine(_NumericLine):
    kind = "integers"

    def contains(self, p):
        return isinstance(p, int) and not isinstance(p, bool)

    def coerce(self, p):
        if isinstance(p, Fraction) and p.denominator == 1:
            return int(p)
        return super().coerce(p)

    def random_point(self, rng):
        return rng.randint(-WINDOW, WINDOW)

    def __repr__(self):
        return "IntegerLine"


@dataclass(frozen=True)
class RationalLine(_NumericLine):
    """The real line, represented by its rational points."""

    kind = "rationals"

    def contains(self, p):
        return isinstance(p, Fraction)

    def coerce(self, p):
        return to_fraction(p)

    def random_point(self, rng):
        return random_rational(rng)

    def __repr__(self):
        return "RationalLine"


@dataclass(frozen=True)
class RationalVector(Space):
    """Rational points of R^n with the bornology of sup-norm boxes."""

    dimension: int
    kind = "vector"

    def __post_init__(self):
        if not isinstance(self.dimension, int) or self.dimension < 1:
            raise ValueError(f"dimension must be a positive integer, got {self.dimension!r}")

    def contains(self, p):
        return (
            isinstance(p, tuple)
            and len(p) == self.dimension
            and all(isinstance(c, Fraction) for c in p)
        )

    def coerce(self, p):
        if not isinstance(p, (tuple, list)) or len(p) != self.dimension:
            raise KindMismatch(f"{p!r} is not a point of {self}")
        return tuple(to_fraction(c) for c in p)

    def key(self, p):
        return p

    def basis(self, n):
        return Box(self, Fraction(n))

    def join(self, a, b):
        return Box(self, max(_box_radius(a), _box_radius(b), Fraction(1)))

    def cover(self, points):
        r = max((sup_norm(p) for p in points), default=Fraction(0))
        return Box(self, Fraction(max(_ceil(r), 1)))

    def random_point(self, rng):
        return tuple(random_rational(rng) for _ in range(self.dimension))

    def zero(self):
        return (Fraction(0),) * self.dimension

    def __repr__(self):
        return f"RationalVector({self.dimension})"


@dataclass(frozen=True)
class ProductSpace(Space):
    """Cartesian product carrying the initial (product) bornology."""

    factors: tuple
    kind = "product"

    def __post_init__(self):
        if not self.factors:
            raise ValueError("a product needs at least one factor")

    def contains(self, p):
        return (
            isinstance(p, tuple)
            and len(p) == len(self.factors)
            and all(f.contains(c) for f, c in zip(self.factors, p))
        )

    def coerce(self, p):
        if not isinstance(p, (tuple, list)) or len(p) != len(self.factors):
            raise KindMismatch(f"{p!r} is not a point of {self}")
        return tuple(f.coerce(c) for f, c in zip(self.factors, p))

    def key(self, p):
        return tuple(f.key(c) for f, c in zip(self.factors, p))

    def basis(self, n):
        return ProductBox(self, tuple(f.basis(n) for f in self.factors))

    def sample_basis(self):
        per_factor = [f.sample_basis() for f in self.factors]
        depth = max(len(s) for s in per_factor)
        return [
            ProductBox(self, tuple(s[min(i, len(s) - 1)] for s in per_factor))
            for i in range(depth)
        ]

    def join(self, a, b):
        return ProductBox(
            self,
            tuple(
                f.join(pa, pb)
                for f, pa, pb in zip(self.factors, _product_parts(self, a), _product_parts(self, b))
            ),
        )

    def cover(self, points):
        pts = list(points)
        return ProductBox(
            self, tuple(f.cover(p[i] for p in pts) for i, f in enumerate(self.factors))
        )

    def random_point(self, rng):
        return tuple(f.random_point(rng) for f in self.factors)

    def __repr__(self):
        return " x ".join(map(repr, self.factors))


@dataclass(frozen=True)
class Subspace(Space):
    """A subset ``A`` of ``base`` with the induced structure.

    ``A`` is always bounded here, so every subset of the carrier is bounded.
    """

    base: Space
    subset: "BoundedSet"
    kind = "subspace"

    def contains(self, p):
        return self.base.contains(p) and self.subset.contains(p)

    def coerce(self, p):
        p = self.base.coerce(p)
        if not self.subset.contains(p):
            raise KindMismatch(f"{p!r} lies outside {self.subset}")
        return p

    def key(self, p):
        return self.base.key(p)

    def basis(self, n):
        return WholeSet(self)

    def sample_basis(self):
        return [WholeSet(self)]

    def join(self, a, b):
        return WholeSet(self)

    def cover(self, points):
        return WholeSet(self)

    def random_point(self, rng):
        return self.subset.random_point(rng)

    def __repr__(self):
        return f"Subspace({self.base!r}, {self.subset!r})"


class _CombinationSpace(Space):
    """Carrier whose points are finitely supported combinations over ``base``.

    The bornology has the basis ``{comb supported by B with norm <= gamma}``.
    """

    base: Space
    element_kind: str = ""

    def contains(self, p):
        return getattr(p, "combination_kind", None) == self.element_kind and p.space == self.base

    def key(self, p):
        return p.sort_key

    def basis(self, n):
        return MeasureBall(self, self.base.basis(n), Fraction(n))

    def sample_basis(self):
        return [MeasureBall(self, b, Fraction(g)) for b, g in zip(self.base.sample_basis(), (1, 2, 4, 8))]

    def join(self, a, b):
        a, b = _as_ball(self, a), _as_ball(self, b)
        return MeasureBall(self, self.base.join(a.support, b.support), max(a.gamma, b.gamma))

    def cover(self, points):
        pts = list(points)
        support = self.base.cover(x for p in pts for x, _ in p.atoms)
        gamma = max((p.norm() for p in pts), default=Fraction(0))
        return MeasureBall(self, support, max(gamma, Fraction(1)))


@dataclass(frozen=True)
class MeasureSpace(_CombinationSpace):
    """``MX``: signed measures of bounded support on ``base``, as points."""

    base: Space
    kind = "measures"
    element_kind = "measure"

    def random_point(self, rng):
        from .laws import random_measure

        return random_measure(self.base, rng)

    def __repr__(self):
        return f"M({self.base!r})"


@dataclass(frozen=True)
class FormalSpace(_CombinationSpace):
    """``LX``: formal linear combinations of points of ``base``."""

    base: Space
    kind = "formal"
    element_kind = "formal"

    def random_point(self, rng):
        from .laws import random_formal

        return random_formal(self.base, rng)

    def __repr__(self):
        return f"L({self.base!r})"


# ---------------------------------------------------------------------------
# bounded sets


class BoundedSet:
    """A bounded subset of ``space``: a basis member or an explicit finite set."""

    space: Space

    def contains(self, p: Point) -> bool:
        raise NotImplementedError

    def random_point(self, rng: random.Random) -> Point:
        raise NotImplementedError

    def enumerate(self, limit: int) -> list[Point] | None:
        """All members, smallest first, when there are at most ``limit`` of them."""
        return None

    def __contains__(self, p):
        return self.contains(p)


@dataclass(frozen=True)
class FiniteSet(BoundedSet):
    space: Space
    points: frozenset

    def contains(self, p):
        return p in self.points

    def random_point(self, rng):
        if not self.points:
            raise ValueError("cannot sample from the empty set")
        return rng.choice(self.space.sorted(self.points))

    def enumerate(self, limit):
        if len(self.points) > limit:
            return None
        return self.space.sorted(self.points)

    def __iter__(self):
        return iter(self.space.sorted(self.points))

    def __len__(self):
        return len(self.points)

    def __repr__(self):
        return "{" + ", ".join(map(repr, self)) + "}"


@dataclass(frozen=True)
class WholeSet(BoundedSet):
    """The entire carrier of a bounded space (finite or already bounded)."""

    space: Space

    def contains(self, p):
        return self.space.contains(p)

    def random_point(self, rng):
        return self.space.random_point(rng)

    def enumerate(self, limit):
        if isinstance(self.space, FiniteLabeled) and len(self.space.labels) <= limit:
            return sorted(self.space.labels)
        if isinstance(self.space, Subspace):
            return self.space.subset.enumerate(limit)
        return None

    def __repr__(self):
        return f"all of {self.space!r}"


@dataclass(frozen=True)
class Interval(BoundedSet):
    """Closed interval ``[lo, hi]`` of the integer or rational line."""

    space: Space
    lo: Fraction
    hi: Fraction

    def contains(self, p):
        return self.space.contains(p) and self.lo <= p <= self.hi

    def random_point(self, rng):
        if isinstance(self.space, IntegerLine):
            return rng.randint(_ceil(self.lo), _floor(self.hi))
        return random_rational_in(rng, Fraction(self.lo), Fraction(self.hi))

    def enumerate(self, limit):
        if not isinstance(self.space, IntegerLine):
            return None
        lo, hi = _ceil(self.lo), _floor(self.hi)
        if hi - lo + 1 > limit:
            return None
        # small magnitudes first: 0, 1, -1, 2, -2, ...
        return sorted(range(lo, hi + 1), key=lambda n: (abs(n), n < 0))

    @property
    def bound(self) -> Fraction:
        """Largest absolute value attained on the interval."""
        return Fraction(max(abs(self.lo), abs(self.hi)))

    def __repr__(self):
        return f"[{self.lo}, {self.hi}]"


@dataclass(frozen=True)
class Box(BoundedSet):
    """Sup-norm ball ``[-radius, radius]^n``."""

    space: RationalVector
    radius: Fraction

    def contains(self, p):
        return self.space.contains(p) and sup_norm(p) <= self.radius

    def random_point(self, rng):
        r = Fraction(self.radius)
        return tuple(random_rational_in(rng, -r, r) for _ in range(self.space.dimension))

    def __repr__(self):
        return f"[-{self.radius}, {self.radius}]^{self.space.dimension}"


@dataclass(frozen=True)
class ProductBox(BoundedSet):
    space: ProductSpace
    parts: tuple

    def contains(self, p):
        return self.space.contains(p) and all(b.contains(c) for b, c in zip(self.parts, p))

    def random_point(self, rng):
        return tuple(b.random_point(rng) for b in self.parts)

    def __repr__(self):
        return " x ".join(map(repr, self.parts))


@dataclass(frozen=True)
class MeasureBall(BoundedSet):
    """``M(B, X, gamma)``: combinations supported by ``support`` with norm at most ``gamma``."""

    space: _CombinationSpace
    support: BoundedSet
    gamma: Fraction

    def __post_init__(self):
        if self.gamma <= 0:
            raise ValueError("gamma must be positive")

    def contains(self, p):
        return (
            self.space.contains(p)
            and all(self.support.contains(x) for x, _ in p.atoms)
            and p.norm() <= self.gamma
        )

    def random_point(self, rng):
        from .laws import random_combination

        comb = random_combination(self.space, rng, point=self.support.random_point)
        tv = comb.norm()
        if tv > self.gamma:
            comb = comb.scale(self.gamma / tv)
        return comb

    def __repr__(self):
        return f"M({self.support!r}, {self.space.base!r}, {self.gamma})"


def _product_parts(space: ProductSpace, b: BoundedSet) -> tuple:
    if isinstance(b, ProductBox):
        return b.parts
    if isinstance(b, FiniteSet):
        return space.cover(b.points).parts
    raise KindMismatch(f"{b!r} is not a bounded set of {space!r}")


def _as_ball(space: _CombinationSpace, b: BoundedSet) -> MeasureBall:
    if isinstance(b, MeasureBall):
        return b
    if isinstance(b, FiniteSet):
        return space.cover(b.points)
    raise KindMismatch(f"{b!r} is not a bounded set of {space!r}")


def _line_radius(b: BoundedSet) -> int:
    if isinstance(b, Interval):
        return _ceil(b.bound)
    if isinstance(b, FiniteSet):
        return _ceil(max((abs(p) for p in b.points), default=0))
    raise KindMismatch(f"{b!r} is not a bounded set of a line")


def _box_radius(b: BoundedSet) -> Fraction:
    if isinstance(b, Box):
        return b.radius
    if isinstance(b, FiniteSet):
        return max((sup_norm(p) for p in b.points), default=Fraction(0))
    raise KindMismatch(f"{b!r} is not a bounded set of a vector space")


def _ceil(x) -> int:
    return -((-Fraction(x).numerator) // Fraction(x).denominator)


def _floor(x) -> int:
    return Fraction(x).numerator // Fraction(x).denominator


def sup_norm(v: Sequence[Fraction]) -> Fraction:
    return max((abs(c) for c in v), default=Fraction(0))


def abs_bound(b: BoundedSet) -> Fraction:
    """An upper bound for ``|x|`` over a bounded subset of a line or vector space."""
    if isinstance(b, Interval):
        return b.bound
    if isinstance(b, Box):
        return Fraction(b.radius)
    if isinstance(b, FiniteSet):
        if isinstance(b.space, RationalVector):
            return _box_radius(b)
        return Fraction(max((abs(p) for p in b.points), default=0))
    if isinstance(b, WholeSet) and isinstance(b.space, Subspace):
        return abs_bound(b.space.subset)
    raise KindMismatch(f"no absolute bound available for {b!r}")


# ---------------------------------------------------------------------------
# construction


def make_space(kind: str, *params) -> Space:
    """Build a space from a kind name and its parameters.

    >>> make_space("finite", {"a", "b"})
    FiniteLabeled{a,b}
    >>> make_space("vector", 2)
    RationalVector(2)
    """
    if kind == "finite":
        (labels,) = params
        return FiniteLabeled(frozenset(labels))
    if kind == "integers":
        return IntegerLine()
    if kind == "rationals":
        return RationalLine()
    if kind == "vector":
        (dimension,) = params
        return RationalVector(dimension)
    if kind == "measures":
        (base,) = params
        return MeasureSpace(base)
    if kind == "formal":
        (base,) = params
        return FormalSpace(base)
    if kind == "product":
        return product_space(list(params[0]) if len(params) == 1 else list(params))
    raise ValueError(f"unknown space kind {kind!r}")


def point_space() -> FiniteLabeled:
    """The terminal object ``1``: a single point labelled ``"*"``."""
    return FiniteLabeled(frozenset({"*"}))


def is_bounded_member(B: BoundedSet, p: Point) -> bool:
    if not B.space.contains(p):
        raise KindMismatch(f"{p!r} is not a point of {B.space!r}")
    return B.contains(p)


def product_space(factors: Sequence[Space]) -> ProductSpace:
    return ProductSpace(tuple(factors))


def projection(space: ProductSpace, i: int) -> "Morphism":
    """The ``i``-th product projection."""
    factor = space.factors[i]

    def bound(b):
        if isinstance(b, FiniteSet):
            return FiniteSet(factor, frozenset(p[i] for p in b.points))
        return _product_parts(space, b)[i]

    return Morphism(space, factor, lambda p: p[i], bound, name=f"pi_{i}")


# ---------------------------------------------------------------------------
# morphisms


@dataclass(frozen=True)
class Morphism:
    """A measurable bornological map ``domain -> codomain``.

    ``bound`` sends each bounded set of the domain to a bounded set of the
    codomain containing its image.
    """

    domain: Space
    codomain: Space
    map: Callable[[Point], Point]
    bound: Callable[[BoundedSet], BoundedSet] = field(repr=False)
    name: str = "f"

    def __call__(self, p: Point) -> Point:
        return self.map(p)

    def then(self, g: "Morphism") -> "Morphism":
        """``g . self``"""
        if g.domain != self.codomain:
            raise KindMismatch(f"cannot compose {self.name}: ->{self.codomain!r} with {g.name}: {g.domain!r}->")
        return Morphism(
            self.domain,
            g.codomain,
            lambda p: g.map(self.map(p)),
            lambda b: g.bound(self.bound(b)),
            name=f"{g.name}.{self.name}",
        )


def check_morphism(f: Morphism, samples: int = 256, seed: int = 0) -> None:
    """Spot-check kind-correctness and bornologicity of ``f``.

    Small basis sets are checked exhaustively (smallest points first); larger
    ones on ``samples`` seeded random points.  Raises BornologyViolation with
    the first counterexample found.
    """
    rng = random.Random(seed)
    for B in f.domain.sample_basis():
        image_bound = f.bound(B)
        points = B.enumerate(samples)
        if points is None:
            points = [B.random_point(rng) for _ in range(samples)]
        for p in points:
            y = f.map(p)
            if not f.codomain.contains(y):
                raise BornologyViolation(p, B, f"{f.name}({p!r}) = {y!r} is not a point of {f.codomain!r}")
            if not image_bound.contains(y):
                raise BornologyViolation(
                    p, B, f"{f.name}({p!r}) = {y!r} lies outside {image_bound!r}, the declared bound of {B!r}"
                )


def make_morphism(domain, codomain, map, bound, name="f", samples=256, seed=0) -> Morphism:
    f = Morphism(domain, codomain, map, bound, name=name)
    check_morphism(f, samples=samples, seed=seed)
    return f


def identity(space: Space) -> Morphism:
    return Morphism(space, space, lambda p: p, lambda b: b, name="id")


def constant_bound(target: BoundedSet) -> Callable[[BoundedSet], BoundedSet]:
    return lambda b: target


def tabulated(domain: FiniteLabeled | Subspace, codomain: Space, table: dict, name="f") -> Morphism:
    """A morphism out of a finite space given by its value table."""
    table = {k: codomain.coerce(v) for k, v in table.items()}

    def bound(b):
        return codomain.cover(table.values())

    return Morphism(domain, codomain, table.__getitem__, bound, name=name)


def inclusion(sub: Subspace) -> Morphism:
    """``A -> X`` for a subspace ``A`` of ``X``."""
    return Morphism(sub, sub.base, lambda p: p, lambda b: sub.subset, name="incl")


def characteristic_morphism(space: Space, E: Iterable[Point]) -> Morphism:
    """The indicator ``[E]: X -> R`` of a finite set ``E``."""
    members = frozenset(space.coerce(p) for p in E)
    line = RationalLine()
    return Morphism(
        space,
        line,
        lambda x: Fraction(1) if x in members else Fraction(0),
        constant_bound(Interval(line, Fraction(0), Fraction(1))),
        name="[E]",
    )

