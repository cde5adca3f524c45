"""The monad ``(M, delta, kappa)`` of finite signed measures of bounded support.

Also holds the free-vector-space monad ``(L, unit, flatten)`` on formal linear
combinations and the monad morphism ``Delta: LX -> MX`` between them.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable

from .errors import KindMismatch
from .laws import LawReport, case_rng, random_formal, random_measure, random_weight
from .signed_measure import Combination, SignedMeasure, integrate_real, pushforward
from .spaces import (
    BoundedSet,
    FiniteSet,
    FormalSpace,
    Interval,
    MeasureBall,
    MeasureSpace,
    Morphism,
    Point,
    RationalLine,
    Space,
    abs_bound,
    characteristic_morphism,
)

Kappa = Callable[[SignedMeasure], SignedMeasure]


def dirac(X: Space, x: Point) -> SignedMeasure:
    return SignedMeasure(X, ((X.coerce(x), Fraction(1)),))


def _base_of(M: SignedMeasure) -> Space:
    if not isinstance(M.space, MeasureSpace):
        raise KindMismatch(f"expected a measure on measures, got one on {M.space!r}")
    return M.space.base


def kappa(M: SignedMeasure) -> SignedMeasure:
    """Flatten a measure on measures: ``sum_j W_j mu_j``.

    On finite supports this is the closed form of ``E -> integral of Ev_E dM``.
    """
    X = _base_of(M)
    acc: dict = {}
    for mu, W in M.atoms:
        for x, w in mu.atoms:
            acc[x] = acc.get(x, Fraction(0)) + W * w
    return SignedMeasure._from_dict(X, acc)


def map_measure(f: Morphism, mu: SignedMeasure) -> SignedMeasure:
    """The functor action ``Mf``."""
    return pushforward(f, mu)


def _ball(space: MeasureSpace, b: BoundedSet) -> MeasureBall:
    if isinstance(b, MeasureBall):
        return b
    if isinstance(b, FiniteSet):
        return space.cover(b.points)
    raise KindMismatch(f"{b!r} is not a bounded set of {space!r}")


def functor(f: Morphism) -> Morphism:
    """``Mf: MX -> MY`` as a morphism; sends ``M(B, X, g)`` into ``M(f(B), Y, g)``."""
    MX, MY = MeasureSpace(f.domain), MeasureSpace(f.codomain)

    def bound(b):
        ball = _ball(MX, b)
        return MeasureBall(MY, f.bound(ball.support), ball.gamma)

    return Morphism(MX, MY, lambda mu: pushforward(f, mu), bound, name=f"M{f.name}")


def unit_morphism(X: Space) -> Morphism:
    """``delta_X: X -> MX``; sends a bounded ``B`` into ``M(B, X, 1)``."""
    MX = MeasureSpace(X)
    return Morphism(X, MX, lambda x: dirac(X, x), lambda b: MeasureBall(MX, b, Fraction(1)), name="delta")


def multiplication_morphism(X: Space, flatten: Kappa = kappa) -> Morphism:
    """``kappa_X: MMX -> MX``; sends ``M(M(B, X, g), MX, d)`` into ``M(B, X, g*d)``."""
    MX = MeasureSpace(X)
    MMX = MeasureSpace(MX)

    def bound(b):
        outer = _ball(MMX, b)
        inner = _ball(MX, outer.support)
        return MeasureBall(MX, inner.support, inner.gamma * outer.gamma)

    return Morphism(MMX, MX, flatten, bound, name="kappa")


def lift_real(f: Morphism) -> Morphism:
    """``f#: MX -> R``, ``mu -> integral of f dmu``.

    If ``|f| <= beta`` on ``B`` then ``|f#| <= beta * gamma`` on ``M(B, X, gamma)``.
    """
    MX = MeasureSpace(f.domain)
    line = RationalLine()

    def bound(b):
        if isinstance(b, FiniteSet):
            values = [integrate_real(f, mu) for mu in b.points]
            return line.cover(values)
        ball = _ball(MX, b)
        r = abs_bound(f.bound(ball.support)) * ball.gamma
        return Interval(line, -r, r)

    return Morphism(MX, line, lambda mu: integrate_real(f, mu), bound, name=f"{f.name}#")


def evaluation_morphism(X: Space, E: Iterable[Point]) -> Morphism:
    """``Ev_E: MX -> R``, the lift of the indicator of ``E``."""
    ev = lift_real(characteristic_morphism(X, E))
    return Morphism(ev.domain, ev.codomain, ev.map, ev.bound, name="Ev_E")


# ---------------------------------------------------------------------------
# formal linear combinations


class FormalLinComb(Combination):
    """An element ``sum a_i x_i`` of the free rational vector space on a carrier."""

    combination_kind = "formal"
    __slots__ = ()


def unit_formal(X: Space, x: Point) -> FormalLinComb:
    """The generator ``1 x``."""
    return FormalLinComb(X, ((X.coerce(x), Fraction(1)),))


def formal_map(f: Callable[[Point], Point], codomain: Space, l: FormalLinComb) -> FormalLinComb:
    """``Lf``: push a combination forward along a plain function."""
    acc: dict = {}
    for x, a in l.atoms:
        y = codomain.coerce(f(x))
        acc[y] = acc.get(y, Fraction(0)) + a
    return FormalLinComb._from_dict(codomain, acc)


def flatten_formal(ll: FormalLinComb) -> FormalLinComb:
    """Multiplication of the free-vector-space monad."""
    if not isinstance(ll.space, FormalSpace):
        raise KindMismatch(f"expected a combination of combinations, got one over {ll.space!r}")
    acc: dict = {}
    for l, a in ll.atoms:
        for x, b in l.atoms:
            acc[x] = acc.get(x, Fraction(0)) + a * b
    return FormalLinComb._from_dict(ll.space.base, acc)


def delta_embed(l: FormalLinComb) -> SignedMeasure:
    """``Delta_X``: the linear extension of ``x -> delta_x``."""
    return SignedMeasure(l.space, l.atoms)


# ---------------------------------------------------------------------------
# law suites


def check_monad_laws(base: Space, seed: int = 0, cases: int = 100, flatten: Kappa = kappa) -> LawReport:
    """Check both unit laws and associativity by exact equality.

    ``flatten`` lets a test substitute a (deliberately broken) multiplication.
    """
    if cases < 1:
        raise ValueError("cases must be at least 1")
    report = LawReport("monad", seed)
    MX = MeasureSpace(base)
    delta_X = unit_morphism(base)
    kappa_X = multiplication_morphism(base, flatten)
    for case in range(cases):
        tag, rng = case_rng(seed, "left_unit", case)
        mu = random_measure(base, rng)
        report.check("left_unit", tag, flatten(dirac(MX, mu)), mu, mu=mu)

        tag, rng = case_rng(seed, "right_unit", case)
        mu = random_measure(base, rng)
        report.check("right_unit", tag, flatten(pushforward(delta_X, mu)), mu, mu=mu)

        tag, rng = case_rng(seed, "associativity", case)
        m3 = random_measure(MeasureSpace(MX), rng)
        report.check(
            "associativity",
            tag,
            flatten(pushforward(kappa_X, m3)),
            flatten(flatten(m3)),
            m=m3,
        )
    return report


def check_naturality(f: Morphism, seed: int = 0, cases: int = 100) -> LawReport:
    """``Mf . delta = delta . f`` and ``Mf . kappa = kappa . MMf`` on random inputs."""
    report = LawReport("naturality", seed)
    X, Y = f.domain, f.codomain
    Mf = functor(f)
    for case in range(cases):
        tag, rng = case_rng(seed, "delta", case)
        x = X.random_point(rng)
        report.check("delta", tag, pushforward(f, dirac(X, x)), dirac(Y, f(x)), x=x)

        tag, rng = case_rng(seed, "kappa", case)
        M = random_measure(MeasureSpace(X), rng)
        report.check("kappa", tag, pushforward(f, kappa(M)), kappa(pushforward(Mf, M)), M=M)
    return report


def check_monad_morphism(base: Space, seed: int = 0, cases: int = 100) -> LawReport:
    """``Delta . unit = delta`` and ``Delta . flatten = kappa . Delta_M . L(Delta)``."""
    report = LawReport("monad_morphism", seed)
    LX = FormalSpace(base)
    MX = MeasureSpace(base)
    for case in range(cases):
        tag, rng = case_rng(seed, "unit", case)
        x = base.random_point(rng)
        report.check("unit", tag, delta_embed(unit_formal(base, x)), dirac(base, x), x=x)

        tag, rng = case_rng(seed, "multiplication", case)
        ll = random_formal(LX, rng)
        lhs = delta_embed(flatten_formal(ll))
        rhs = kappa(delta_embed(formal_map(delta_embed, MX, ll)))
        report.check("multiplication", tag, lhs, rhs, ll=ll)
    return report


def check_kappa_linear(base: Space, seed: int = 0, cases: int = 100) -> LawReport:
    report = LawReport("kappa_linear", seed)
    MMX = MeasureSpace(MeasureSpace(base))
    for case in range(cases):
        tag, rng = case_rng(seed, "linear", case)
        M, N = MMX.random_point(rng), MMX.random_point(rng)
        a, b = random_weight(rng), random_weight(rng)
        report.check(
            "linear", tag, kappa(M.scale(a) + N.scale(b)), kappa(M).scale(a) + kappa(N).scale(b), M=M, N=N, a=a, b=b
        )
    return report

