"""Algebras of the measure monad and the integrals they carry.

An algebra is a carrier ``X`` with a structure map ``c: MX -> X``.  The
integral of ``f: T -> X`` against ``mu`` on ``T`` is ``c(Mf(mu))``, and the
vector operations of ``X`` are *derived* from ``c``:
``x + y = c(delta_x + delta_y)`` and ``a x = c(a delta_x)``.

Structure maps are ordinary pure functions.  Nothing forces them to satisfy
the algebra laws; :func:`check_algebra_laws` tests that they do.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .errors import KindMismatch, NotAProbabilityMeasure
from .laws import (
    LawReport,
    arity_space,
    case_rng,
    random_function,
    random_measure,
    random_probability,
    random_weight,
)
from .monad import dirac, kappa, multiplication_morphism
from .signed_measure import SignedMeasure, pushforward
from .spaces import (
    BoundedSet,
    Box,
    FiniteSet,
    Interval,
    MeasureBall,
    MeasureSpace,
    Morphism,
    Point,
    RationalLine,
    RationalVector,
    Space,
    abs_bound,
    tabulated,
)


@dataclass(frozen=True)
class Algebra:
    carrier: Space
    structure_map: Callable[[SignedMeasure], Point] = field(repr=False)
    #: sends bounded sets of ``M(carrier)`` to bounded sets of the carrier
    bound: Callable[[BoundedSet], BoundedSet] | None = field(default=None, repr=False)
    name: str = "c"

    def __call__(self, mu: SignedMeasure) -> Point:
        return self.structure_map(mu)

    def as_morphism(self) -> Morphism:
        MX = MeasureSpace(self.carrier)
        bound = self.bound or (lambda b: self.carrier.cover(self.structure_map(mu) for mu in b.points))
        return Morphism(MX, self.carrier, self.structure_map, bound, name=self.name)

    def zero(self) -> Point:
        return self.structure_map(SignedMeasure.zero(self.carrier))


def _ball(space, b):
    if isinstance(b, MeasureBall):
        return b
    if isinstance(b, FiniteSet):
        return space.cover(b.points)
    raise KindMismatch(f"{b!r} is not a bounded set of {space!r}")


def real_algebra() -> Algebra:
    """The real line with ``c(mu) = integral of id dmu``."""
    line = RationalLine()
    M = MeasureSpace(line)

    def c(mu):
        return sum((x * w for x, w in mu.atoms), Fraction(0))

    def bound(b):
        ball = _ball(M, b)
        r = abs_bound(ball.support) * ball.gamma
        return Interval(line, -r, r)

    return Algebra(line, c, bound, name="c_R")


def vector_algebra(n: int) -> Algebra:
    """``Q^n`` with the coordinatewise integral (the barycentre map)."""
    V = RationalVector(n)
    M = MeasureSpace(V)

    def c(mu):
        acc = [Fraction(0)] * n
        for x, w in mu.atoms:
            for i, xi in enumerate(x):
                acc[i] += w * xi
        return tuple(acc)

    def bound(b):
        ball = _ball(M, b)
        return Box(V, abs_bound(ball.support) * ball.gamma)

    return Algebra(V, c, bound, name=f"c_R{n}")


def free_algebra(X: Space) -> Algebra:
    """``(MX, kappa_X)``."""
    return Algebra(MeasureSpace(X), kappa, multiplication_morphism(X).bound, name="kappa")


def integrate(A: Algebra, f: Morphism, mu: SignedMeasure) -> Point:
    """``integral of f dmu`` valued in ``A``: ``c(Mf(mu))``."""
    if f.codomain != A.carrier:
        raise KindMismatch(f"{f.name} lands in {f.codomain!r}, not in the carrier {A.carrier!r}")
    if mu.space != f.domain:
        raise KindMismatch(f"{f.name} is defined on {f.domain!r}, the measure lives on {mu.space!r}")
    return A(pushforward(f, mu))


def lift(A: Algebra, f: Morphism) -> Morphism:
    """``f#  = c . Mf : MT -> X``, the homomorphism out of the free algebra."""
    MT = MeasureSpace(f.domain)
    MX = MeasureSpace(f.codomain)
    c = A.as_morphism()

    def bound(b):
        ball = _ball(MT, b)
        return c.bound(MeasureBall(MX, f.bound(ball.support), ball.gamma))

    return Morphism(MT, A.carrier, lambda mu: integrate(A, f, mu), bound, name=f"{f.name}#")


def derived_add(A: Algebra, x: Point, y: Point) -> Point:
    X = A.carrier
    return A(dirac(X, x) + dirac(X, y))


def derived_smul(A: Algebra, a, x: Point) -> Point:
    return A(dirac(A.carrier, x).scale(a))


def derived_combination(A: Algebra, terms) -> Point:
    """``a_1 x_1 + ... + a_n x_n`` computed in one step as ``c(sum a_i delta_{x_i})``."""
    return A(SignedMeasure.from_atoms(A.carrier, [(x, a) for a, x in terms]))


def is_probability(mu: SignedMeasure) -> bool:
    return all(w > 0 for _, w in mu.atoms) and sum((w for _, w in mu.atoms), Fraction(0)) == 1


def barycenter(A: Algebra, mu: SignedMeasure) -> Point:
    """Centre of mass ``c(mu)`` of a probability measure on the carrier."""
    if any(w < 0 for _, w in mu.atoms):
        raise NotAProbabilityMeasure(f"negative weight in {mu!r}")
    mass = sum((w for _, w in mu.atoms), Fraction(0))
    if mass != 1:
        raise NotAProbabilityMeasure(f"total mass {mass} != 1")
    return A(mu)


# ---------------------------------------------------------------------------
# law suites


def check_algebra_laws(A: Algebra, seed: int = 0, cases: int = 100) -> LawReport:
    """Unit law ``c(delta_x) = x``, associativity ``c . Mc = c . kappa``, linearity of ``c``."""
    if cases < 1:
        raise ValueError("cases must be at least 1")
    report = LawReport(f"algebra[{A.name}]", seed)
    X = A.carrier
    MX = MeasureSpace(X)
    c = A.as_morphism()
    for case in range(cases):
        tag, rng = case_rng(seed, "unit", case)
        x = X.random_point(rng)
        report.check("unit", tag, A(dirac(X, x)), x, x=x)

        tag, rng = case_rng(seed, "associativity", case)
        M = random_measure(MX, rng)
        report.check("associativity", tag, A(pushforward(c, M)), A(kappa(M)), M=M)

        tag, rng = case_rng(seed, "linearity", case)
        mu, nu = random_measure(X, rng), random_measure(X, rng)
        a, b = random_weight(rng), random_weight(rng)
        rhs = _axby(A, a, A(mu), b, A(nu))
        report.check("linearity", tag, A(mu.scale(a) + nu.scale(b)), rhs, mu=mu, nu=nu, a=a, b=b)
    return report


def check_vector_space_axioms(A: Algebra, seed: int = 0, cases: int = 100) -> LawReport:
    """The derived operations form a rational vector space on sampled points."""
    report = LawReport(f"vector_space[{A.name}]", seed)
    X = A.carrier
    add = lambda x, y: derived_add(A, x, y)  # noqa: E731
    smul = lambda a, x: derived_smul(A, a, x)  # noqa: E731
    zero = A.zero()
    for case in range(cases):
        tag, rng = case_rng(seed, "axioms", case)
        x, y, z = X.random_point(rng), X.random_point(rng), X.random_point(rng)
        a, b = random_weight(rng), random_weight(rng)
        report.check("add_assoc", tag, add(add(x, y), z), add(x, add(y, z)), x=x, y=y, z=z)
        report.check("add_comm", tag, add(x, y), add(y, x), x=x, y=y)
        report.check("add_zero", tag, add(x, zero), x, x=x)
        report.check("add_inverse", tag, add(x, smul(-1, x)), zero, x=x)
        report.check("smul_one", tag, smul(1, x), x, x=x)
        report.check("smul_assoc", tag, smul(a, smul(b, x)), smul(a * b, x), x=x, a=a, b=b)
        report.check("distrib_vector", tag, smul(a, add(x, y)), add(smul(a, x), smul(a, y)), x=x, y=y, a=a)
        report.check("distrib_scalar", tag, smul(a + b, x), add(smul(a, x), smul(b, x)), x=x, a=a, b=b)
    return report


def check_homomorphism(phi: Morphism, A: Algebra, B: Algebra, seed: int = 0, cases: int = 100) -> LawReport:
    """``phi . c_A = c_B . M(phi)`` and ``phi(integral f dmu) = integral phi.f dmu``."""
    if phi.domain != A.carrier or phi.codomain != B.carrier:
        raise KindMismatch(f"{phi.name} does not run from {A.carrier!r} to {B.carrier!r}")
    report = LawReport(f"homomorphism[{phi.name}]", seed)
    T = arity_space()
    for case in range(cases):
        tag, rng = case_rng(seed, "structure", case)
        mu = random_measure(A.carrier, rng)
        report.check("structure", tag, phi(A(mu)), B(pushforward(phi, mu)), mu=mu)

        tag, rng = case_rng(seed, "integral", case)
        f = random_function(T, A.carrier, rng)
        mu = random_measure(T, rng)
        report.check(
            "integral", tag, phi(integrate(A, f, mu)), integrate(B, f.then(phi), mu), f=_table(f, T), mu=mu
        )
    return report


def check_integration_linearity(A: Algebra, seed: int = 0, cases: int = 100) -> LawReport:
    """``f -> integral f dmu`` is linear, and so is ``mu -> integral f dmu``."""
    report = LawReport(f"integration[{A.name}]", seed)
    T = arity_space()
    for case in range(cases):
        tag, rng = case_rng(seed, "linear_in_f", case)
        f = random_function(T, A.carrier, rng)
        g = random_function(T, A.carrier, rng, name="g")
        mu = random_measure(T, rng)
        a, b = random_weight(rng), random_weight(rng)
        h = tabulated(
            T,
            A.carrier,
            {t: _axby(A, a, f(t), b, g(t)) for t in sorted(T.labels)},
            name="af+bg",
        )
        rhs = _axby(A, a, integrate(A, f, mu), b, integrate(A, g, mu))
        report.check("linear_in_f", tag, integrate(A, h, mu), rhs, f=_table(f, T), g=_table(g, T), mu=mu, a=a, b=b)

        tag, rng = case_rng(seed, "linear_in_mu", case)
        f = random_function(T, A.carrier, rng)
        mu, nu = random_measure(T, rng), random_measure(T, rng)
        a, b = random_weight(rng), random_weight(rng)
        rhs = _axby(A, a, integrate(A, f, mu), b, integrate(A, f, nu))
        report.check(
            "linear_in_mu", tag, integrate(A, f, mu.scale(a) + nu.scale(b)), rhs, f=_table(f, T), mu=mu, nu=nu
        )
    return report


def check_convexity(A: Algebra, B: BoundedSet, seed: int = 0, cases: int = 100) -> LawReport:
    """The image under ``c`` of the probability measures supported by ``B`` is
    convex and contains ``B``."""
    if B.space != A.carrier:
        raise KindMismatch(f"{B!r} is not a subset of {A.carrier!r}")
    report = LawReport(f"convexity[{A.name}]", seed)
    X = A.carrier
    for case in range(cases):
        tag, rng = case_rng(seed, "mixture", case)
        mu1 = random_probability(X, rng, point=B.random_point)
        mu2 = random_probability(X, rng, point=B.random_point)
        t = Fraction(rng.randint(0, 8), 8)
        mix = mu1.scale(t) + mu2.scale(1 - t)
        rhs = derived_add(A, derived_smul(A, t, A(mu1)), derived_smul(A, 1 - t, A(mu2)))
        report.check("mixture", tag, A(mix), rhs, mu1=mu1, mu2=mu2, t=t)

        tag, rng = case_rng(seed, "contains", case)
        x = B.random_point(rng)
        report.check("contains", tag, A(dirac(X, x)), x, x=x)
    return report


def _axby(A, a, x, b, y):
    return derived_add(A, derived_smul(A, a, x), derived_smul(A, b, y))


def _table(f: Morphism, T) -> dict:
    return {t: f(t) for t in sorted(T.labels)}
