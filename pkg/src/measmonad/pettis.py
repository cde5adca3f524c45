"""Pettis integrals in finite-dimensional rational vector spaces.

In ``Q^n`` the weak sigma-algebra is discrete and every linear functional is
bounded, so the coordinatewise integral is *the* Pettis integral: it satisfies
``phi(x) = integral of phi.f dmu`` for every functional ``phi`` and is unique
because the coordinate projections separate points.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .em_algebra import Algebra, check_algebra_laws
from .errors import KindMismatch
from .laws import LawReport, arity_space, case_rng, random_function, random_measure, random_weight
from .monad import lift_real
from .signed_measure import (
    SignedMeasure,
    integrate_real,
    jordan_hahn,
    pushforward,
    restrict,
)
from .spaces import (
    Box,
    Interval,
    MeasureBall,
    MeasureSpace,
    Morphism,
    RationalLine,
    RationalVector,
    Subspace,
    abs_bound,
    identity,
    inclusion,
    sup_norm,
    to_fraction,
)


@dataclass(frozen=True)
class Functional:
    """The linear functional ``x -> sum a_i x_i`` on ``Q^n``."""

    coefficients: tuple

    def __post_init__(self):
        object.__setattr__(self, "coefficients", tuple(to_fraction(a) for a in self.coefficients))

    @property
    def dimension(self) -> int:
        return len(self.coefficients)

    def __call__(self, x) -> Fraction:
        return sum((a * xi for a, xi in zip(self.coefficients, x)), Fraction(0))

    def as_morphism(self) -> Morphism:
        V = RationalVector(self.dimension)
        line = RationalLine()
        norm1 = sum((abs(a) for a in self.coefficients), Fraction(0))

        def bound(b):
            r = norm1 * abs_bound(b)
            return Interval(line, -r, r)

        return Morphism(V, line, self, bound, name="phi")


def coordinate_functionals(n: int) -> list[Functional]:
    return [Functional(tuple(Fraction(int(i == j)) for j in range(n))) for i in range(n)]


def random_functional(n: int, rng: random.Random) -> Functional:
    return Functional(tuple(random_weight(rng) for _ in range(n)))


def separates_points(functionals: Sequence[Functional], n: int) -> bool:
    """True iff the coefficient vectors span the dual of ``Q^n``."""
    if not functionals:
        return False
    import sympy

    return sympy.Matrix([list(phi.coefficients) for phi in functionals]).rank() == n


def _vector_target(n: int, f: Morphism) -> None:
    if f.codomain != RationalVector(n):
        raise KindMismatch(f"{f.name} lands in {f.codomain!r}, not in RationalVector({n})")


def pettis_integral(n: int, f: Morphism, mu: SignedMeasure) -> tuple:
    """The vector ``x`` with ``x_i = integral of pi_i . f dmu``."""
    _vector_target(n, f)
    if mu.space != f.domain:
        raise KindMismatch(f"{f.name} is defined on {f.domain!r}, the measure lives on {mu.space!r}")
    acc = [Fraction(0)] * n
    for t, w in mu.atoms:
        for i, ci in enumerate(f(t)):
            acc[i] += w * ci
    return tuple(acc)


def verify_pettis(x, f: Morphism, mu: SignedMeasure, functionals: Sequence[Functional], suite="pettis") -> LawReport:
    """Check ``phi(x) = integral of phi.f dmu`` for each supplied functional."""
    report = LawReport(suite)
    n = f.codomain.dimension
    if not separates_points(functionals, n):
        report.notes.append("functional family does not separate points; uniqueness not established")
    for k, phi in enumerate(functionals):
        rhs = integrate_real(f.then(phi.as_morphism()), mu)
        report.check("defining_identity", f"functional {k}", phi(x), rhs, phi=phi.coefficients, x=x)
    return report


def pettis_algebra(n: int) -> Algebra:
    """``Q^n`` with the structure map ``mu -> Pettis integral of id dmu``."""
    V = RationalVector(n)
    ident = identity(V)
    M = MeasureSpace(V)

    def bound(b):
        ball = b if isinstance(b, MeasureBall) else M.cover(b.points)
        return Box(V, ball.gamma * abs_bound(ball.support))

    return Algebra(V, lambda mu: pettis_integral(n, ident, mu), bound, name=f"pettis{n}")


def functional_family(n: int, rng: random.Random, extra: int = 8) -> list[Functional]:
    """Coordinate projections (separating) plus ``extra`` random functionals."""
    return coordinate_functionals(n) + [random_functional(n, rng) for _ in range(extra)]


def enough_pettis_equivalence_check(n: int, seed: int = 0, cases: int = 100) -> LawReport:
    """Exercise the constructive implications between the four formulations of
    "has enough Pettis integrals" on random instances.

    * signed from nonnegative: ``P(f, mu+) - P(f, mu-)`` is a Pettis integral of ``f`` w.r.t. ``mu``
    * identity from inclusions: ``P(incl_B, mu_B)`` is a Pettis integral of ``id`` w.r.t. ``mu``
    * arbitrary ``f`` from identity: ``P(id, Mf(mu))`` is a Pettis integral of ``f`` w.r.t. ``mu``
    """
    if cases < 1:
        raise ValueError("cases must be at least 1")
    report = LawReport(f"pettis_equivalence[{n}]", seed)
    V = RationalVector(n)
    T = arity_space()
    ident = identity(V)
    for case in range(cases):
        tag, rng = case_rng(seed, "routes", case)
        family = functional_family(n, rng)
        f = random_function(T, V, rng)
        mu = random_measure(T, rng)
        direct = pettis_integral(n, f, mu)

        jd = jordan_hahn(mu)
        p_pos, p_neg = pettis_integral(n, f, jd.positive_part), pettis_integral(n, f, jd.negative_part)
        from_jordan = tuple(a - b for a, b in zip(p_pos, p_neg))
        _reverify(report, "from_nonnegative", tag, from_jordan, f, mu, family)
        report.check("from_nonnegative_agrees", tag, from_jordan, direct, mu=mu)
        if not jd.negative_part.atoms:
            report.check("nonnegative_same_vector", tag, p_pos, direct, mu=mu)

        nu = random_measure(V, rng)
        B = V.finite(nu.support)
        nu_B = restrict(nu, B)
        from_inclusion = pettis_integral(n, inclusion(Subspace(V, B)), nu_B)
        _reverify(report, "from_inclusion", tag, from_inclusion, ident, nu, family)

        from_identity = pettis_integral(n, ident, pushforward(f, mu))
        _reverify(report, "from_identity", tag, from_identity, f, mu, family)
        report.check("from_identity_agrees", tag, from_identity, direct, mu=mu)
    return report


def _reverify(report, law, tag, x, f, mu, family) -> None:
    inner = verify_pettis(x, f, mu, family)
    witness = inner.failures[0].inputs if inner.failures else {}
    report.require(law, tag, inner.passed, x=x, mu=mu, **witness)


def check_structure_bound(n: int, seed: int = 0, cases: int = 100) -> LawReport:
    """``|c(mu)|_inf <= gamma * sup |B|`` for ``mu`` in ``M(B, Q^n, gamma)``."""
    report = LawReport(f"pettis_bound[{n}]", seed)
    A = pettis_algebra(n)
    V = A.carrier
    M = MeasureSpace(V)
    for case in range(cases):
        tag, rng = case_rng(seed, "bound", case)
        B = V.basis(rng.randint(1, 8))
        gamma = Fraction(rng.randint(1, 16), rng.randint(1, 4))
        mu = MeasureBall(M, B, gamma).random_point(rng)
        report.require("bound", tag, sup_norm(A(mu)) <= gamma * abs_bound(B), mu=mu, gamma=gamma)
    return report


def check_pettis_algebra(n: int, seed: int = 0, cases: int = 100) -> LawReport:
    """Algebra laws, the bornological bound, and ``phi . c = phi#`` for the Pettis structure map."""
    A = pettis_algebra(n)
    report = check_algebra_laws(A, seed, cases)
    report.merge(check_structure_bound(n, seed, cases))
    for case in range(cases):
        tag, rng = case_rng(seed, "functional_lift", case)
        phi = random_functional(n, rng)
        mu = random_measure(A.carrier, rng)
        report.check("functional_lift", tag, phi(A(mu)), lift_real(phi.as_morphism())(mu), phi=phi, mu=mu)
    return report
