from fractions import Fraction as F
from itertools import chain, combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st
from strategies import LABELS, X, Y, maps, measures, rationals, real_maps

from measmonad import (
    FiniteLabeled,
    IntegerLine,
    KindMismatch,
    RationalLine,
    SignedMeasure,
    SpaceMismatch,
    SupportViolation,
    Subspace,
    evaluate,
    extend,
    from_atoms,
    integrate_real,
    jordan_hahn,
    make_morphism,
    pushforward,
    restrict,
    simple_approximation,
    total_variation,
    zero_measure,
)
from measmonad.spaces import Interval, tabulated


def subsets(points):
    points = sorted(points)
    return chain.from_iterable(combinations(points, r) for r in range(len(points) + 1))


def hahn_sets(mu):
    """Every split (P, N) of the support that is a Hahn decomposition, by enumeration."""
    support = sorted(mu.support)
    found = []
    for P in subsets(support):
        N = [p for p in support if p not in P]
        if all(mu(S) >= 0 for S in subsets(P)) and all(mu(S) <= 0 for S in subsets(N)):
            found.append(set(P))
    return found


def test_canonical_form_merges_and_drops_zeros():
    mu = from_atoms(X, [("b", 1), ("a", F(1, 2)), ("b", -1), ("c", 0)])
    assert mu.atoms == (("a", F(1, 2)),)
    assert mu == SignedMeasure.from_atoms(X, [("a", "1/2")])


def test_floats_are_rejected():
    with pytest.raises(TypeError):
        from_atoms(X, [("a", 0.5)])


def test_points_outside_the_space_are_rejected():
    with pytest.raises(KindMismatch):
        from_atoms(X, [("z", 1)])


def test_adding_measures_on_different_spaces_fails():
    with pytest.raises(SpaceMismatch):
        from_atoms(X, [("a", 1)]) + from_atoms(Y, [("p", 1)])


def test_evaluate_counts_only_listed_points():
    mu = from_atoms(X, [("a", 2), ("b", -3), ("c", F(1, 3))])
    assert evaluate(mu, {"a", "b"}) == -1
    assert mu({"a", "c", "e"}) == F(7, 3)
    assert mu(set()) == 0


def test_jordan_of_two_atoms():
    jd = jordan_hahn(from_atoms(X, [("a", 2), ("b", -3)]))
    assert jd.positive_part == from_atoms(X, [("a", 2)])
    assert jd.negative_part == from_atoms(X, [("b", 3)])
    assert jd.hahn_positive_set == frozenset({"a"})
    assert total_variation(jd.positive_part - jd.negative_part) == 5


@given(measures())
def test_jordan_matches_enumerated_hahn_split(mu):
    jd = jordan_hahn(mu)
    candidates = hahn_sets(mu)
    # on a finite support the Hahn split of the support is unique
    assert candidates == [set(jd.hahn_positive_set)]
    P = jd.hahn_positive_set
    assert jd.positive_part == from_atoms(X, [(p, w) for p, w in mu.atoms if p in P])
    assert jd.positive_part - jd.negative_part == mu
    assert jd.variation.norm() == total_variation(mu)


@given(measures(), measures(), rationals)
def test_total_variation_is_a_norm(mu, nu, a):
    assert total_variation(mu + nu) <= total_variation(mu) + total_variation(nu)
    assert total_variation(mu.scale(a)) == abs(a) * total_variation(mu)
    assert (total_variation(mu) == 0) == (mu == zero_measure(X))


@given(measures(), maps())
def test_pushforward_matches_preimage_measure(mu, f):
    image = pushforward(f, mu)
    for E in subsets(Y.labels):
        preimage = {x for x in X.labels if f(x) in E}
        assert image(E) == mu(preimage)


@given(measures(), maps())
def test_pushforward_contracts(mu, f):
    assert pushforward(f, mu).norm() <= mu.norm()


@given(measures(), measures(), rationals, maps())
def test_pushforward_is_linear(mu, nu, a, f):
    assert pushforward(f, mu.scale(a) + nu) == pushforward(f, mu).scale(a) + pushforward(f, nu)


def test_pushforward_on_the_wrong_space():
    f = tabulated(Y, X, {"p": "a", "q": "a", "r": "b"})
    with pytest.raises(SpaceMismatch):
        pushforward(f, from_atoms(X, [("a", 1)]))


def test_non_injective_pushforward_cancels():
    f = make_morphism(IntegerLine(), IntegerLine(), lambda n: n * n, lambda b: Interval(b.space, 0, b.bound**2), name="square")
    mu = from_atoms(IntegerLine(), [(1, 1), (-1, -1), (2, 3)])
    assert pushforward(f, mu) == from_atoms(IntegerLine(), [(4, 3)])


@given(measures(), st.sets(st.sampled_from(LABELS)))
def test_restriction_is_an_isometry_with_inverse(mu, extra):
    A = X.finite(mu.support | extra)
    mu_A = restrict(mu, A)
    assert mu_A.space == Subspace(X, A)
    assert mu_A.norm() == mu.norm()
    assert extend(mu_A) == mu


def test_restriction_outside_the_support_fails():
    mu = from_atoms(X, [("a", 1), ("b", 2)])
    with pytest.raises(SupportViolation) as info:
        restrict(mu, X.finite(["a"]))
    assert info.value.point == "b"


@given(measures(), real_maps())
def test_integral_is_the_weighted_sum(mu, f):
    assert integrate_real(f, mu) == sum((w * f(x) for x, w in mu.atoms), F(0))


@given(real_maps(), st.integers(0, 8))
def test_simple_approximation_is_dyadic_and_below(f, i):
    s = simple_approximation(f, X.labels, i)
    for x in X.labels:
        v, approx = f(x), s(x)
        assert (approx * 2**i).denominator == 1
        # rounds towards zero, saturating at magnitude i
        assert approx * v >= 0 and abs(approx) <= abs(v)
        if abs(v) <= i:
            assert abs(v) - abs(approx) < F(1, 2**i)
        else:
            assert abs(approx) == i


def test_simple_approximation_converges_on_the_line():
    line = RationalLine()
    f = make_morphism(line, line, lambda x: x * x, bound=lambda b: Interval(line, 0, b.bound**2), name="sq")
    mu = from_atoms(line, [(F(1, 3), 2), (F(-3, 2), -1)])
    exact = integrate_real(f, mu)
    for i in (2, 4, 8, 16):
        error = abs(simple_approximation(f, mu.support, i).integrate(mu) - exact)
        assert error < mu.norm() / 2**i


def test_measures_hash_and_compare_exactly():
    a = from_atoms(X, [("a", F(2, 4))])
    b = from_atoms(X, [("a", F(1, 2))])
    assert a == b and hash(a) == hash(b)
    assert a != from_atoms(FiniteLabeled(frozenset({"a"})), [("a", F(1, 2))])
