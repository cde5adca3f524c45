import random
from fractions import Fraction as F
from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from measmonad import (
    BornologyViolation,
    FiniteLabeled,
    IntegerLine,
    KindMismatch,
    MeasureSpace,
    RationalLine,
    RationalVector,
    characteristic_morphism,
    from_atoms,
    identity,
    integrate_real,
    is_bounded_member,
    make_morphism,
    make_space,
    point_space,
    product_space,
    projection,
)
from measmonad.laws import random_measure
from measmonad.spaces import Box, Interval, MeasureBall, WholeSet, check_morphism, constant_bound, to_fraction

ALL_KINDS = [
    FiniteLabeled(frozenset("abcdef")),
    IntegerLine(),
    RationalLine(),
    RationalVector(2),
    product_space([IntegerLine(), FiniteLabeled(frozenset("xy"))]),
    MeasureSpace(FiniteLabeled(frozenset("ab"))),
]


def test_make_space_kinds():
    S = make_space("finite", {"a", "b", "c"})
    assert isinstance(S.basis(1), WholeSet)
    assert S.basis(1).contains("c")
    assert make_space("integers").basis(3) == Interval(IntegerLine(), -3, 3)
    assert make_space("vector", 2).basis(5) == Box(RationalVector(2), 5)


@pytest.mark.parametrize("bad", [("finite", set()), ("vector", 0)])
def test_make_space_rejects_degenerate_parameters(bad):
    with pytest.raises(ValueError):
        make_space(*bad)


def test_bounded_membership():
    line = IntegerLine()
    assert is_bounded_member(Interval(line, -3, 3), 2)
    X = FiniteLabeled(frozenset("ab"))
    ball = MeasureBall(MeasureSpace(X), X.finite(["a"]), F(1))
    assert is_bounded_member(ball, from_atoms(X, [("a", 1)]))
    assert not is_bounded_member(ball, from_atoms(X, [("a", 2)]))
    assert not is_bounded_member(ball, from_atoms(X, [("b", F(1, 2))]))
    with pytest.raises(KindMismatch):
        is_bounded_member(Interval(line, -3, 3), F(1, 2))


def test_floats_never_become_rationals():
    with pytest.raises(KindMismatch):
        to_fraction(0.1)
    with pytest.raises(KindMismatch):
        to_fraction(True)
    assert to_fraction("-3/6") == F(-1, 2)


def test_identity_and_mod_two_are_valid_morphisms():
    line = IntegerLine()
    check_morphism(identity(line))
    bits = FiniteLabeled(frozenset({"0", "1"}))
    make_morphism(line, bits, lambda n: str(n % 2), constant_bound(WholeSet(bits)), name="mod2")


def test_square_is_rejected_with_the_first_bad_point():
    line = IntegerLine()
    with pytest.raises(BornologyViolation) as info:
        make_morphism(line, line, lambda n: n * n, lambda b: b, name="square")
    assert info.value.point == 2


def test_kind_incorrect_map_is_rejected():
    with pytest.raises(BornologyViolation):
        make_morphism(IntegerLine(), IntegerLine(), lambda n: F(n, 2), lambda b: b)


def test_product_of_two_lines_behaves_like_the_plane():
    Q1 = RationalVector(1)
    P = product_space([Q1, Q1])
    p = ((F(1, 2),), (F(-3),))
    assert P.contains(p)
    for i in (0, 1):
        check_morphism(projection(P, i))
        assert projection(P, i)(p) == p[i]


@given(st.lists(st.tuples(st.integers(-20, 20), st.integers(-20, 20)), min_size=1, max_size=6))
def test_product_bounded_iff_projections_bounded(points):
    P = product_space([IntegerLine(), IntegerLine()])
    cover = P.cover(points)
    assert all(cover.contains(p) for p in points)
    for i in (0, 1):
        image = projection(P, i).bound(cover)
        assert all(image.contains(p[i]) for p in points)
    # and the product of the two projected sets is a bounded set holding every point
    parts = [projection(P, i).bound(cover) for i in (0, 1)]
    assert all(parts[0].contains(x) and parts[1].contains(y) for x, y in points)


def test_characteristic_morphism():
    X = FiniteLabeled(frozenset("abc"))
    assert all(characteristic_morphism(X, [])(x) == 0 for x in "abc")
    assert characteristic_morphism(X, ["a"])("a") == 1
    check_morphism(characteristic_morphism(X, ["a", "b"]))


@pytest.mark.parametrize("case", range(50))
def test_indicator_integral_is_the_measure_of_the_set(case):
    rng = random.Random(case)
    X = FiniteLabeled(frozenset("abcd"))
    mu = random_measure(X, rng)
    for r in range(5):
        for E in combinations("abcd", r):
            assert integrate_real(characteristic_morphism(X, E), mu) == mu(E)


def test_point_space_has_one_point():
    assert point_space().labels == frozenset({"*"})


@pytest.mark.parametrize("space", ALL_KINDS, ids=repr)
def test_canonical_order_is_strict_and_total(space):
    rng = random.Random(7)
    pts = list({space.key(p): p for p in (space.random_point(rng) for _ in range(40))}.values())
    ordered = space.sorted(pts)
    keys = [space.key(p) for p in ordered]
    assert all(a < b for a, b in zip(keys, keys[1:]))
    assert space.sorted(reversed(ordered)) == ordered


@pytest.mark.parametrize("space", ALL_KINDS, ids=repr)
def test_basis_is_upward_directed(space):
    basis = space.sample_basis()
    rng = random.Random(3)
    for b1 in basis:
        for b2 in basis:
            joined = space.join(b1, b2)
            for _ in range(10):
                assert joined.contains(b1.random_point(rng))
                assert joined.contains(b2.random_point(rng))


@pytest.mark.parametrize("space", ALL_KINDS, ids=repr)
def test_cover_contains_its_points(space):
    rng = random.Random(11)
    pts = [space.random_point(rng) for _ in range(6)]
    cover = space.cover(pts)
    assert all(cover.contains(p) for p in pts)


def test_tables_are_coerced_to_codomain_points():
    from measmonad.spaces import tabulated

    f = tabulated(FiniteLabeled(frozenset("ab")), RationalVector(2), {"a": (1, 0), "b": ("1/2", 2)})
    assert f("b") == (F(1, 2), F(2))
    with pytest.raises(KindMismatch):
        tabulated(FiniteLabeled(frozenset("ab")), RationalVector(2), {"a": (1, 0, 0), "b": (0, 0)})
