"""Finitely supported signed measures with exact rational weights."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import KindMismatch, SpaceMismatch, SupportViolation
from .spaces import (
    BoundedSet,
    FiniteSet,
    Morphism,
    Point,
    Space,
    Subspace,
    inclusion,
    to_fraction,
)


class Combination:
    """A finitely supported rational-valued function on the points of a space.

    Stored canonically: atoms sorted by the space's point order, no repeated
    points, no zero weights.  Two combinations are equal iff their canonical
    forms are.  Instances are immutable and hashable, so they can themselves
    serve as points.
    """

    combination_kind = ""
    __slots__ = ("space", "atoms", "_key", "_hash")

    def __init__(self, space: Space, atoms: tuple):
        # trusted constructor: atoms must already be canonical
        self.space = space
        self.atoms = atoms
        self._key = None
        self._hash = None

    @classmethod
    def from_atoms(cls, space: Space, pairs: Iterable[tuple[Point, object]]):
        """Merge repeated points, drop zero weights and sort canonically."""
        acc: dict = {}
        for p, w in pairs:
            p = space.coerce(p)
            acc[p] = acc.get(p, Fraction(0)) + to_fraction(w)
        return cls._from_dict(space, acc)

    @classmethod
    def _from_dict(cls, space, acc: dict):
        atoms = tuple((p, acc[p]) for p in sorted(acc, key=space.key) if acc[p] != 0)
        return cls(space, atoms)

    @classmethod
    def zero(cls, space: Space):
        return cls(space, ())

    # -- inspection -------------------------------------------------------

    @property
    def support(self) -> frozenset:
        return frozenset(p for p, _ in self.atoms)

    def weight(self, p: Point) -> Fraction:
        for q, w in self.atoms:
            if q == p:
                return w
        return Fraction(0)

    def norm(self) -> Fraction:
        """Sum of absolute weights."""
        return sum((abs(w) for _, w in self.atoms), Fraction(0))

    def is_zero(self) -> bool:
        return not self.atoms

    @property
    def sort_key(self):
        if self._key is None:
            key = self.space.key
            self._key = tuple((key(p), w) for p, w in self.atoms)
        return self._key

    def __iter__(self):
        return iter(self.atoms)

    def __len__(self):
        return len(self.atoms)

    # -- linear structure ---------------------------------------------------

    def _check_same(self, other):
        if type(other) is not type(self):
            return NotImplemented
        if other.space != self.space:
            raise SpaceMismatch(f"{self.space!r} vs {other.space!r}")
        return None

    def __add__(self, other):
        bad = self._check_same(other)
        if bad is NotImplemented:
            return bad
        acc = dict(self.atoms)
        for p, w in other.atoms:
            acc[p] = acc.get(p, Fraction(0)) + w
        return self._from_dict(self.space, acc)

    def __sub__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self + other.scale(-1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, a) -> "Combination":
        a = to_fraction(a)
        if a == 0:
            return type(self).zero(self.space)
        return type(self)(self.space, tuple((p, a * w) for p, w in self.atoms))

    def __rmul__(self, a):
        if isinstance(a, (int, Fraction)) and not isinstance(a, bool):
            return self.scale(a)
        return NotImplemented

    # -- identity -------------------------------------------------------------

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self.space == other.space and self.atoms == other.atoms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((type(self).__name__, self.space, self.atoms))
        return self._hash

    def __repr__(self):
        inner = ", ".join(f"{p!r}: {w}" for p, w in self.atoms)
        return f"{type(self).__name__}({{{inner}}})"


class SignedMeasure(Combination):
    """A finite signed measure on ``space`` with finitely many atoms.

    >>> from measmonad.spaces import make_space
    >>> X = make_space("finite", {"a", "b"})
    >>> mu = SignedMeasure.from_atoms(X, [("b", "1/3"), ("a", "2/3")])
    >>> mu.atoms
    (('a', Fraction(2, 3)), ('b', Fraction(1, 3)))
    """

    combination_kind = "measure"
    __slots__ = ()

    def __call__(self, E: Iterable[Point]) -> Fraction:
        return evaluate(self, E)


def from_atoms(space: Space, pairs: Iterable[tuple[Point, object]]) -> SignedMeasure:
    return SignedMeasure.from_atoms(space, pairs)


def zero_measure(space: Space) -> SignedMeasure:
    return SignedMeasure.zero(space)


def add(mu: SignedMeasure, nu: SignedMeasure) -> SignedMeasure:
    if mu.space != nu.space:
        raise SpaceMismatch(f"cannot add measures on {mu.space!r} and {nu.space!r}")
    return mu + nu


def scale(a, mu: SignedMeasure) -> SignedMeasure:
    return mu.scale(a)


def evaluate(mu: SignedMeasure, E: Iterable[Point]) -> Fraction:
    """``mu(E)`` for a finite set ``E``."""
    E = E.points if isinstance(E, FiniteSet) else frozenset(E)
    return sum((w for p, w in mu.atoms if p in E), Fraction(0))


@dataclass(frozen=True)
class JordanDecomposition:
    positive_part: SignedMeasure
    negative_part: SignedMeasure
    hahn_positive_set: frozenset
    hahn_negative_set: frozenset

    @property
    def variation(self) -> SignedMeasure:
        """The total variation measure ``|mu|``."""
        return self.positive_part + self.negative_part


def jordan_hahn(mu: SignedMeasure) -> JordanDecomposition:
    """Split ``mu`` into mutually singular nonnegative parts.

    The Hahn sets are the minimal choice: atoms of positive and of negative
    weight respectively.
    """
    pos = tuple((p, w) for p, w in mu.atoms if w > 0)
    neg = tuple((p, -w) for p, w in mu.atoms if w < 0)
    return JordanDecomposition(
        SignedMeasure(mu.space, pos),
        SignedMeasure(mu.space, neg),
        frozenset(p for p, _ in pos),
        frozenset(p for p, _ in neg),
    )


def total_variation(mu: SignedMeasure) -> Fraction:
    return mu.norm()


def pushforward(f: Morphism, mu: SignedMeasure) -> SignedMeasure:
    """Direct image of ``mu`` along ``f``: ``(f_* mu)(F) = mu(f^-1(F))``."""
    if mu.space != f.domain:
        raise SpaceMismatch(f"{f.name} expects a measure on {f.domain!r}, got one on {mu.space!r}")
    acc: dict = {}
    for p, w in mu.atoms:
        y = f.map(p)
        acc[y] = acc.get(y, Fraction(0)) + w
    for y in acc:
        if not f.codomain.contains(y):
            raise KindMismatch(f"{f.name} produced {y!r}, not a point of {f.codomain!r}")
    return SignedMeasure._from_dict(f.codomain, acc)


def is_supported_by(mu: SignedMeasure, A: BoundedSet) -> bool:
    return all(A.contains(p) for p, _ in mu.atoms)


def restrict(mu: SignedMeasure, A: BoundedSet) -> SignedMeasure:
    """The measure ``mu_A`` on the subspace ``A``; requires ``mu`` supported by ``A``."""
    if A.space != mu.space:
        raise SpaceMismatch(f"{A!r} is not a subset of {mu.space!r}")
    for p, _ in mu.atoms:
        if not A.contains(p):
            raise SupportViolation(p, A)
    return SignedMeasure(Subspace(mu.space, A), mu.atoms)


def extend(mu_A: SignedMeasure) -> SignedMeasure:
    """Inverse of :func:`restrict`: direct image along the inclusion ``A -> X``."""
    if not isinstance(mu_A.space, Subspace):
        raise KindMismatch(f"{mu_A.space!r} is not a subspace")
    return pushforward(inclusion(mu_A.space), mu_A)


def integrate_real(f: Morphism, mu: SignedMeasure) -> Fraction:
    """``sum f(x) mu({x})`` for a rational-valued morphism ``f``."""
    if mu.space != f.domain:
        raise SpaceMismatch(f"{f.name} expects a measure on {f.domain!r}, got one on {mu.space!r}")
    total = Fraction(0)
    for p, w in mu.atoms:
        total += to_fraction(f.map(p)) * w
    return total


# ---------------------------------------------------------------------------
# simple-function approximation


@dataclass(frozen=True)
class SimpleFunction:
    """A finite sum of levels times indicators of pairwise disjoint finite sets."""

    space: Space
    pieces: tuple  # ((frozenset, Fraction), ...)

    def __call__(self, x: Point) -> Fraction:
        for E, level in self.pieces:
            if x in E:
                return level
        return Fraction(0)

    def integrate(self, mu: SignedMeasure) -> Fraction:
        return sum((level * evaluate(mu, E) for E, level in self.pieces), Fraction(0))


def _dyadic_below(v: Fraction, i: int) -> Fraction:
    """Largest ``k / 2**i`` not exceeding ``v``, capped at ``i`` (for ``v >= 0``)."""
    scale = 2**i
    level = Fraction((v * scale).numerator // (v * scale).denominator, scale)
    return min(level, Fraction(i))


def simple_approximation(f: Morphism, S: Iterable[Point], i: int) -> SimpleFunction:
    """The ``i``-th dyadic signed simple approximant of ``f`` on the finite set ``S``.

    ``theta_i = phi_i - psi_i`` with ``phi_i``, ``psi_i`` the standard dyadic
    approximations of ``f+`` and ``f-`` from below.
    """
    if i < 0:
        raise ValueError("approximation index must be nonnegative")
    levels: dict = {}
    for x in S:
        v = to_fraction(f.map(x))
        theta = _dyadic_below(v, i) if v >= 0 else -_dyadic_below(-v, i)
        if theta != 0:
            levels.setdefault(theta, set()).add(x)
    pieces = tuple((frozenset(E), level) for level, E in sorted(levels.items()))
    return SimpleFunction(f.domain, pieces)

