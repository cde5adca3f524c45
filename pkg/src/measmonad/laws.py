"""Law reports and the seeded instance generators shared by the law suites.

Every suite derives one ``random.Random`` per case from the master seed, so a
failing case can be replayed from ``(seed, law, case)`` alone.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable

from .spaces import (
    FiniteLabeled,
    MeasureSpace,
    Space,
    random_rational,
    tabulated,
)

MAX_ATOMS = 4


@dataclass(frozen=True)
class LawFailure:
    law: str
    seed: str
    inputs: dict
    lhs: Any
    rhs: Any

    def to_dict(self) -> dict:
        return {
            "law": self.law,
            "seed": self.seed,
            "inputs": {k: repr(v) for k, v in self.inputs.items()},
            "lhs": repr(self.lhs),
            "rhs": repr(self.rhs),
        }


@dataclass
class LawReport:
    """Outcome of a law suite; failures are data, never exceptions."""

    suite: str
    seed: int | None = None
    checks: dict = field(default_factory=dict)  # law id -> number of cases run
    failures: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def __bool__(self):
        return self.passed

    def check(self, law: str, case_seed: str, lhs, rhs, **inputs) -> bool:
        """Record one exact comparison ``lhs == rhs``."""
        self.checks[law] = self.checks.get(law, 0) + 1
        if lhs == rhs:
            return True
        self.failures.append(LawFailure(law, case_seed, inputs, lhs, rhs))
        return False

    def require(self, law: str, case_seed: str, ok: bool, **inputs) -> bool:
        """Record one predicate check."""
        return self.check(law, case_seed, bool(ok), True, **inputs)

    def merge(self, other: "LawReport") -> "LawReport":
        for law, n in other.checks.items():
            self.checks[law] = self.checks.get(law, 0) + n
        self.failures.extend(other.failures)
        self.notes.extend(other.notes)
        return self

    def failures_for(self, law: str) -> list:
        return [f for f in self.failures if f.law == law]

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "seed": self.seed,
            "passed": self.passed,
            "checks": dict(self.checks),
            "failures": [f.to_dict() for f in self.failures],
            "notes": list(self.notes),
        }

    def summary(self) -> str:
        lines = []
        for law, n in self.checks.items():
            bad = len(self.failures_for(law))
            status = "PASS" if bad == 0 else "FAIL"
            lines.append(f"{status} {self.suite}:{law} {n - bad}/{n}")
        for note in self.notes:
            lines.append(f"NOTE {self.suite}: {note}")
        return "\n".join(lines)


def case_rng(seed: int, law: str, case: int) -> tuple[str, random.Random]:
    tag = f"{seed}/{law}/{case}"
    return tag, random.Random(tag)


# ---------------------------------------------------------------------------
# generators


def random_weight(rng: random.Random) -> Fraction:
    """A nonzero-or-zero rational ``p/q`` with ``|p| <= 8``, ``1 <= q <= 8``."""
    return random_rational(rng)


def random_combination(space, rng: random.Random, point: Callable | None = None, atoms: int | None = None):
    """A random element of a combination space (``MX`` or ``LX``).

    ``point`` draws base points (defaults to the base space's generator).
    """
    from .monad import FormalLinComb
    from .signed_measure import SignedMeasure

    cls = SignedMeasure if space.element_kind == "measure" else FormalLinComb
    draw = point or space.base.random_point
    n = rng.randint(0, MAX_ATOMS) if atoms is None else atoms
    return cls.from_atoms(space.base, [(draw(rng), random_weight(rng)) for _ in range(n)])


def random_measure(X: Space, rng: random.Random, atoms: int | None = None):
    return random_combination(MeasureSpace(X), rng, atoms=atoms)


def random_formal(X: Space, rng: random.Random, atoms: int | None = None):
    from .spaces import FormalSpace

    return random_combination(FormalSpace(X), rng, atoms=atoms)


def random_probability(X: Space, rng: random.Random, point: Callable | None = None):
    """A probability measure with between one and four atoms."""
    from .signed_measure import SignedMeasure

    draw = point or X.random_point
    n = rng.randint(1, MAX_ATOMS)
    raw = [(draw(rng), Fraction(rng.randint(1, 8))) for _ in range(n)]
    total = sum(w for _, w in raw)
    return SignedMeasure.from_atoms(X, [(p, w / total) for p, w in raw])


def arity_space(size: int = 4) -> FiniteLabeled:
    """A small discrete index space ``{t0, ..., t(size-1)}``."""
    return FiniteLabeled(frozenset(f"t{i}" for i in range(size)))


def random_function(T: FiniteLabeled, Y: Space, rng: random.Random, name="f"):
    """A random morphism ``T -> Y`` out of a finite space, as a value table."""
    table = {t: Y.random_point(rng) for t in sorted(T.labels)}
    return tabulated(T, Y, table, name=name)
