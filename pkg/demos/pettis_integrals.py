"""
Pettis integrals in Q^n
=======================

The coordinatewise integral is checked against arbitrary linear functionals,
and the four routes to an integral (direct, through Jordan parts, through a
subspace inclusion, through the identity) are compared.
"""

# %%
import random
from fractions import Fraction

from measmonad import FiniteLabeled, Functional, RationalVector, from_atoms, pettis_integral, verify_pettis
from measmonad import check_pettis_algebra, enough_pettis_equivalence_check
from measmonad.pettis import coordinate_functionals, separates_points
from measmonad.spaces import tabulated


def show(v):
    return "(" + ", ".join(str(c) for c in v) + ")"


T = FiniteLabeled(frozenset({"1", "2"}))
f = tabulated(T, RationalVector(2), {"1": (1, 0), "2": (0, 2)})
mu = from_atoms(T, [("1", Fraction(1, 2)), ("2", Fraction(1, 2))])
x = pettis_integral(2, f, mu)
print("integral =", show(x))

# %%
rng = random.Random(3)
family = coordinate_functionals(2) + [Functional((rng.randint(-5, 5), rng.randint(-5, 5))) for _ in range(6)]
print("family separates points:", separates_points(family, 2))
print(verify_pettis(x, f, mu, family).summary())

# %%
wrong = (x[0], x[1] + 1)
print("perturbed vector passes:", verify_pettis(wrong, f, mu, family).passed)

# %%
print(enough_pettis_equivalence_check(3, seed=1, cases=200).summary())
print(check_pettis_algebra(2, seed=1, cases=200).summary())
