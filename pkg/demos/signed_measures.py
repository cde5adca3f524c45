"""
Signed measures with exact weights
==================================

Build a few finitely supported measures, split one into its positive and
negative parts, and push it forward along a non-injective map.
"""

# %%
from fractions import Fraction

from measmonad import FiniteLabeled, IntegerLine, from_atoms, jordan_hahn, pushforward, restrict, extend
from measmonad.spaces import Interval, make_morphism

X = FiniteLabeled(frozenset("abcd"))
mu = from_atoms(X, [("a", 2), ("b", -3), ("c", Fraction(1, 2)), ("a", -1)])
print("mu            =", mu)  # the two atoms at a have merged
print("mu({a, c})    =", mu({"a", "c"}))
print("||mu||        =", mu.norm())

# %%
# Jordan parts and the Hahn split of the support
jd = jordan_hahn(mu)
print("mu+           =", jd.positive_part)
print("mu-           =", jd.negative_part)
print("Hahn sets     =", sorted(jd.hahn_positive_set), sorted(jd.hahn_negative_set))
assert jd.positive_part - jd.negative_part == mu

# %%
# Direct images can only shrink the total variation: n -> n^2 folds 1 and -1 together.
Z = IntegerLine()
square = make_morphism(Z, Z, lambda n: n * n, lambda b: Interval(Z, 0, b.bound**2), name="square")
nu = from_atoms(Z, [(1, 1), (-1, -1), (3, Fraction(2, 3))])
image = pushforward(square, nu)
print("nu            =", nu, " ||nu|| =", nu.norm())
print("square_* nu   =", image, " ||.|| =", image.norm())

# %%
# Restricting to a set that carries the measure keeps the norm; extending undoes it.
A = X.finite(["a", "b", "c"])
mu_A = restrict(mu, A)
print("on", mu_A.space, "norm", mu_A.norm(), "round trip ok:", extend(mu_A) == mu)
