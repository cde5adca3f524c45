"""
Algebras, integrals and barycentres
===================================

A structure map c on a carrier turns every measure into a point.  Integrals,
vector addition and scaling are all read off from c.
"""

# %%
from fractions import Fraction

from measmonad import RationalLine, RationalVector, barycenter, derived_add, derived_smul, from_atoms
from measmonad import check_algebra_laws, check_homomorphism, integrate, real_algebra, vector_algebra
from measmonad.laws import arity_space
from measmonad.spaces import Interval, make_morphism, tabulated


def show(v):
    return "(" + ", ".join(str(c) for c in v) + ")"


plane = vector_algebra(2)
corners = [(0, 0), (1, 0), (0, 1), (1, 1)]
uniform = from_atoms(RationalVector(2), [(p, Fraction(1, 4)) for p in corners])
print("centre of the square corners:", show(barycenter(plane, uniform)))
pair = from_atoms(RationalVector(2), [((0, 0), "1/4"), ((4, 0), "3/4")])
print("weighted pair:", show(barycenter(plane, pair)))

# %%
# Vector operations recovered from c alone
print("(1,0) + (0,2) =", show(derived_add(plane, (1, 0), (0, 2))))
print("3 * (1/2, 1)  =", show(derived_smul(plane, 3, (Fraction(1, 2), 1))))

# %%
# Integrating a vector-valued map: c(Mf(mu))
T = arity_space()
f = tabulated(T, RationalVector(2), {"t0": (1, 0), "t1": (0, 1), "t2": (2, 2), "t3": (-1, 5)})
mu = from_atoms(T, [("t0", 2), ("t2", Fraction(-1, 2)), ("t3", 1)])
print("integral of f dmu =", show(integrate(plane, f, mu)))

# %%
print(check_algebra_laws(vector_algebra(3), seed=7, cases=300).summary())

# %%
# Squaring is not a homomorphism of the real algebra: (d1 + d-1)/2 averages to 0, squares to 1.
line = RationalLine()
square = make_morphism(line, line, lambda x: x * x, lambda b: Interval(line, 0, b.bound**2), name="sq")
report = check_homomorphism(square, real_algebra(), real_algebra(), seed=0, cases=50)
print("squaring passes:", report.passed, "| failing cases:", len(report.failures))
