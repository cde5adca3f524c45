"""
The monad laws, checked case by case
====================================

Flattening a measure on measures is a weighted sum.  The unit and
associativity laws are then exact identities, and a broken flattening is
caught immediately.
"""

# %%
from measmonad import FiniteLabeled, IntegerLine, MeasureSpace, RationalVector, SignedMeasure
from measmonad import check_monad_laws, dirac, from_atoms, kappa

X = FiniteLabeled(frozenset("xy"))
mu1 = from_atoms(X, [("x", 1)])
mu2 = from_atoms(X, [("y", 3)])
M = from_atoms(MeasureSpace(X), [(mu1, 2), (mu2, -1)])
print("M        =", M)
print("kappa(M) =", kappa(M))
print("kappa(delta_mu1) == mu1:", kappa(dirac(MeasureSpace(X), mu1)) == mu1)

# %%
for carrier in (FiniteLabeled(frozenset("abcdef")), IntegerLine(), RationalVector(2)):
    report = check_monad_laws(carrier, seed=42, cases=200)
    print(report.summary().replace("\n", " | "), "on", carrier)


# %%
# Drop the last term of every flattening and the unit law breaks.
def lossy(M):
    return kappa(SignedMeasure(M.space, M.atoms[:-1]))


report = check_monad_laws(IntegerLine(), seed=42, cases=200, flatten=lossy)
witness = report.failures[0]
print("broken flattening:", len(report.failures), "failing cases; first at", witness.seed)
print("  lhs =", witness.lhs)
print("  rhs =", witness.rhs)
