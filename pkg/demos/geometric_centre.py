"""
Geometric centre of a region
============================

Put equal mass on the grid centres inside a region and take the barycentre.
The square is exact at every resolution; the triangle approaches (1/3, 1/3).
"""

# %%
import time
from fractions import Fraction

from measmonad import vector_algebra
from measmonad.cli import grid_uniform
from measmonad.cli.grid import triangle


def show(v):
    return "(" + ", ".join(str(c) for c in v) + ")"


c = vector_algebra(2)
for k in (1, 4, 64):
    print(f"square, k={k:<3}", show(c(grid_uniform("unit-square", k))))

# %%
T = triangle((0, 0), (1, 0), (0, 1))
for k in (64, 128, 256):
    start = time.perf_counter()
    x = c(grid_uniform(T, k))
    gap = max(abs(xi - Fraction(1, 3)) for xi in x)
    print(f"triangle, k={k:<3} centre {show(x)}  gap {gap} ({float(gap):.5f})  {time.perf_counter() - start:.2f}s")
