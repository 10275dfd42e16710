"""Tropicalizing the geometric maps recovers the combinatorial crystal."""
# %% [markdown]
# Each map is stored as a subtraction-free expression DAG in the chart
# variables, so it can be evaluated over the rationals or over (min, +).

# %%
from geomcrystal import tableaux as tb
from geomcrystal import tropical as tp

b = tb.KRectangle(4, 2, (2, 5, 1, 3), 6)
PR = tp.build_symbolic("PR", 4, 2)
print("tropical PR:", tp.trop_apply(PR, b).to_json())
print("promotion  :", tb.KRectangle.from_tableau(tb.promote(b.to_tableau()), 2).to_json())

# %% [markdown]
# The tropical decoration is nonnegative exactly on genuine rectangles.

# %%
f = tp.build_symbolic("f", 4, 2)
print("trop f on a rectangle:", tp.trop_apply(f, b))
print("trop f off the cone  :", tp.trop_apply(f, tb.KRectangle(4, 2, (3, 2, 1, 3), 6)))

# %% [markdown]
# Run every theorem check for one (n, k).

# %%
for rec in tp.check_trop_theorems(4, 2, L_max=2):
    print(rec["check"], rec["status"])
