"""Crystal operators, Bender-Knuth moves and promotion on tableaux."""
# %% [markdown]
# A semistandard tableau is written one row per line.  The crystal
# operators e_i and f_i act through the bracketing rule on the reading word.

# %%
from geomcrystal import tableaux as tb

T = tb.Tableau.parse("1,1,1,2,2,2,3,3,3\n2,3,3,3", n=3)
print(T, "\n")
eps, phi = tb.crystal_stats(T, 2)
print("eps_2 =", eps, " phi_2 =", phi)
print("e_2 T =\n" + str(tb.crystal_op(T, 2, "e")))
print("f_2 T =\n" + str(tb.crystal_op(T, 2, "f")))

# %% [markdown]
# Promotion is the composite of Bender-Knuth involutions.  On rectangular
# tableaux it has order n, and evacuation equals rotation by 180 degrees.

# %%
U = tb.Tableau.parse("1,1,2,2,2,3\n2,3,3,4,4,4", n=4)
orbit = [U]
for _ in range(4):
    orbit.append(tb.promote(orbit[-1]))
print("promotion orbit returns after n steps:", orbit[-1] == U)
print("pr(U) =\n" + str(orbit[1]))
print("evacuation equals rotation:", tb.evacuate(U) == tb.rotate_tableau(U))

# %% [markdown]
# Gelfand-Tsetlin patterns encode the same data; the Bender-Knuth move is
# piecewise linear on them.

# %%
A = tb.gt_from_tableau(U)
print("pattern rows:", A.rows)
print("BK_2 piecewise-linear formula agrees:",
      tb.gt_from_tableau(tb.bender_knuth(U, 2)) == tb.bk_piecewise_linear(A, 2))
