"""Schuetzenberger involution and duality, geometric and tropical."""
# %%
import random

from geomcrystal import grassmannian as gr
from geomcrystal import loopgroup as lg
from geomcrystal import tableaux as tb
from geomcrystal import tropical as tp

p = gr.random_point(5, 2, random.Random(6))
S, D = lg.schuetzenberger_S(p), lg.duality_D(p)
print("S is an involution:", lg.schuetzenberger_S(S).same(p))
print("D is an involution:", lg.duality_D(D).same(p))
print("phi_i(S p) = eps_{-i}(p):", all(gr.phi(S, i) == gr.eps(p, -i % 5) for i in range(5)))

# %% [markdown]
# Tropically S rotates a rectangle by 180 degrees and D complements columns.

# %%
b = tb.KRectangle(5, 2, (1, 2, 3, 1, 2, 3), 4)
assert b.is_valid()
print("trop S = rot :", tp.trop_apply(tp.build_symbolic("S", 5, 2), b) == tb.rot(b))
print("trop D = refl:", tp.trop_apply(tp.build_symbolic("D", 5, 2), b) == tb.refl(b))
