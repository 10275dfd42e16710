"""The geometric crystal on Gr(k, n) x C^* with exact rational arithmetic."""
# %% [markdown]
# A point is the column span of an n x k matrix together with a nonzero t.
# Weight, phi_i, eps_i and the decoration f are ratios of Pluecker coordinates.

# %%
import random
from fractions import Fraction

from geomcrystal import grassmannian as gr

rng = random.Random(1)
p = gr.random_point(5, 2, rng)
d = gr.geom_maps(p)
print("gamma =", [str(g) for g in d.gamma])
print("phi   =", [str(x) for x in d.phi])
print("f     =", d.f)

# %% [markdown]
# e_i^c acts by a unipotent generator; phi_i scales by 1/c, eps_i by c and
# the decoration changes by the expected correction terms.

# %%
c = Fraction(3)
q = gr.apply_ei(p, 1, c)
print("phi_1 scales by 1/c:", gr.phi(q, 1) == d.phi[1] / c)
print("decoration law:", gr.decoration(q) == d.f + (c - 1) / d.phi[1] + (1 / c - 1) / d.eps[1])

# %% [markdown]
# The twisted cyclic shift PR conjugates e_i to e_{i+1}.

# %%
lhs = gr.cyclic_shift(gr.apply_ei(p, 2, c))
rhs = gr.apply_ei(gr.cyclic_shift(p), 3, c)
print("PR e_2 = e_3 PR:", lhs.same(rhs))
