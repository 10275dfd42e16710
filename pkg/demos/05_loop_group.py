"""The matrix g(M, t) over Laurent polynomials and the crystal it induces."""
# %%
import random

from geomcrystal import grassmannian as gr
from geomcrystal import loopgroup as lg

p = gr.random_point(5, 2, random.Random(5))
A = lg.g_matrix(p)
print(A)
print("structural properties:", lg.g_properties_check(p))
print("h g is scalar:", lg.h_g_check(p))

# %% [markdown]
# The crystal structure can be read off the unfolded matrix, and the
# decoration is the sum along the first nonunit subdiagonal.

# %%
gam, phis, epss = lg.induced_crystal(A)
print("weights agree:", gam == gr.gamma(p))
print("chi(g) = f:", lg.chi(A, 3) == gr.decoration(p))
