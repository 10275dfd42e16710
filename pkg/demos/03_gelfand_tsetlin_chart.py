"""Rational rectangles parametrize the Grassmannian: matrices, networks and J-tableaux."""
# %%
import random

from geomcrystal import parametrization as pm

rng = random.Random(3)
R = pm.RationalRectangle.random(5, 3, rng)  # a rational 3-rectangle
p = pm.theta(R)  # a point of Gr(2, 5)
print("theta(R) spanned by the columns of\n", [[str(x) for x in row] for row in p.M.matrix])
print("inverse recovers R:", pm.theta_inverse(p) == R)

# %% [markdown]
# The same matrix is the path matrix of a planar network, and every
# Pluecker coordinate is a positive sum over J-tableaux.

# %%
N = pm.network_for(R)
print("network path matrix matches:", N.path_matrix() == [list(r[:2]) for r in pm.phi_matrix(R)])
print("J-tableaux for J={4,5,7} with n=8:", [dict(T) for T in pm.jtableaux(8, 3, (4, 5, 7))])
print("P_{2,4} via J-tableaux:", pm.plucker_via_jtableaux(R, [2, 4]) == p.P([2, 4]))
print(pm.to_dot(pm.grassmann_network(4, 2), name="N_2"))
