# %% [markdown]
# # Exact S-state energies on a Lagrange-Laguerre mesh
#
# The radial equation  -psi'' - (d-1)/r psi' + V psi = E psi  is discretised
# on scaled Laguerre zeros. The kinetic matrix is exact in the mesh's own
# quadrature, so harmonic and Coulomb levels come out at machine precision.

# %%
import numpy as np
from scipy.special import ai_zeros

from radialwkb import MeshConfig, PotentialSpec, solve_radial, validate_solver
from radialwkb.mesh_solver import count_nodes

# %%
for d in (1, 2, 3, 6):
    rep = validate_solver(d)
    print(d, {k: (f"{v:.1e}" if isinstance(v, float) else v) for k, v in rep.items()})

# %% [markdown]
# The linear potential at d = 3 is the half-line Airy problem, so the levels
# are minus the zeros of Ai.

# %%
res = solve_radial(PotentialSpec.power(1), 3, 20)
a = ai_zeros(21)[0]
print("max |E + a_k| =", np.abs(res.energies + a).max())
print("trusted states:", res.n_converged, " mesh:", res.config_used)

# %% [markdown]
# Doubling the mesh at fixed outer reach shrinks the refinement residual
# by orders of magnitude until it meets the roundoff floor near 1e-12.

# %%
for n in (50, 100, 200):
    r = solve_radial(PotentialSpec.power(1), 3, 20, MeshConfig(n_points=n), rtol=1e-3, max_points=n)
    print(f"N={n:4d}  residual={r.residual_estimate:.1e}")

# %% [markdown]
# Eigenvector n_r changes sign n_r times.

# %%
res = solve_radial(PotentialSpec.log(), 3, 6)
print([count_nodes(res, k) for k in range(7)])

# %% [markdown]
# Steep walls: the mesh reaches at least 1.5 turning radii, which is what
# m = 45 needs.

# %%
print(solve_radial(PotentialSpec.power(45), 6, 3).energies)
