# %% [markdown]
# # Actions and Bohr-Sommerfeld energies
#
# The semiclassical rule for a d-dimensional S-state reads
#
#     int_0^r0 sqrt(E - V(r)) dr = pi (n_r + d/4)
#
# with r0 the turning point. For V = r^m the integral is a Beta function, so
# the rule can be solved for E in closed form. Everything else goes through a
# quadrature that absorbs the square-root edge at r0.

# %%
import math

import numpy as np

from radialwkb import PotentialSpec, action, bs_energy_general, bs_energy_power
from radialwkb.action import action_closed_power, action_numeric
from radialwkb.bs_solver import bs_energy_coulomb, bs_energy_log, large_d_coefficients
from radialwkb.specfun import beta

# %% [markdown]
# The two Beta forms of the power-law action multiply to pi for every m.
# This is the identity that pins the closed forms down.

# %%
for m in (0.5, 1, 2, 3, 4, 6, 10):
    M = 1 / m + 0.5
    prod = (1 / m) * beta(1 / m, 1.5) * 2 * M * beta(0.5, M)
    print(f"m={m:<4}  product/pi - 1 = {prod / math.pi - 1:+.1e}")

# %% [markdown]
# Numeric action against the closed form. The left piece uses t = tau^2
# before tanh-sinh, which also copes with the r^(-1/2) and log behaviour of
# the attractive and logarithmic cases.

# %%
for V, E in [(PotentialSpec.power(4), 7.0), (PotentialSpec.coulomb(), -0.1),
             (PotentialSpec.power(-0.5), -0.3), (PotentialSpec.log(), 2.0)]:
    print(f"{str(V):16s} E={E:5}  numeric={action_numeric(V, E):.15f}  closed={action(V, E):.15f}")

# %% [markdown]
# Harmonic energies come out exactly as 4 n_r + d.

# %%
print([bs_energy_power(2, (n, 3)) for n in range(6)])

# %% [markdown]
# Ground states across potentials at d = 3, and the general root finder on a
# potential with no closed form.

# %%
q = (0, 3)
print("linear   ", bs_energy_power(1, q))
print("quartic  ", bs_energy_power(4, q))
print("coulomb  ", bs_energy_coulomb(q))
print("log      ", bs_energy_log(q))
print("r^2+r^4  ", bs_energy_general(PotentialSpec.anharmonic(1.0), q))

# %% [markdown]
# Large-d behaviour: E(n_r=0) ~ c d^(1/M). The semiclassical coefficient
# differs from the exact one except at m = 2.

# %%
for m in (1, 2, 3, 4, 6, 10):
    c, c_bs = large_d_coefficients(m)
    print(f"m={m:<3} c={c:.6f}  c_BS={c_bs:.6f}")

# %%
n = np.arange(0, 41, 10)
print("E_BS(r^6, d=2):", np.round([bs_energy_power(6, (k, 2)) for k in n], 4))
print("action at those energies / pi - d/4:",
      np.round([action_closed_power(6, bs_energy_power(6, (k, 2))) / math.pi - 0.5 for k in n], 12))
