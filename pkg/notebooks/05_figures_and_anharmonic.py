# %% [markdown]
# # Figure datasets and the anharmonic oscillator
#
# Datasets are plain columns; plotting needs matplotlib (optional extra
# `notebooks`). PNGs land next to this script in `figures/`.

# %%
import math
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from radialwkb import PotentialSpec, anharmonic_gamma_table, figure_dataset
from radialwkb.bs_solver import bs_energy_well, exact_well_energy
from radialwkb.report import gamma_zero_crossing

OUT = Path(__file__).resolve().parent / "figures"
OUT.mkdir(exist_ok=True)

# %% [markdown]
# Ground-state relative deviation against m. It vanishes at m = 2 and
# approaches the infinite-well value 1 - E_BS/E_exact as m grows.

# %%
fig, ax = plt.subplots()
for d in (2, 3):
    data = figure_dataset("rd_vs_m", d)
    ax.plot(data["m"], data["rd"], "o-", label=f"d={d}")
    limit = 1 - bs_energy_well((0, d)) / exact_well_energy((0, d))
    ax.axhline(limit, ls=":", color=ax.lines[-1].get_color())
    print(f"d={d}: R.D. at m=40 {data['rd'][-1]:.4f}, well limit {limit:.4f}")
ax.set(xlabel="m", ylabel="R.D.", xscale="log")
ax.legend()
fig.savefig(OUT / "rd_vs_m.png", dpi=120)

# %% [markdown]
# gamma against n_r for m = 3, 4, 6.

# %%
fig, axes = plt.subplots(1, 2, figsize=(9, 3.5), sharey=True)
for ax, d in zip(axes, (2, 3)):
    for m in (3, 4, 6):
        data = figure_dataset("gamma_vs_nr", d, potential=PotentialSpec.power(m))
        ax.plot(data["n_r"], data["gamma"], ".", label=f"m={m}")
    ax.set(title=f"d={d}", xlabel="n_r")
axes[0].set_ylabel("gamma")
axes[0].legend()
fig.savefig(OUT / "gamma_vs_nr.png", dpi=120)

# %% [markdown]
# Ground-state gamma against m, with Coulomb (m = -1), -r^(-1/2) and log r
# (m = 0) in front. At d = 6 gamma crosses zero a second time at large m;
# the two attractive points sit above 1/2 there.

# %%
fig, ax = plt.subplots()
for d in (2, 3, 6):
    data = figure_dataset("gamma_vs_m", d)
    ax.plot(data["m"], data["gamma"], "o-", label=f"d={d}")
    print(f"d={d}:", {float(m): round(float(g), 4) for m, g in zip(data["m"][:4], data["gamma"][:4])})
ax.set(xlabel="m", ylabel="gamma")
ax.legend()
fig.savefig(OUT / "gamma_vs_m.png", dpi=120)
print("second zero at d=6: m =", round(gamma_zero_crossing(6, 40.0, 50.0), 2))

# %% [markdown]
# r^2 + lambda r^4, ground state. The d = 1 row is the correction of the
# full-line rule (twice the radial one); lambda = inf is the pure quartic.

# %%
lams = (0.0, 0.1, 1.0, 10.0, 100.0, math.inf)
dims = (1, 2, 3, 6)
grid = anharmonic_gamma_table(lams, dims)
print("lambda " + "".join(f"{lam:>9}" for lam in lams))
for j, d in enumerate(dims):
    print(f"d={d:<5}" + "".join(f"{grid[i, j]:9.4f}" for i in range(len(lams))))
