# %% [markdown]
# # Command line
#
# The same runs from a shell:
#
#     radialwkb table --potential power:m=4 --dim 3 --nr 0..20
#     radialwkb figure gamma_vs_nr --potential power:m=6 --dim 2 --nr 0..40 --out sextic.csv
#     radialwkb anharmonic --format json
#     radialwkb fit --potential log --dim 2 --nr 0..40 --fit-order 2
#     radialwkb validate --dim 6
#
# Exit status: 0 ok, 1 domain error, 2 no convergence, 64 usage error.

# %%
from radialwkb.cli import run

# %%
run(["table", "--potential", "power:m=4", "--dim", "3", "--nr", "0..5"])

# %%
run(["fit", "--potential", "log", "--dim", "2", "--fit-order", "2", "--format", "json"])

# %%
print("exit", run(["validate", "--dim", "6"]))

# %%
print("exit", run(["table", "--potential", "coulomb", "--dim", "1"]))
