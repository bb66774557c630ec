# %% [markdown]
# # Matrix units
#
# E_ab = x^a y^b - x^(a+1) y^(b+1) behaves like an infinite matrix unit:
# E_ab E_cd = delta(b, c) E_ad.  They span an ideal that is killed by the
# Laurent map.

# %%
from onesided.algebra import SnAlgebra, expand_E, e_coordinates
from onesided.coeff_ring import QQ

S = SnAlgebra(1, QQ)


def E(a, b):
    return expand_E(S, (a,), (b,))


print("E_00     =", E(0, 0))
print("E_01 E_12 =", E(0, 1) * E(1, 2))
print("E_01 E_22 =", E(0, 1) * E(2, 2))
print("E_00^2 == E_00:", E(0, 0) ** 2 == E(0, 0))

# %% [markdown]
# A small table of products, printed as the index of the result or 0.

# %%
for a in range(3):
    row = []
    for b in range(3):
        p = E(a, 1) * E(1, b)
        row.append(f"E_{a}{b}" if p == E(a, b) else str(p))
    print("  ".join(row))

# %% [markdown]
# Elements of the ideal can be read back in E-coordinates.

# %%
f = 2 * E(0, 1) - E(3, 0)
print(f, "->", e_coordinates(f))
print("Laurent image:", f.laurent_image())
