# %% [markdown]
# # Regular elements and one-sided division
#
# Kernels of multiplication maps are computed exactly on truncation boxes:
# the domain is the span of monomials with exponents <= d and the codomain
# is large enough to hold every product, so any kernel vector found is a
# genuine annihilator.

# %%
from onesided.algebra import SnAlgebra, expand_E
from onesided.coeff_ring import QQ
from onesided.division import divide, regularity_report
from onesided.linalg import kernel

S = SnAlgebra(1, QQ)
x, y = S.x(), S.y()

rep = regularity_report(x - 1, 4)
print("x - 1 regular on boxes 0..4:", rep["passed"])

# %% [markdown]
# Elements that are not regular do have annihilators: y E_00 = 0 and E_00 x = 0.

# %%
e00 = expand_E(S, (0,), (0,))
print("y * E_00 =", y * e00)
print("E_00 * x =", e00 * x)
print("kernel of g -> E_00 g on box 1:", [str(g) for g in kernel(e00, "left", 1)])

# %% [markdown]
# Division: find g with g (x-1) = f, or with (y-1) g = f.

# %%
f = (x - 1) * x**2
res = divide(f, x - 1, "t-on-right")
print(res.status, res.quotient, "check:", res.quotient * (x - 1) == f)

res = divide(x**2 * (y - 1), y - 1, "t-on-left")
print(res.status, res.quotient)

# %% [markdown]
# E_00 lies in S(x-1) (it equals -E_00 (x-1)) but not in (x-1)S.

# %%
print(divide(e00, x - 1, "t-on-right"))
print(divide(e00, x - 1, "t-on-left"))
