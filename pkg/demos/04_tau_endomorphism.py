# %% [markdown]
# # The endomorphism tau for t = y - 1
#
# Since a t lies in t S for every a, there is a unique tau(a) with
# a t = t tau(a).  It is an algebra endomorphism that fixes pi.

# %%
import random

from onesided.algebra import SnAlgebra, expand_E
from onesided.coeff_ring import QQ
from onesided.division import check_t2_condition, tau
from onesided.sampling import random_element

S = SnAlgebra(1, QQ)
x, y = S.x(), S.y()
t = y - 1

for a in (x, y, x * y, x**2):
    print(f"tau({a}) = {tau(t, a)}")

# %%
rng = random.Random(0)
a, b = random_element(rng, S, 2), random_element(rng, S, 2)
print("a =", a)
print("b =", b)
print("tau(ab) == tau(a) tau(b):", tau(t, a * b, 10) == tau(t, a, 10) * tau(t, b, 10))

# %% [markdown]
# The commutator t a - a t lands in t^2 S.

# %%
rep = check_t2_condition(t, [x, x * x, x * y, expand_E(S, (0,), (0,))])
for case in rep["cases"]:
    print(f"a = {case['a']:>8}:  t a - a t = t^2 * ({case['quotient']})")
