# %% [markdown]
# # The sequence 0 -> S_1 -(x-1)-> S_1 -pi-> A -> 0
#
# Right multiplication by x - 1 is injective, and its image is the kernel of
# the augmentation.  Both facts are checked exactly on boxes.

# %%
import random

from onesided.algebra import SnAlgebra
from onesided.coeff_ring import QQ
from onesided.resolution import decomposition_check, sam_sequence_check
from onesided.sampling import random_element

for d in range(5):
    r = sam_sequence_check(d)
    print(f"d={d}: injective {r['injective']}, ker pi = image {r['ker_pi_equals_image']}"
          f" (dim {r['ker_pi_dimension']})")

# %% [markdown]
# Any f splits as pi(f) + g (x - 1) with an explicit g.

# %%
S = SnAlgebra(1, QQ)
f = random_element(random.Random(2), S, 2)
r = decomposition_check(f)
print(f"{r['f']} = {r['pi']} + ({r['divisor']})(x - 1)", r["passed"])
