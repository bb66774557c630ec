# %% [markdown]
# # An infinitely generated annihilator in S_2
#
# Right multiplication by x1 - x2 kills the anti-diagonal sums
# v_a(s) = sum over b1 + b2 = s of E_ab.  On the span of E-units with indices
# <= d the kernel has dimension (d+1)^3, and it is exactly the span of these
# vectors, so the annihilator keeps growing with d.

# %%
from onesided import coherence

for s in range(3):
    print(f"v_0({s}) =", coherence.v((0, 0), s).element)

# %%
for d in range(4):
    r = coherence.kernel_dimension_check(d)
    print(f"d={d}: kernel dim {r['kernel_dimension']:>3}  expected {r['expected_dimension']:>3}"
          f"  basis match {r['basis_match']}")
