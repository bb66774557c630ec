# %% [markdown]
# # Normal forms in S_1 and S_2
#
# Every element is a finite sum of monomials x^a y^b.  The only relation is
# y x = 1, so a product of two monomials collapses in closed form.

# %%
from onesided.algebra import SnAlgebra
from onesided.coeff_ring import QQ
from onesided.rewrite import format_word, reduce_word

S = SnAlgebra(1, QQ)
x, y = S.x(), S.y()

print("y*x      =", y * x)
print("x*y      =", x * y)            # not 1: x has only a left inverse
print("y^2*x^3  =", y**2 * x**3)
print("x^2*y*x  =", x**2 * y * x)

# %% [markdown]
# The same products computed by brute-force word rewriting agree with the
# closed form.  Here a word is a list of letters (kind, index).

# %%
word = [("y", 1), ("y", 1), ("x", 1), ("x", 1), ("x", 1)]
print(format_word(word), "->", format_word(reduce_word(word, 1)))

# %% [markdown]
# In two variables the generators with different indices commute.

# %%
S2 = SnAlgebra(2, QQ)
f = (S2.x(1) - S2.x(2)) * S2.y(1)
print("(x1 - x2) y1 =", f)
print("y1 (x1 - x2) =", S2.y(1) * (S2.x(1) - S2.x(2)))

# %% [markdown]
# Structure maps: the involution swaps x and y and reverses products, pi
# sends every generator to 1, and the Laurent image sends y to 1/x.

# %%
g = 3 * x**2 * y - y + 2
print("g          =", g)
print("g*         =", g.involution())
print("pi(g)      =", g.pi())
print("Laurent(g) =", g.laurent_image())
