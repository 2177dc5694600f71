# %% [markdown]
# # Diagrams, signs and Jones-Wenzl projectors
# Morphisms are linear combinations of crossingless matchings with coefficients
# in Q(q). Caps and cups are odd, so moving them past each other costs signs.

# %%
from oddtl.jones_wenzl import jw
from oddtl.scalars import delta
from oddtl.tl import cap, cup, enumerate_basis, identity

print("bubble:", cap() @ cup())
print("delta =", delta(), "| classical:", delta(1))

# %% The two zigzags differ by a sign
I = identity(1)
print("right zigzag:", (cap() ^ I) @ (I ^ cup()))
print("left zigzag: ", (I ^ cap()) @ (cup() ^ I))

# %% Stacking two cups one way or the other
print(cup() ^ cup())
print((identity(2) ^ cup()) @ cup())

# %% Hom-space sizes are Catalan numbers
print([len(enumerate_basis(n, n)) for n in range(7)])

# %% The projector f_3 and its idempotence
f3 = jw(3)
print(f3)
assert f3 @ f3 == f3
assert ((identity(1) ^ cap()) @ f3).is_zero()
