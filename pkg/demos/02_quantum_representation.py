# %% [markdown]
# # The osp(1|2) side
# Diagrams act on tensor powers of the two-dimensional super vector space.
# The functor G sends each basis diagram to a matrix over Q(q).

# %%
from fractions import Fraction

from oddtl import osp
from oddtl.tl import basis_morphism, enumerate_basis

print("G(cup):", osp.G_cup_vector())
print("G(cap):", osp.G_cap_values())

# %% G is faithful on small hom-spaces: exact rank at q = 2
for m, n in [(2, 2), (3, 3), (4, 4), (5, 3)]:
    print((m, n), osp.hom_rank(m, n), "of", len(enumerate_basis(m, n)))

# %% One column of G applied to a two-cap diagram, symbolically
d = enumerate_basis(4, 0)[0]
print(d, osp.g_columns(basis_morphism(d))[:6])

# %% Tensor powers split into shifted simples
for n in range(1, 6):
    print(n, osp.decompose_tensor_power(n))

# %% The weight modules satisfy the defining relation
print(all(osp.check_sl2_relation(osp.WeightModule(m, q=Fraction(3))) for m in range(6)))
