# %% [markdown]
# # The Grothendieck ring over Z[pi]
# Classes of simples are quantum integers in x with pi tracking the parity
# shift. Projectors become isomorphic to shifted smaller ones in the envelope.

# %%
from oddtl import k0

two = k0.qint_xpi(2)
print("[2]^2 =", two ** 2)
print("decomposed:", k0.decompose_in_basis(two ** 2))

# %% Clebsch-Gordan, checked for small labels
print(all(k0.qint_xpi(a + 1) * k0.qint_xpi(b + 1) == k0.clebsch_gordan(a, b)
          for a in range(6) for b in range(6)))

# %% Tensor powers of the generator, through the character
for n in range(1, 7):
    print(n, k0.decompose_in_basis(k0.k0_class_of_tensor_power(n)))

# %% The complementary idempotent is isomorphic to a shifted f_{n-2}
for n in range(2, 6):
    g, f, u, v = k0.jw_witnesses(n)
    print(n, "shift", f.obj.shift, "witnessed:", k0.verify_idempotent_equivalence(g, f, u, v))
