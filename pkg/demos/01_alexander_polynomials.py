# %% [markdown]
# # Alexander polynomials from Wirtinger presentations
#
# Fox derivatives of each relator, abelianized, give the Alexander matrix.
# Any maximal minor is the polynomial (up to units).

# %%
from knotorder import alexander_polynomial, bundled_knots, divides
from knotorder.alexpoly import alexander_matrix

knots = bundled_knots()
trefoil = knots["3_1"]
print(trefoil.to_text())

# %%
for row in alexander_matrix(trefoil):
    print([str(e) for e in row])

# %% [markdown]
# The polynomials of the small targets:

# %%
for name in ("3_1", "4_1", "5_1", "5_2", "6_1", "6_2", "6_3"):
    print(f"{name:>4}  {alexander_polynomial(knots[name])}")

# %% [markdown]
# A surjection G(K1) -> G(K2) forces the polynomial of K2 to divide that of K1.
# Figure eight onto trefoil fails this test; 11a_6 onto trefoil passes it.

# %%
d31 = alexander_polynomial(trefoil)
for src in ("4_1", "5_1", "11a_6"):
    print(src, "->", "3_1:", "divisible" if divides(d31, alexander_polynomial(knots[src])) else "refuted")
