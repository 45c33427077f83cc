# %% [markdown]
# # Representations into SL(2, F_p)
#
# Roots are chosen so that each relator determines one more generator; the
# rest follows by propagation.  Orbits under conjugation are reduced to one
# canonical representative.

# %%
from knotorder import bundled_knots
from knotorder.replib import brute_force_reps, enumerate_reps, is_irreducible

knots = bundled_knots()
P = knots["3_1"]

for p in (2, 3, 5, 7):
    reps = enumerate_reps(P, p)
    irr = [r for r in reps if is_irreducible(r)]
    print(f"p={p}: {len(reps)} orbits, {len(irr)} irreducible")

# %% [markdown]
# Exhaustive listing agrees with a brute-force scan of every triple of matrices.

# %%
for p in (2, 3):
    fast = enumerate_reps(P, p, up_to_conjugacy=False)
    slow = brute_force_reps(P, p)
    print(p, len(fast), len(slow), {r.key() for r in fast} == {r.key() for r in slow})

# %%
rho = enumerate_reps(P, 5, irreducible_only=True)[0]
print(rho.format())
