# %% [markdown]
# # Twisted Alexander invariants and a refutation
#
# 11a_6 passes the classical divisibility test against the trefoil, so it
# takes a finer invariant to rule out a surjection onto it.

# %%
from knotorder import bundled_knots
from knotorder.replib import enumerate_reps
from knotorder.twisted import refute_by_twisted, twisted_alexander, verify_witness

knots = bundled_knots()
src, tgt = knots["11a_6"], knots["3_1"]

# %%
for i, rho in enumerate(enumerate_reps(tgt, 3)):
    ta = twisted_alexander(tgt, rho)
    print(i, f"trace={rho.trace}", "|", ta.numerator, "/", ta.denominator)

# %%
report = refute_by_twisted(src, tgt, primes=[3])
print(report)
print(report.witness.format())
print("independent recheck:", verify_witness(src, tgt, report.witness))
