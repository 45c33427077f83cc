# %% [markdown]
# # Verifying surjections and deciding an order
#
# A candidate map is checked by finding, for each relator image, a sequence
# of relator insertions that empties it.  Surjectivity comes from Stallings
# folding of the image subgroup.

# %%
from knotorder import bundled_knots
from knotorder.homver import bundled_homs, verify_candidate
from knotorder.pipeline import Config, order
from knotorder.words import KnotTable

knots = bundled_knots()
homs = bundled_homs()
cand = next(h for h in homs if h.source == "11a_6")
print(cand.to_text())

# %%
res = verify_candidate(cand, knots)
print(res.line(), "with", res.certificate_size, "moves")
cert = res.relator_certificates[0]
print("relator 1 image:", cert.word)
for move in cert.moves:
    print("  ", move)
print("replays to:", cert.replay(knots["4_1"]))

# %% [markdown]
# Every ordered pair among a few knots:

# %%
table = KnotTable()
for name in ("3_1", "4_1", "11a_5", "11a_6"):
    table.add(knots[name])
print(order(table, homs, Config(primes=(2, 3))).text())
