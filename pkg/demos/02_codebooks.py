# %% [markdown]
# # Building and checking Pearson codebooks
#
# A codebook works with a minimum Pearson distance detector only if no word
# is a positive scaling plus shift of another (Property A) and no word is
# constant (Property B).

# %%
from pearsoncodes import (
    build_union_example,
    canonicalize,
    pearson_codebook,
    t_constrained_codebook,
    verify_pearson,
)
from pearsoncodes.core import dumps_codebook

# %% Every non-constant word collapses to one canonical representative
for w in [(2, 4, 6), (0, 2, 4, 4), (5, 3, 3)]:
    print(w, "->", canonicalize(w).symbols)

# %% The optimal code is exactly the set of canonical words
cb = pearson_codebook(3, 3)
print(dumps_codebook(cb, comment="optimal code, q=3 n=3"))
print("verify:", verify_pearson(cb) or "OK")

# %% Not every 2-constrained code is a Pearson code
print(verify_pearson(t_constrained_codebook(5, 4, {0, 2})))
print(verify_pearson(t_constrained_codebook(5, 4, {0, 1})) or "S(0,1): OK")

# %% For q = 4 a union of two constrained codes already reaches the optimum
for n in (3, 4, 5):
    u = build_union_example(n)
    print(n, len(u), len(pearson_codebook(4, n)), verify_pearson(u) or "OK")
