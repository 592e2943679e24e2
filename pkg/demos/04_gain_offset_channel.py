# %% [markdown]
# # Detection under unknown gain and offset
#
# The same seeded noise is sent through r = a(x + noise) + b for several
# (a, b). The Pearson detector's decisions do not move; a Euclidean detector
# that assumes a = 1, b = 0 falls apart once the offset is large.

# %%
import numpy as np

from pearsoncodes import ChannelParams, pearson_codebook, run_experiment, simulate

cb = pearson_codebook(4, 6)
print(cb)

# %% Decisions are identical trial by trial
runs = {ab: simulate(cb, ChannelParams(*ab, noise_sigma=0.3, seed=1), 5000, ("pearson",))["pearson"]
        for ab in [(1, 0), (2.5, -7), (0.3, 100)]}
ref = runs[(1, 0)]
for ab, rec in runs.items():
    print(ab, "errors:", rec.errors, "differences vs (1,0):", int(np.count_nonzero(rec.decided != ref.decided)))

# %% Word error rates with and without an offset
for offset in (0.0, 0.5, 5.0):
    s = run_experiment(cb, ChannelParams(1.0, offset, 0.1, seed=1), 5000)
    print(f"b={offset:<4} WER pearson={s.wer_pearson:.4f}  euclidean={s.wer_euclidean:.4f}")
