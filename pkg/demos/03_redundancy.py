# %% [markdown]
# # Redundancy versus length for q = 8
#
# Columns suitable for plotting: exact r1, r2, rP and the balanced-code
# estimate r0. For large n, rP tracks r1 and sits near r2 / 2.

# %%
from pearsoncodes import redundancy_report

print("n,r1,r2,rP,r0_approx")
for n in range(2, 41):
    rep = redundancy_report(8, n)
    print(f"{n},{rep.r1:.6g},{rep.r2:.6g},{rep.rP:.6g},{rep.r0_approx:.6g}")

# %% The comparison point at n = 10
rep = redundancy_report(8, 10)
print(f"q=8 n=10: rP={rep.rP:.3f}  r0={rep.r0_approx:.2f}")
