# %% [markdown]
# # How many words does an optimal Pearson code hold?
#
# Three independent routes to the same number: the Mobius closed form, the
# divisor recursion in q, and brute-force canonicalization of every word.

# %%
from pearsoncodes import (
    canonical_class_count,
    count_pearson_closed,
    count_pearson_recursive,
    count_t_constrained,
    pearson_asymptotic_gap,
)
from pearsoncodes.counting import format_polynomial, pearson_polynomial

# %% Fixed-q formulas, derived from the closed form
for q in range(2, 9):
    print(f"q={q}:  P = {format_polynomial(pearson_polynomial(q))}")

# %% N2 <= P <= N1 for a few (n, q)
print(f"{'n':>2} {'q':>2} {'N2':>8} {'P':>8} {'N1':>8}")
for n in range(4, 8):
    for q in range(4, 7):
        print(f"{n:>2} {q:>2} {count_t_constrained(q, n, 2):>8} {count_pearson_closed(q, n):>8} "
              f"{count_t_constrained(q, n, 1):>8}")

# %% The three routes agree
for q, n in [(4, 6), (5, 5), (9, 4)]:
    print(q, n, count_pearson_closed(q, n), count_pearson_recursive(q, n), canonical_class_count(q, n))

# %% P is q^n - (q-1)^n up to a term of order ceil(q/2)^n
for n in (6, 10, 14):
    print(n, [pearson_asymptotic_gap(q, n) for q in (4, 6, 8)])
