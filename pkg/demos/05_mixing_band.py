"""When pure pooling dies and price mixing takes over.

With a naive audience and very precise reviews, the optimal pooled price
leaves the bad type selling to almost nobody; once its profit drops
below the outside option v_B, no pure pooling equilibrium exists.  On a band
of v_B values a mixed equilibrium patches the hole: the bad type randomizes
between the high pooled price and its reservation price, and the mixing
weight is pinned by naive buyers' updated beliefs.
"""

import numpy as np

from splab import ModelParams, solve_mixed, solve_pooling

h = 1.0
print(f"h = {h}, lambda = 0 (all naive)")
print(f"{'v_B':>6} {'pooling':>8} {'mixed':>6} {'alpha':>7} {'p_bar':>7} {'profit_G':>9}")
for v in np.arange(0.15, 0.28, 0.01):
    v = round(float(v), 3)
    pool = solve_pooling(ModelParams(h=h, lam=0.0, v_B=v))
    mix = solve_mixed(ModelParams(h=h, lam=0.0, v_B=v))
    print(
        f"{v:6.3f} {pool.kind:>8} {mix.kind:>6} "
        f"{(f'{mix.alpha:.3f}' if mix.alpha is not None else '-'):>7} "
        f"{(f'{mix.price:.3f}' if mix.price is not None else '-'):>7} "
        f"{(f'{mix.profit_G:.4f}' if mix.profit_G is not None else '-'):>9}"
    )

print()
print("The hole is exactly v_B in (0.2, 0.25) at h=1; the mixed equilibrium")
print("exists on the same open band, and hands the bad type exactly v_B.")

# Belief consistency check, worked by hand for one point:
v = 0.22
mix = solve_mixed(ModelParams(h=h, lam=0.0, v_B=v))
w_bar = (1 + 2 * h) / 4
mu = w_bar / (w_bar + mix.alpha * (1 - w_bar))
print()
print(f"at v_B={v}: alpha={mix.alpha:.4f}, buyer posterior after a good review {mu:.4f},")
print(f"implied WTP {mu + (1 - mu) * v:.4f} == posted high price {mix.price:.4f}")
