"""Does the good seller want better reviews?  Not always.

Profit of the good type is U-shaped in review precision h: more informative
reviews first shrink the full-coverage price, then eventually let the seller
retreat to the optimists at a high price.  The switch point h* depends on the
audience -- it comes much earlier when everyone is sophisticated -- and the
seller's preference between a naive and a sophisticated audience flips twice
as h rises.
"""

import numpy as np

from splab import ModelParams, compare_markets, solve_pooling, thresholds

v = 0.1
ts_naive = thresholds(ModelParams(h=0.7, lam=0.0, v_B=v))
ts_soph = thresholds(ModelParams(h=0.7, lam=1.0, v_B=v))

print(f"v_B = {v}")
print(f"h* (all naive)         = {ts_naive.h_star:.6f}")
print(f"h* (all sophisticated) = {ts_soph.h_star:.6f}")
print(f"h_underline, h_overline = {ts_naive.h_underline:.6f}, {ts_naive.h_overline:.6f}")
print()

print(f"{'h':>5} | {'G profit, naive':>15} {'G profit, soph':>14} | {'G prefers':>9} {'B prefers':>9}")
for h in np.linspace(0.5, 1.0, 21):
    naive = ModelParams(h=float(h), lam=0.0, v_B=v)
    soph = ModelParams(h=float(h), lam=1.0, v_B=v)
    rep = compare_markets(naive, soph)
    print(
        f"{h:5.3f} | {rep.naive.profit_G:15.4f} {rep.sophisticated.profit_G:14.4f}"
        f" | {rep.preferred_by_G:>9} {rep.preferred_by_B:>9}"
    )

print()
print("The good type prefers the naive audience at both extremes of h and the")
print("sophisticated one in between; the bad type flips once, at the naive h*.")

# The U-shape itself, at lambda = 0:
print()
hs = np.linspace(0.5, 1.0, 26)
profits = [solve_pooling(ModelParams(h=float(h), lam=0.0, v_B=v)).profit_G for h in hs]
lo = min(range(len(hs)), key=lambda i: profits[i])
print(f"naive-market profit minimum at h ~ {hs[lo]:.3f} (h* = {ts_naive.h_star:.3f})")
