"""Monte Carlo checks of the exact formulas for uniform random points.

Each estimate is compared to its closed form through a z score; the run is
deterministic in the seed and independent of the worker count.
"""

from bisector_words import (
    canonical_bracelet,
    closed_form,
    equidistribution_paths,
    estimate_bracelet_prob,
    estimate_region_stats,
    run_word,
    transfer_check,
)

TRIALS = 200_000
SEED = 2

print(f"== region statistics, {TRIALS} trials ==")
for n in (3, 5, 8):
    results = estimate_region_stats(n, TRIALS, SEED)
    line = " ".join(f"{k}:{r.estimate:.4f}(z{r.z:+.1f})" for k, r in sorted(results.items()))
    print(f"n={n}: {line}")

print()
print("== probability of the most likely bracelet ==")
for n in (3, 4, 5, 6):
    res = estimate_bracelet_prob(n, canonical_bracelet(run_word(n)), TRIALS, SEED + n)
    print(f"n={n}: estimate={res.estimate:.5f} exact={float(closed_form('pbn', n)):.5f} z={res.z:+.2f}")

print()
print("== the two sampling models agree on expected lengths (n=4) ==")
report = transfer_check(4, TRIALS, SEED)
for comp in report.comparisons:
    print(
        f"type {comp.k}: exponential-model {comp.exp_model.estimate:.4f}, "
        f"circle-model {comp.circle_model.estimate:.4f}, "
        f"exact {comp.exp_model.target:.4f}, between z={comp.z_between:+.2f}"
    )

print()
print("== equidistribution along the circle (n=100000, one sample) ==")
paths = equidistribution_paths(100_000, [0.25, 0.5, 0.75, 1.0], trials=1, seed=SEED)
print("t grid:          ", paths.t_grid)
for k, slope in ((0, "t/4"), (1, "t/2"), (2, "t/4")):
    vals = " ".join(f"{v:.4f}" for v in paths.region_fraction[k])
    print(f"region frac k={k}: {vals}   (limit {slope})")
for k, slope in ((0, "t/8"), (1, "t/2"), (2, "3t/8")):
    vals = " ".join(f"{v:.4f}" for v in paths.length_fraction[k])
    print(f"length frac k={k}: {vals}   (limit {slope})")
