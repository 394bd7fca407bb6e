"""
Gauge pairs and the random-sign estimator
=========================================

The +-1 signs of the subset sum can be replaced by any exact weights alpha and
nodes beta with sum(alpha) = sum(alpha beta^2) = 0 and sum(alpha beta) = 1.
Averaging the per-sign-vector statistic over random signs gives an unbiased
estimator of the count.
"""

import random
from fractions import Fraction

from orientcount import ConstraintProfile, GaugePair, duality_count, generalized_duality_count, mc_estimate
from orientcount.graph import random_multigraph
from orientcount.poly import AdmissibleSet

g = random_multigraph(random.Random(1), 6, 10)
prof = ConstraintProfile.uniform(g, AdmissibleSet.finite([1, 2, 3]))
exact = duality_count(g, prof).count
print("exact count:", exact)

three = GaugePair((Fraction(-3, 2), Fraction(2), Fraction(-1, 2)), (0, 1, 2))
print("sign gauge:  ", generalized_duality_count(g, prof, GaugePair.signs()).count)
print("3-node gauge:", generalized_duality_count(g, prof, three).count)

try:
    GaugePair((1, -1), (1, 1))
except ValueError as exc:
    print("rejected:", exc)

# Averaging over all 2^m sign vectors reproduces the count exactly...
print("exhaustive mean:", mc_estimate(g, prof, exhaustive=True).mean)

# ...and random signs give an unbiased estimate with a standard error.
for n in (1_000, 10_000, 100_000):
    est = mc_estimate(g, prof, n, seed=3)
    print(f"{n:>7} samples: {float(est.mean):10.2f} +- {est.stderr:.2f}")
