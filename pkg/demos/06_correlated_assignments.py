"""
Correlated assignments break complete positivity
================================================

Add a small correlation to the product assignment, keep it linear and
injective, then search joint unitaries for a non-CP induced map. The
uncorrelated control never gets below zero.
"""
from qdplab.experiments import exp_sl_necessity

for eps in (0.1, 0.0):
    r = exp_sl_necessity(2, 2, eps=eps, budget=500, seed=0)
    print(f"eps={eps}: {r.verdict}")
    for key, val in sorted(r.metrics.items()):
        print(f"  {key:30s} {val:.4g}")
