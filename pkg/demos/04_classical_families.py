"""
Classical families are too small
================================

States diagonal in one fixed basis form a simplex. Their marginals span
only dS of the dS^2 operator dimensions, so linearity cannot pin down the
system map.
"""
from qdplab.experiments import exp_commuting_gap

for d_s, d_b in [(2, 2), (3, 2)]:
    r = exp_commuting_gap(d_s, d_b, samples=50)
    m = r.metrics
    print(f"{d_s}x{d_b}: span {m['spanDim']} of {m['fullSpanDim']}, "
          f"affine {m['affineDim']}, underdetermined {m['underdetermined']}")
