"""
Unbiased bases force a single bath state
========================================

Pure system states can only be paired with product pre-images. For two
bases related by a complex Hadamard matrix the maximally mixed state has two
decompositions, and equating them leaves room for just one bath operator.
"""
import numpy as np

from qdplab import states
from qdplab.experiments import exp_hadamard_constraint, exp_theorem2_pipeline

psi, phi = states.relatively_unbiased_pair(3, np.random.default_rng(2))
print("overlaps |<psi_k|phi_a>|^2:\n", np.round(np.abs(psi.conj().T @ phi) ** 2, 6))

for d_s, d_b in [(2, 2), (3, 3), (3, 2)]:
    r = exp_hadamard_constraint(d_s, d_b)
    print(f"{d_s}x{d_b}: solution dim {r.metrics['solutionDim']} (bath dim^2 {d_b ** 2}),"
          f" spread {r.metrics['maxCollapseSpread']:.1e}")

r = exp_theorem2_pipeline(2, 3)
for s in r.stages:
    print(f"  {s.name:30s} {'pass' if s.passed else 'fail'}  {s.residual:.1e}")
