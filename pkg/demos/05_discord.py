"""
Detecting zero discord
======================

A state is classical on the system side when some local measurement leaves
it untouched. The test reports the smallest trace-distance disturbance.
"""
import numpy as np

from qdplab import matlin, states
from qdplab.correlations import BipartiteState, CQSpec, cq_state, zero_discord_test

rng = np.random.default_rng(3)
spec = CQSpec([0.6, 0.4], matlin.haar_unitary(2, rng),
              [states.random_density(2, rng) for _ in range(2)])
v = zero_discord_test(cq_state(spec))
print("classical-quantum:", v.is_zero, "%.1e" % v.residual, v.path)

phi = np.array([1, 0, 0, 1]) / np.sqrt(2)
v = zero_discord_test(BipartiteState(np.outer(phi, phi), 2, 2))
print("Bell state:", v.is_zero, "%.6f" % v.residual, v.path)
