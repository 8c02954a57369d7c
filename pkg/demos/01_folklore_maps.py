"""
Folklore maps are channels
==========================

Attach one fixed bath state to every system state, evolve jointly and trace
the bath out. The resulting system map always has a positive semidefinite
Choi matrix and preserves trace. The transpose map is the standard
counterexample.
"""
import numpy as np

from qdplab import matlin, qdp, states

rng = np.random.default_rng(0)

rho_b = states.random_density(2, rng)
u = matlin.haar_unitary(4, rng)
l = qdp.folklore_map(rho_b, u)
v = qdp.cp_verdict(l)
print("folklore map: min Choi eigenvalue %.3e, TP residual %.1e"
      % (v.min_choi_eigenvalue, v.tp_residual))

# Kraus operators rebuild the same superoperator
kraus = qdp.kraus_from_choi(qdp.choi_of(l))
back = qdp.Superoperator.from_kraus(kraus)
print("Kraus rank", len(kraus), "reconstruction error %.1e" % np.max(np.abs(back.mat - l.mat)))

t = qdp.cp_verdict(qdp.transpose_map(2))
print("transpose: min Choi eigenvalue %.6f, CP %s" % (t.min_choi_eigenvalue, t.is_cp))
