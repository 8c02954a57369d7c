"""
Differences the bath hides
==========================

Two joint states with the same system marginal differ by an operator whose
partial trace over the bath vanishes. A joint unitary can rotate that
difference into one the system sees, so such a pair never yields a
well-defined system map.
"""
import numpy as np

from qdplab import matlin, qdp
from qdplab.experiments import CNOT, SIGMA_X, exp_property1

delta = np.kron(SIGMA_X, SIGMA_X)
print("Tr_B delta =\n", matlin.partial_trace_bath(delta, 2, 2).real)
print("Tr_B CNOT delta CNOT =\n", matlin.partial_trace_bath(CNOT @ delta @ CNOT, 2, 2).real)

u = qdp.illdefinedness_witness(delta, 2, 2, np.random.default_rng(1))
print("searched witness strength %.3f" % qdp.witness_strength(delta, u, 2, 2))

report = exp_property1(2, 2, trials=50, seed=0)
print(report.verdict, report.metrics)
