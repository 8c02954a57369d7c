"""Reduced dynamics from correlated system-bath initial states.

Building blocks for assignment families of joint states, the system maps
they induce under joint unitaries, complete-positivity certificates, and a
structural zero-discord test, plus seeded experiments exercising each step
of the argument that only the product (folklore) embedding is admissible.
"""
from . import correlations, experiments, matlin, qdp, states
from .correlations import (BipartiteState, CQSpec, DiscordVerdict, cq_state,
                           product_embed, pure_marginal_factorizes, system_blocks,
                           zero_discord_test)
from .experiments import EXPERIMENTS, ExperimentReport
from .matlin import (dist, expand_coeffs, gell_mann_basis, haar_unitary, herm_eig, kron,
                     partial_trace_bath, partial_trace_system, resum_coeffs)
from .qdp import (AssignmentFamily, AuditReport, ChoiMatrix, CPVerdict, Superoperator,
                  audit_family, choi_of, cp_verdict, folklore_map, illdefinedness_witness,
                  induced_map, kraus_from_choi)
from .states import (dft_hadamard, is_hadamard, random_density, random_pure,
                     relatively_unbiased_pair, simplex_coords, spectrum_class)

__version__ = "0.1.0"
