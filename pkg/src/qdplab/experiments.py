"""Seeded, self-checking pipelines, one per step of the product-scheme argument.

Every experiment returns an :class:`ExperimentReport`. Randomness comes from
``numpy.random.default_rng([seed, tag, trial])``, where ``tag`` is the
CRC-32 of the experiment name, so each trial has its own independent stream
and reports do not depend on execution order.
"""
import zlib
from dataclasses import dataclass, field

import numpy as np
from scipy.linalg import null_space
from scipy.optimize import minimize

from . import matlin
from .correlations import (DISCORD_TOL, BipartiteState, CQSpec, cq_state,
                           pure_marginal_factorizes, zero_discord_test)
from .errors import ConstructionFailed, NotPureMarginal, Underdetermined, WitnessNotFound
from .qdp import (CP_TOL, AssignmentFamily, audit_family, cp_verdict, folklore_map,
                  illdefinedness_witness, induced_map, numerical_rank, vec, witness_strength)
from .states import (GAP_TOL, basis_projectors, density_failures, projector,
                     random_density, random_pure, relatively_unbiased_pair)

SIGMA_X = np.array([[0, 1], [1, 0]], dtype=np.complex128)
SIGMA_Z = np.diag([1.0, -1.0]).astype(np.complex128)
CNOT = np.array([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=np.complex128)

COLLAPSE_TOL = 1e-10
EMBED_TOL = 1e-9
VIOLATION_THRESHOLD = -1e-4


def trial_rng(seed, name, trial=0):
    return np.random.default_rng([seed, zlib.crc32(name.encode()), trial])


@dataclass
class Stage:
    name: str
    passed: bool
    residual: float

    def to_dict(self):
        return {"name": self.name, "pass": bool(self.passed), "residual": float(self.residual)}


@dataclass
class ExperimentReport:
    experiment: str
    params: dict
    metrics: dict = field(default_factory=dict)
    stages: list = field(default_factory=list)
    trials: list = field(default_factory=list)

    @property
    def passed(self):
        return (all(s.passed for s in self.stages)
                and all(t.get("pass", True) for t in self.trials))

    @property
    def verdict(self):
        return "pass" if self.passed else "fail"

    def stage(self, name):
        return next(s for s in self.stages if s.name == name)

    def to_dict(self):
        return {"experiment": self.experiment, "params": dict(self.params),
                "verdict": self.verdict, "metrics": dict(self.metrics),
                "stages": [s.to_dict() for s in self.stages],
                "trials": sorted(self.trials, key=lambda t: t["trial"])}


# -- folklore scheme ---------------------------------------------------------

def exp_folklore_cp(dim_s=2, dim_b=2, trials=100, seed=0, cp_tol=CP_TOL, unitary=None):
    """Folklore maps from random fiducial states and Haar unitaries are CPTP."""
    name = "folklore-cp"
    records = []
    for i in range(trials):
        rng = trial_rng(seed, name, i)
        rho_b = random_density(dim_b, rng)
        u = matlin.haar_unitary(dim_s * dim_b, rng) if unitary is None else unitary
        v = cp_verdict(folklore_map(rho_b, u), cp_tol)
        records.append({"trial": i, "minChoiEigenvalue": v.min_choi_eigenvalue,
                        "tpResidual": v.tp_residual,
                        "pass": v.min_choi_eigenvalue >= -cp_tol and v.tp_residual <= 1e-9})
    worst_eig = min(r["minChoiEigenvalue"] for r in records)
    worst_tp = max(r["tpResidual"] for r in records)
    return ExperimentReport(
        name,
        {"dimS": dim_s, "dimB": dim_b, "trials": trials, "seed": seed, "cpTol": cp_tol,
         "unitaryOverride": unitary is not None},
        metrics={"worstMinChoiEigenvalue": worst_eig, "worstTpResidual": worst_tp},
        stages=[Stage("completely-positive", worst_eig >= -cp_tol, worst_eig),
                Stage("trace-preserving", worst_tp <= 1e-9, worst_tp)],
        trials=records)


# -- uniqueness of pre-images ------------------------------------------------

def random_marginal_free_delta(dim_s, dim_b, rng):
    """Unit-norm Hermitian operator with vanishing system marginal.

    Drawn as Gaussian Gell-Mann coefficients with the bath-identity column
    set to zero.
    """
    c = rng.standard_normal((dim_s ** 2, dim_b ** 2))
    c[:, 0] = 0.0
    delta = matlin.resum_coeffs(c, dim_s, dim_b)
    return delta / np.linalg.norm(delta)


def exp_property1(dim_s=2, dim_b=2, trials=100, seed=0, delta=None, max_trials=200):
    """A joint unitary exposes every marginal-invisible difference of joint states."""
    name = "property1-witness"
    records = []
    for i in range(trials):
        rng = trial_rng(seed, name, i)
        d = random_marginal_free_delta(dim_s, dim_b, rng) if delta is None else delta
        norm = float(np.linalg.norm(d))
        try:
            u = illdefinedness_witness(d, dim_s, dim_b, rng, max_trials)
            g = witness_strength(d, u, dim_s, dim_b)
            found = g >= 1e-3 * norm
        except WitnessNotFound:
            g, found = 0.0, False
        records.append({"trial": i, "strength": g, "relativeStrength": g / norm,
                        "pass": bool(found)})
    min_g = min(r["relativeStrength"] for r in records)
    stages = [Stage("witness-found", all(r["pass"] for r in records), min_g)]
    metrics = {"minStrength": min(r["strength"] for r in records),
               "minRelativeStrength": min_g,
               "successRate": sum(r["pass"] for r in records) / trials}
    if (dim_s, dim_b) == (2, 2):
        image = matlin.partial_trace_bath(CNOT @ np.kron(SIGMA_X, SIGMA_X) @ CNOT, 2, 2)
        resid = float(np.max(np.abs(image - 2 * SIGMA_X)))
        stages.append(Stage("cnot-oracle", resid <= 1e-12, resid))
    return ExperimentReport(
        name,
        {"dimS": dim_s, "dimB": dim_b, "trials": trials, "seed": seed,
         "maxTrials": max_trials, "deltaOverride": delta is not None},
        metrics=metrics, stages=stages, trials=records)


# -- unbiased-basis constraints ----------------------------------------------

def hadamard_constraint_matrix(dim_s, drop=()):
    """Coefficients of ``O_j = mean(Ot)`` and ``Ot_b = mean(O)`` on 2*dS unknowns.

    Rows ``0 .. dS-1`` are the first family, rows ``dS .. 2dS-1`` the second;
    rows listed in ``drop`` are removed.
    """
    m = np.zeros((2 * dim_s, 2 * dim_s))
    for j in range(dim_s):
        m[j, j] = 1.0
        m[j, dim_s:] = -1.0 / dim_s
        m[dim_s + j, dim_s + j] = 1.0
        m[dim_s + j, :dim_s] = -1.0 / dim_s
    drop = set(drop)
    return m[[r for r in range(2 * dim_s) if r not in drop]]


def _realify(m):
    return np.concatenate([m.real.ravel(), m.imag.ravel()])


def preimage_consistency_system(bases, links, dim_b):
    """Real linear system for bath operators attached to basis projectors.

    Unknowns are the Gell-Mann coordinates of one bath operator per basis
    vector, ordered (basis, vector, coordinate). Each link ``(a, b)`` asserts
    ``sum_k P^a_k (x) O^a_k == sum_k P^b_k (x) O^b_k``, i.e. that the maximally
    mixed state gets the same pre-image from either basis.
    """
    dim_s = bases[0].shape[0]
    per = dim_b * dim_b
    gam = matlin.gell_mann_basis(dim_b)
    projs = [basis_projectors(b) for b in bases]
    cols = len(bases) * dim_s * per
    blocks = []
    for a, b in links:
        block = np.zeros((2 * (dim_s * dim_b) ** 2, cols))
        for idx, sign in ((a, 1.0), (b, -1.0)):
            for k in range(dim_s):
                for u in range(per):
                    block[:, (idx * dim_s + k) * per + u] += sign * _realify(
                        np.kron(projs[idx][k], gam[u]))
        blocks.append(block)
    return np.vstack(blocks)


def collapse_spread(ops):
    """Largest deviation of a stack of coordinate vectors from their mean."""
    ops = np.asarray(ops)
    return float(np.max(np.abs(ops - ops.mean(axis=0))))


def _same_subspace(n1, n2):
    if n1.shape[1] != n2.shape[1]:
        return np.inf
    return float(np.max(np.abs(n2 - n1 @ (n1.T @ n2)))) if n1.size else 0.0


def exp_hadamard_constraint(dim_s=2, dim_b=2, seed=0, drop=(), n_solutions=20):
    """The 2 dS pre-image constraints of an unbiased pair force one bath operator."""
    name = "hadamard-constraint"
    rng = trial_rng(seed, name)
    per = dim_b * dim_b
    system = np.kron(hadamard_constraint_matrix(dim_s, drop), np.eye(per))
    null = null_space(system, rcond=1e-10)
    sol_dim = null.shape[1]

    spreads = []
    for _ in range(n_solutions):
        c = rng.standard_normal(sol_dim)
        x = null @ (c / np.linalg.norm(c))
        spreads.append(collapse_spread(x.reshape(2 * dim_s, per)))
    worst = max(spreads)

    # the constraints follow from equal pre-images of the maximally mixed state
    psi, phi = relatively_unbiased_pair(dim_s, rng)
    overlap = float(np.max(np.abs(np.abs(psi.conj().T @ phi) ** 2 - 1 / dim_s)))
    ops = [random_density(dim_b, rng) for _ in range(2 * dim_s)]
    lhs = sum(np.kron(p, o) for p, o in zip(basis_projectors(psi), ops[:dim_s]))
    rhs = sum(np.kron(p, o) for p, o in zip(basis_projectors(phi), ops[dim_s:]))
    proj_err = 0.0
    for j in range(dim_s):
        w = np.kron(psi[:, j:j + 1], np.eye(dim_b))
        proj_err = max(proj_err,
                       np.max(np.abs(w.conj().T @ lhs @ w - ops[j])),
                       np.max(np.abs(w.conj().T @ rhs @ w - sum(ops[dim_s:]) / dim_s)))
        w = np.kron(phi[:, j:j + 1], np.eye(dim_b))
        proj_err = max(proj_err,
                       np.max(np.abs(w.conj().T @ rhs @ w - ops[dim_s + j])),
                       np.max(np.abs(w.conj().T @ lhs @ w - sum(ops[:dim_s]) / dim_s)))
    direct = null_space(preimage_consistency_system([psi, phi], [(0, 1)], dim_b), rcond=1e-10)
    full = null_space(np.kron(hadamard_constraint_matrix(dim_s), np.eye(per)), rcond=1e-10)
    subspace_err = _same_subspace(full, direct)
    premise_resid = max(overlap, float(proj_err), subspace_err)

    return ExperimentReport(
        name,
        {"dimS": dim_s, "dimB": dim_b, "seed": seed, "droppedConstraints": sorted(drop),
         "solutions": n_solutions},
        metrics={"solutionDim": sol_dim, "expectedDim": per,
                 "constraintRank": numerical_rank(system), "maxCollapseSpread": worst,
                 "premiseResidual": premise_resid},
        stages=[Stage("solution-dimension", sol_dim == per, abs(sol_dim - per)),
                Stage("particular-solutions-collapse", worst <= COLLAPSE_TOL, worst),
                Stage("uniqueness-premise", premise_resid <= COLLAPSE_TOL, premise_resid)])


# -- the full argument -------------------------------------------------------

def exp_theorem2_pipeline(dim_s=2, dim_b=2, seed=0, n_pure=10, n_unitaries=20):
    """Every admissible assignment collapses to ``sigma -> sigma (x) rho_fid``."""
    name = "theorem2-pipeline"
    rng = trial_rng(seed, name)
    per = dim_b * dim_b
    stages, metrics = [], {}

    # 1. joint states over pure marginals are products
    resid = 0.0
    for _ in range(n_pure):
        p = projector(random_pure(dim_s, rng))
        w = np.kron(p, np.eye(dim_b))
        cand = w @ random_density(dim_s * dim_b, rng) @ w
        cand = BipartiteState(cand / np.trace(cand).real, dim_s, dim_b)
        rho_b = pure_marginal_factorizes(cand)
        resid = max(resid, matlin.dist(cand.mat, np.kron(p, rho_b), "frobenius"))
    try:
        pure_marginal_factorizes(BipartiteState(random_density(dim_s * dim_b, rng),
                                                dim_s, dim_b))
        control = False
    except NotPureMarginal:
        control = True
    stages.append(Stage("pure-marginal-factorization", resid <= 1e-10 and control, resid))

    # 2. one unbiased pair shares a single bath operator
    sub = exp_hadamard_constraint(dim_s, dim_b, seed)
    stages.append(Stage("hadamard-constraint", sub.passed,
                        max(s.residual for s in sub.stages)))
    metrics["hadamardSolutionDim"] = sub.metrics["solutionDim"]

    # 3. a second pair inherits it through the common maximally mixed state
    pairs = [relatively_unbiased_pair(dim_s, rng), relatively_unbiased_pair(dim_s, rng)]
    bases = [b for pair in pairs for b in pair]
    linked = null_space(preimage_consistency_system(bases, [(0, 1), (2, 3), (0, 2)], dim_b),
                        rcond=1e-10)
    unlinked = null_space(preimage_consistency_system(bases, [(0, 1), (2, 3)], dim_b),
                          rcond=1e-10)
    spread = max(collapse_spread((linked @ rng.standard_normal(linked.shape[1]))
                                 .reshape(-1, per)) for _ in range(20))
    metrics["linkedSolutionDim"] = linked.shape[1]
    metrics["unlinkedSolutionDim"] = unlinked.shape[1]
    stages.append(Stage("second-pair-propagation",
                        linked.shape[1] == per and unlinked.shape[1] == 2 * per
                        and spread <= COLLAPSE_TOL, spread))

    # 4. enough pure states pin down every pre-image by linearity
    while numerical_rank(np.array([vec(p) for b in bases for p in basis_projectors(b)])) \
            < dim_s ** 2 and len(pairs) < 10:
        pairs.append(relatively_unbiased_pair(dim_s, rng))
        bases = [b for pair in pairs for b in pair]
    links = [(2 * i, 2 * i + 1) for i in range(len(pairs))]
    links += [(0, 2 * i) for i in range(1, len(pairs))]
    null = null_space(preimage_consistency_system(bases, links, dim_b), rcond=1e-10)
    projs = [p for b in bases for p in basis_projectors(b)]
    trial = np.array([matlin.hermitian_coords(random_density(dim_b, rng)) for _ in projs])
    closest = (null @ (null.T @ trial.ravel())).reshape(len(projs), per)
    spread = collapse_spread(closest)
    rho_fid = matlin.from_hermitian_coords(closest.mean(axis=0))
    rho_fid = 0.5 * (rho_fid + rho_fid.conj().T)
    fid_ok = not density_failures(rho_fid)

    members = []
    for p, x in zip(projs, closest):
        o = matlin.from_hermitian_coords(x)
        members.append(np.kron(p, 0.5 * (o + o.conj().T)))
    family = AssignmentFamily(dim_s, dim_b, members)
    audit = audit_family(family)
    src = np.stack([vec(m) for m in family.marginals], axis=1)
    pre = np.stack([vec(m.mat) for m in family.members], axis=1)
    assignment = pre @ np.linalg.pinv(src, rcond=1e-10)
    embed_err = 0.0
    probes = [random_density(dim_s, rng) for _ in range(5)]
    probes += [np.eye(dim_s)[:, [j]] @ np.eye(dim_s)[[k], :]
               for j in range(dim_s) for k in range(dim_s)]
    for s in probes:
        embed_err = max(embed_err, float(np.max(np.abs(
            assignment @ vec(s) - vec(np.kron(s, rho_fid))))))
    superop_err, worst_eig = 0.0, np.inf
    for _ in range(n_unitaries):
        u = matlin.haar_unitary(dim_s * dim_b, rng)
        l_induced = induced_map(family, u)
        l_folk = folklore_map(rho_fid, u)
        superop_err = max(superop_err, float(np.max(np.abs(l_induced.mat - l_folk.mat))))
        worst_eig = min(worst_eig, cp_verdict(l_induced).min_choi_eigenvalue)
    metrics.update({"pairsUsed": len(pairs), "fiducialIsState": fid_ok,
                    "embeddingResidual": embed_err, "superoperatorResidual": superop_err,
                    "worstInducedMinChoiEigenvalue": worst_eig,
                    "closureSpread": spread})
    stage4_resid = max(spread, embed_err, superop_err)
    stages.append(Stage("span-closure",
                        fid_ok and audit.injective and audit.full_span
                        and spread <= COLLAPSE_TOL and embed_err <= EMBED_TOL
                        and superop_err <= EMBED_TOL and worst_eig >= -CP_TOL,
                        stage4_resid))
    return ExperimentReport(
        name, {"dimS": dim_s, "dimB": dim_b, "seed": seed, "pureSamples": n_pure,
               "unitaries": n_unitaries},
        metrics=metrics, stages=stages)


# -- classical (commuting) families ------------------------------------------

def exp_commuting_gap(dim_s=3, dim_b=2, samples=50, seed=0, equal_baths=False):
    """Fixed-basis classical-quantum families only span the diagonal operators."""
    name = "commuting-gap"
    rng = trial_rng(seed, name)
    basis = matlin.haar_unitary(dim_s, rng)
    if equal_baths:
        baths = [random_density(dim_b, rng)] * dim_s
    else:
        baths = [random_density(dim_b, rng) for _ in range(dim_s)]
    members, records = [], []
    for i in range(samples):
        p = rng.dirichlet(np.ones(dim_s))
        members.append(cq_state(CQSpec(p, basis, baths)))
        records.append({"trial": i, "simplexCoords": p.tolist()})
    family = AssignmentFamily(dim_s, dim_b, members)
    report = audit_family(family)
    try:
        induced_map(family, matlin.haar_unitary(dim_s * dim_b, rng))
        underdetermined = False
    except Underdetermined:
        underdetermined = True
    return ExperimentReport(
        name, {"dimS": dim_s, "dimB": dim_b, "samples": samples, "seed": seed,
               "equalBaths": equal_baths},
        metrics={"spanDim": report.span_dim, "affineDim": report.affine_dim,
                 "fullSpanDim": dim_s ** 2, "underdetermined": underdetermined},
        stages=[Stage("span-dimension", report.span_dim == dim_s,
                      abs(report.span_dim - dim_s)),
                Stage("affine-dimension", report.affine_dim == dim_s - 1,
                      abs(report.affine_dim - dim_s + 1)),
                Stage("underdetermined", underdetermined, 0.0 if underdetermined else 1.0)],
        trials=records)


# -- correlated assignments and the search for non-CP maps --------------------

def correlation_term(sigma, dim_s, dim_b):
    """``sum_{u>=1} tr(sigma lambda_u) lambda_u (x) gamma_u`` over the shared index range."""
    lam, gam = matlin.gell_mann_basis(dim_s), matlin.gell_mann_basis(dim_b)
    top = min(dim_s, dim_b) ** 2
    return sum(np.trace(sigma @ lam[u]) * np.kron(lam[u], gam[u]) for u in range(1, top))


def correlated_assignment(sigma, dim_s, dim_b, eps):
    """``sigma (x) I/dB + eps * correlation_term(sigma)``; linear, bath-traceless perturbation."""
    return (np.kron(sigma, np.eye(dim_b) / dim_b)
            + eps * correlation_term(sigma, dim_s, dim_b))


def _choi_min_eig_fn(unit_images, dim_s, dim_b):
    stack = np.array([unit_images[j][k] for j in range(dim_s) for k in range(dim_s)])

    def min_eig(u):
        ev = u @ stack @ u.conj().T
        red = np.trace(ev.reshape(-1, dim_s, dim_b, dim_s, dim_b), axis1=2, axis2=4)
        choi = red.reshape(dim_s, dim_s, dim_s, dim_s).transpose(0, 2, 1, 3)
        choi = choi.reshape(dim_s ** 2, dim_s ** 2)
        return float(np.linalg.eigvalsh(0.5 * (choi + choi.conj().T))[0])

    return min_eig


def search_non_cp(assign, dim_s, dim_b, budget, rng):
    """Minimize the smallest Choi eigenvalue of the induced map over joint unitaries.

    ``assign`` maps system operators to joint operators linearly. A fifth of
    the evaluation budget goes to Haar sampling; the rest to a Nelder-Mead
    descent over Givens perturbations of the best sample.
    """
    n = dim_s * dim_b
    units = [[assign(np.outer(np.eye(dim_s)[j], np.eye(dim_s)[k]))
              for k in range(dim_s)] for j in range(dim_s)]
    min_eig = _choi_min_eig_fn(units, dim_s, dim_b)
    n_haar = max(1, budget // 5)
    best_u, best = None, np.inf
    for _ in range(n_haar):
        u = matlin.haar_unitary(n, rng)
        val = min_eig(u)
        if val < best:
            best_u, best = u, val
    remaining = budget - n_haar
    if remaining > 0:
        npar = matlin.n_givens_params(n)
        simplex = np.vstack([np.zeros(npar), 0.3 * np.eye(npar)])
        fit = minimize(lambda x: min_eig(best_u @ matlin.givens_unitary(x, n)),
                       np.zeros(npar), method="Nelder-Mead",
                       options={"maxfev": remaining, "initial_simplex": simplex})
        if fit.fun < best:
            best_u, best = best_u @ matlin.givens_unitary(fit.x, n), float(fit.fun)
    return best_u, best


def exp_sl_necessity(dim_s=2, dim_b=2, eps=0.1, budget=500, seed=0, cp_tol=CP_TOL,
                     discord_tol=DISCORD_TOL, gap_tol=GAP_TOL, mix=0.5):
    """Discordant, injective, full-span assignments admit non-CP induced maps.

    Members are ``correlated_assignment(sigma_i)`` for ``dS^2`` states
    ``sigma_i = (1 - mix) I/dS + mix rho_i`` near the maximally mixed state.
    With ``eps == 0`` the family is folklore and the search must find nothing.
    """
    name = "sl-necessity"
    rng = trial_rng(seed, name)
    sigmas = [(1 - mix) * np.eye(dim_s) / dim_s + mix * random_density(dim_s, rng)
              for _ in range(dim_s ** 2)]
    eps_used = eps
    for _ in range(11):
        joint = [correlated_assignment(s, dim_s, dim_b, eps_used) for s in sigmas]
        min_member_eig = min(float(np.linalg.eigvalsh(m)[0]) for m in joint)
        if min_member_eig >= -1e-12:
            break
        eps_used /= 2
    else:
        raise ConstructionFailed(f"members not positive down to eps={eps_used:g}")
    family = AssignmentFamily(dim_s, dim_b, [0.5 * (m + m.conj().T) for m in joint])
    audit = audit_family(family)
    stages = [Stage("construction", audit.injective and audit.full_span, min_member_eig)]
    metrics = {"epsUsed": eps_used, "minMemberEigenvalue": min_member_eig}
    records = []

    def assign(x):
        return correlated_assignment(x, dim_s, dim_b, eps_used)

    if eps_used > 0:
        residuals = [zero_discord_test(m, discord_tol, gap_tol).residual
                     for m in family.members]
        records = [{"trial": i, "discordResidual": r} for i, r in enumerate(residuals)]
        metrics["maxDiscordResidual"] = max(residuals)
        stages.append(Stage("members-discordant", max(residuals) > 1e-3, max(residuals)))

        u, best = search_non_cp(assign, dim_s, dim_b, budget, rng)
        verdict = cp_verdict(induced_map(family, u), cp_tol)
        metrics["bestViolation"] = verdict.min_choi_eigenvalue
        metrics["searchObjective"] = best
        stages.append(Stage("violation-found",
                            verdict.min_choi_eigenvalue <= VIOLATION_THRESHOLD,
                            verdict.min_choi_eigenvalue))

    ctrl_family = AssignmentFamily(
        dim_s, dim_b, [np.kron(s, np.eye(dim_b) / dim_b) for s in sigmas])
    u0, _ = search_non_cp(lambda x: correlated_assignment(x, dim_s, dim_b, 0.0),
                          dim_s, dim_b, budget, trial_rng(seed, name, 1))
    ctrl = cp_verdict(induced_map(ctrl_family, u0), cp_tol).min_choi_eigenvalue
    metrics["controlBestMinChoiEigenvalue"] = ctrl
    stages.append(Stage("folklore-control", ctrl >= -cp_tol, ctrl))
    return ExperimentReport(
        name, {"dimS": dim_s, "dimB": dim_b, "eps": eps, "budget": budget, "seed": seed,
               "cpTol": cp_tol, "discordTol": discord_tol, "gapTol": gap_tol, "mix": mix},
        metrics=metrics, stages=stages, trials=records)


EXPERIMENTS = {
    "folklore-cp": exp_folklore_cp,
    "property1-witness": exp_property1,
    "hadamard-constraint": exp_hadamard_constraint,
    "theorem2-pipeline": exp_theorem2_pipeline,
    "commuting-gap": exp_commuting_gap,
    "sl-necessity": exp_sl_necessity,
}
