"""Assignment families, induced system maps, and complete-positivity checks.

Superoperators act on column-stacked operators: ``vec(X)`` stacks the
columns of X, so entry ``X[j, k]`` lands at position ``k * d + j`` and
``vec(A X B) = (B^T (x) A) vec(X)``. Choi matrices are unnormalized,
``C = sum_jk E_jk (x) L(E_jk)``.
"""
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np
from scipy.optimize import minimize

from . import matlin
from .correlations import BipartiteState
from .errors import (DimensionMismatch, EmptyFamily, InconsistentImages, NotCP,
                     NotInjective, NotUnitary, ParseError, PreconditionViolated,
                     Underdetermined, WitnessNotFound)
from .states import check_density

CP_TOL = 1e-9
AUDIT_TOL = 1e-9
RANK_CUTOFF = 1e-10
FIT_TOL = 1e-9
MAX_TRIALS = 200


def vec(x):
    return np.asarray(x).reshape(-1, order="F")


def unvec(v, d=None):
    v = np.asarray(v)
    if d is None:
        d = int(round(np.sqrt(v.size)))
    return v.reshape(d, d, order="F")


def matrix_unit(j, k, d):
    e = np.zeros((d, d), dtype=np.complex128)
    e[j, k] = 1.0
    return e


@dataclass(frozen=True, eq=False)
class Superoperator:
    mat: np.ndarray
    dim: int

    def __post_init__(self):
        m = np.asarray(self.mat, dtype=np.complex128)
        if m.shape != (self.dim ** 2, self.dim ** 2):
            raise DimensionMismatch(f"superoperator of shape {m.shape} for dim {self.dim}")
        if not np.all(np.isfinite(m)):
            raise ValueError("superoperator has non-finite entries")
        object.__setattr__(self, "mat", m)

    def __call__(self, x):
        return unvec(self.mat @ vec(x), self.dim)

    def __add__(self, other):
        return Superoperator(self.mat + other.mat, self.dim)

    def __rmul__(self, alpha):
        return Superoperator(alpha * self.mat, self.dim)

    def to_dict(self):
        return {"kind": "superop", "dim": self.dim, "convention": "column-stacking",
                "re": self.mat.real.ravel().tolist(), "im": self.mat.imag.ravel().tolist()}

    @classmethod
    def from_dict(cls, obj):
        return cls(*_operator_record(obj, "superop"))

    @classmethod
    def from_function(cls, fn, d):
        """Tabulate a linear map given as a Python callable on d x d matrices."""
        cols = [vec(fn(matrix_unit(j, k, d))) for k in range(d) for j in range(d)]
        return cls(np.stack(cols, axis=1), d)

    @classmethod
    def from_kraus(cls, kraus):
        kraus = [np.asarray(k) for k in kraus]
        d = kraus[0].shape[0]
        return cls(sum(np.kron(k.conj(), k) for k in kraus), d)


@dataclass(frozen=True, eq=False)
class ChoiMatrix:
    mat: np.ndarray
    dim: int

    def to_dict(self):
        return {"kind": "choi", "dim": self.dim, "convention": "column-stacking",
                "re": self.mat.real.ravel().tolist(), "im": self.mat.imag.ravel().tolist()}

    @classmethod
    def from_dict(cls, obj):
        return cls(*_operator_record(obj, "choi"))


def _operator_record(obj, kind):
    if obj.get("kind") != kind:
        raise ParseError(f"expected kind {kind!r}, got {obj.get('kind')!r}")
    if obj.get("convention", "column-stacking") != "column-stacking":
        raise ParseError(f"unsupported vec convention {obj['convention']!r}")
    try:
        d = int(obj["dim"])
        n = d * d
        m = matlin.matrix_from_dict({"dims": [n, n], "re": obj["re"], "im": obj["im"]})
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed {kind} record: {exc}") from exc
    return m, d


def identity_map(d):
    return Superoperator(np.eye(d * d), d)


def transpose_map(d):
    return Superoperator.from_function(lambda x: x.T, d)


def unitary_map(v):
    v = np.asarray(v)
    return Superoperator(np.kron(v.conj(), v), v.shape[0])


def constant_map(rho):
    """``X -> trace(X) rho``."""
    rho = np.asarray(rho)
    return Superoperator.from_function(lambda x: np.trace(x) * rho, rho.shape[0])


def choi_of(l):
    d = l.dim
    c = sum(np.kron(matrix_unit(j, k, d), l(matrix_unit(j, k, d)))
            for j in range(d) for k in range(d))
    return ChoiMatrix(c, d)


@dataclass(frozen=True)
class CPVerdict:
    is_cp: bool
    min_choi_eigenvalue: float
    is_tp: bool
    tp_residual: float
    is_herm_preserving: bool

    def to_dict(self):
        return {"isCP": self.is_cp, "minChoiEigenvalue": self.min_choi_eigenvalue,
                "isTP": self.is_tp, "tpResidual": self.tp_residual,
                "isHermPreserving": self.is_herm_preserving}


def cp_verdict(l, tol=CP_TOL):
    """Complete positivity and trace preservation from the Choi matrix."""
    c = choi_of(l).mat
    herm = matlin.hermiticity_error(c) <= 1e-8
    min_eig = float(np.linalg.eigvalsh(0.5 * (c + matlin.dagger(c)))[0])
    d = l.dim
    traces = np.array([[np.trace(l(matrix_unit(j, k, d))) for k in range(d)]
                       for j in range(d)])
    tp_res = float(np.max(np.abs(traces - np.eye(d))))
    return CPVerdict(is_cp=bool(herm and min_eig >= -tol), min_choi_eigenvalue=min_eig,
                     is_tp=tp_res <= tol, tp_residual=tp_res, is_herm_preserving=bool(herm))


def kraus_from_choi(c, tol=CP_TOL):
    """Kraus operators ``K_i = sqrt(mu_i) unvec(v_i)`` from the Choi spectrum."""
    w, v = matlin.herm_eig(c.mat, tol=1e-8)
    if w[0] < -tol:
        raise NotCP(f"Choi matrix has eigenvalue {w[0]:.3e}")
    return [np.sqrt(mu) * unvec(v[:, i], c.dim) for i, mu in enumerate(w) if mu > tol]


@dataclass(eq=False)
class AssignmentFamily:
    """An enumerated collection of joint initial states and their marginals."""

    dim_s: int
    dim_b: int
    members: list = field(default_factory=list)

    def __post_init__(self):
        members = []
        for m in self.members:
            if not isinstance(m, BipartiteState):
                m = BipartiteState(m, self.dim_s, self.dim_b)
            if (m.dim_s, m.dim_b) != (self.dim_s, self.dim_b):
                raise DimensionMismatch("family members must share factor dimensions")
            members.append(m)
        self.members = members

    @property
    def marginals(self):
        return [m.system for m in self.members]

    def __len__(self):
        return len(self.members)


@dataclass(frozen=True)
class AuditReport:
    injective: bool
    colliding_pairs: list
    span_dim: int
    affine_dim: int
    full_span: bool

    def to_dict(self):
        return {"injective": self.injective,
                "collidingPairs": [list(p) for p in self.colliding_pairs],
                "spanDim": self.span_dim, "affineDim": self.affine_dim,
                "fullSpan": self.full_span}


def numerical_rank(a, cutoff=RANK_CUTOFF, atol=1e-12):
    """Count singular values above ``cutoff`` times the largest (and above ``atol``)."""
    s = np.linalg.svd(np.atleast_2d(a), compute_uv=False)
    if s.size == 0:
        return 0
    return int(np.sum(s > max(cutoff * s[0], atol)))


def audit_family(omega, tol=AUDIT_TOL):
    """Check that marginals determine members uniquely and measure their span."""
    if len(omega) == 0:
        raise EmptyFamily("assignment family has no members")
    margs = omega.marginals
    pairs = [(i, j) for i, j in combinations(range(len(omega)), 2)
             if matlin.dist(margs[i], margs[j], "frobenius") <= tol
             and matlin.dist(omega.members[i].mat, omega.members[j].mat, "frobenius") > tol]
    span_dim = numerical_rank(np.array([vec(m) for m in margs]))
    diffs = [matlin.hermitian_coords(m - margs[0]) for m in margs[1:]]
    affine_dim = numerical_rank(np.array(diffs)) if diffs else 0
    return AuditReport(injective=not pairs, colliding_pairs=pairs, span_dim=span_dim,
                       affine_dim=affine_dim, full_span=span_dim == omega.dim_s ** 2)


def folklore_map(rho_b_fid, u):
    """``X -> Tr_B[u (X (x) rho_B) u^dagger]`` as a superoperator."""
    rho_b = check_density(rho_b_fid)
    u = np.asarray(u, dtype=np.complex128)
    if not matlin.is_unitary(u, 1e-10):
        raise NotUnitary("joint evolution is not unitary")
    d_b = rho_b.shape[0]
    d_s, rem = divmod(u.shape[0], d_b)
    if rem:
        raise DimensionMismatch("unitary size is not a multiple of the bath dimension")
    ud = matlin.dagger(u)
    return Superoperator.from_function(
        lambda x: matlin.partial_trace_bath(u @ np.kron(x, rho_b) @ ud, d_s, d_b), d_s)


def induced_map(omega, u, audit_tol=AUDIT_TOL):
    """The unique linear system map fixed by a family and a joint unitary.

    Requires an injective, full-span family; the map is the least-squares
    linear extension of ``marginal_i -> Tr_B[u member_i u^dagger]``.
    """
    report = audit_family(omega, audit_tol)
    if not report.injective:
        raise NotInjective(f"members {report.colliding_pairs} share a marginal")
    if not report.full_span:
        raise Underdetermined(
            f"marginals span {report.span_dim} of {omega.dim_s ** 2} dimensions")
    u = np.asarray(u, dtype=np.complex128)
    if not matlin.is_unitary(u, 1e-10):
        raise NotUnitary("joint evolution is not unitary")
    d_s, d_b = omega.dim_s, omega.dim_b
    ud = matlin.dagger(u)
    src = np.stack([vec(m) for m in omega.marginals], axis=1)
    img = np.stack([vec(matlin.partial_trace_bath(u @ m.mat @ ud, d_s, d_b))
                    for m in omega.members], axis=1)
    l = img @ np.linalg.pinv(src, rcond=RANK_CUTOFF)
    resid = float(np.max(np.abs(l @ src - img)))
    if resid > FIT_TOL:
        raise InconsistentImages(f"linear fit residual {resid:.3e}")
    return Superoperator(l, d_s)


def witness_strength(delta, u, d_s, d_b):
    """Frobenius norm of the system-visible part of ``u delta u^dagger``."""
    return float(np.linalg.norm(
        matlin.partial_trace_bath(u @ delta @ matlin.dagger(u), d_s, d_b)))


def illdefinedness_witness(delta, d_s, d_b, rng, max_trials=MAX_TRIALS):
    """Find a joint unitary that makes a bath-invisible difference visible.

    ``delta`` is the difference of two joint states with the same system
    marginal. Returns ``u`` with ``witness_strength(delta, u) >= 1e-3 |delta|_F``.
    Haar samples are tried first; after half the budget the best sample is
    refined by local ascent over Givens perturbations.
    """
    delta = np.asarray(delta, dtype=np.complex128)
    n = d_s * d_b
    if delta.shape != (n, n):
        raise PreconditionViolated(f"delta of shape {delta.shape} for dims {d_s}x{d_b}")
    norm = np.linalg.norm(delta)
    if norm <= 1e-10:
        raise PreconditionViolated("delta is zero")
    if matlin.hermiticity_error(delta) > 1e-10:
        raise PreconditionViolated("delta is not Hermitian")
    if np.max(np.abs(matlin.partial_trace_bath(delta, d_s, d_b))) > 1e-10:
        raise PreconditionViolated("delta has a nonzero system marginal")
    threshold = 1e-3 * norm

    best_u, best_g = None, -1.0
    half = max(1, max_trials // 2)
    for _ in range(half):
        u = matlin.haar_unitary(n, rng)
        g = witness_strength(delta, u, d_s, d_b)
        if g > best_g:
            best_u, best_g = u, g
        if best_g >= threshold:
            return best_u

    def neg_g(x):
        return -witness_strength(delta, best_u @ matlin.givens_unitary(x, n), d_s, d_b)

    fit = minimize(neg_g, np.zeros(matlin.n_givens_params(n)), method="Nelder-Mead",
                   options={"maxfev": max(1, max_trials - half) * n})
    u = best_u @ matlin.givens_unitary(fit.x, n)
    if witness_strength(delta, u, d_s, d_b) >= threshold:
        return u
    raise WitnessNotFound(f"best strength {max(best_g, -fit.fun):.3e} < {threshold:.3e}")
