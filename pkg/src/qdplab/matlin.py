"""Dense complex linear algebra for system-bath operators.

Matrices are plain ``numpy`` complex arrays. Composite indices are
system-major throughout: row ``(j, b)`` of an operator on H_S (x) H_B sits at
``j * dB + b``, which is exactly the ordering produced by ``np.kron(S, B)``.
"""
import json
from itertools import combinations

import numpy as np

from .errors import DimensionMismatch, NotHermitian, ParseError

HERM_TOL = 1e-10


def as_cmat(m):
    """Return ``m`` as a finite 2-D complex128 array."""
    a = np.asarray(m, dtype=np.complex128)
    if a.ndim != 2:
        raise DimensionMismatch(f"expected a 2-D matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix has non-finite entries")
    return a


def dagger(m):
    return np.conj(np.swapaxes(m, -1, -2))


def hermiticity_error(m):
    m = np.asarray(m)
    return float(np.max(np.abs(m - dagger(m)))) if m.size else 0.0


def is_hermitian(m, tol=HERM_TOL):
    m = np.asarray(m)
    return m.ndim == 2 and m.shape[0] == m.shape[1] and hermiticity_error(m) <= tol


def is_unitary(u, tol=1e-10):
    u = np.asarray(u)
    if u.ndim != 2 or u.shape[0] != u.shape[1]:
        return False
    return float(np.max(np.abs(dagger(u) @ u - np.eye(u.shape[0])))) <= tol


def kron(a, b):
    """Kronecker product; block ``(j, k)`` of the result is ``a[j, k] * b``."""
    return np.kron(as_cmat(a), as_cmat(b))


def _check_composite(m, dS, dB):
    m = np.asarray(m)
    n = dS * dB
    if m.ndim != 2 or m.shape != (n, n):
        raise DimensionMismatch(
            f"matrix of shape {m.shape} is not {n}x{n} for dS={dS}, dB={dB}")
    return m


def partial_trace_bath(m, dS, dB):
    """Trace out the second (bath) factor of an operator on H_S (x) H_B."""
    m = _check_composite(m, dS, dB)
    return np.trace(m.reshape(dS, dB, dS, dB), axis1=1, axis2=3)


def partial_trace_system(m, dS, dB):
    """Trace out the first (system) factor of an operator on H_S (x) H_B."""
    m = _check_composite(m, dS, dB)
    return np.trace(m.reshape(dS, dB, dS, dB), axis1=0, axis2=2)


def herm_eig(h, tol=HERM_TOL):
    """Eigen-decomposition of a Hermitian matrix.

    Returns ``(w, v)`` with ``w`` ascending and ``v`` unitary, columns being
    the eigenvectors. Raises :class:`NotHermitian` when the largest entry of
    ``h - h^dagger`` exceeds ``tol``.
    """
    h = as_cmat(h)
    if h.shape[0] != h.shape[1]:
        raise DimensionMismatch(f"matrix of shape {h.shape} is not square")
    err = hermiticity_error(h)
    if err > tol:
        raise NotHermitian(f"max |h - h^dagger| = {err:.3e} exceeds {tol:.1e}")
    return np.linalg.eigh(0.5 * (h + dagger(h)))


def gell_mann_basis(d):
    """Identity plus the d^2 - 1 generalized Gell-Mann matrices.

    Returns an array of shape ``(d*d, d, d)``. Element 0 is the identity.
    The remaining elements are ordered symmetric, antisymmetric, diagonal,
    and normalized so that ``trace(l_u @ l_v) == delta_uv`` for u, v >= 1.
    For d = 2 this gives ``I, sx/sqrt2, sy/sqrt2, sz/sqrt2``.
    """
    if d < 2:
        raise ValueError("dimension must be at least 2")
    out = [np.eye(d, dtype=np.complex128)]
    pairs = list(combinations(range(d), 2))
    s = 1 / np.sqrt(2)
    for j, k in pairs:
        g = np.zeros((d, d), dtype=np.complex128)
        g[j, k] = g[k, j] = s
        out.append(g)
    for j, k in pairs:
        g = np.zeros((d, d), dtype=np.complex128)
        g[j, k] = -1j * s
        g[k, j] = 1j * s
        out.append(g)
    for l in range(1, d):
        diag = np.zeros(d)
        diag[:l] = 1.0
        diag[l] = -l
        out.append(np.diag(diag / np.sqrt(l * (l + 1))).astype(np.complex128))
    return np.array(out)


def expand_coeffs(m, dS, dB):
    """Real coefficients C with ``m = sum_uv C[u, v] lambda_u (x) gamma_v``.

    ``lambda`` and ``gamma`` are the Gell-Mann bases of the system and the
    bath. ``Tr_B m == 0`` holds exactly when the column ``C[:, 0]`` vanishes.
    """
    m = _check_composite(as_cmat(m), dS, dB)
    err = hermiticity_error(m)
    if err > HERM_TOL:
        raise NotHermitian(f"max |m - m^dagger| = {err:.3e}")
    lam, gam = gell_mann_basis(dS), gell_mann_basis(dB)
    # tr(m (A (x) B)) = sum m[j,b,k,c] A[k,j] B[c,b]
    c = np.einsum("jbkc,ukj,vcb->uv", m.reshape(dS, dB, dS, dB), lam, gam)
    c[0, :] /= dS
    c[:, 0] /= dB
    if np.max(np.abs(c.imag)) > HERM_TOL:
        raise NotHermitian("expansion produced complex coefficients")
    return c.real.copy()


def resum_coeffs(c, dS, dB):
    """Inverse of :func:`expand_coeffs`."""
    c = np.asarray(c, dtype=float)
    if c.shape != (dS * dS, dB * dB):
        raise DimensionMismatch(f"coefficient array of shape {c.shape}")
    lam, gam = gell_mann_basis(dS), gell_mann_basis(dB)
    return np.einsum("uv,ujk,vab->jakb", c, lam, gam).reshape(dS * dB, dS * dB)


def hermitian_coords(h):
    """Real Gell-Mann coordinates of a Hermitian matrix (length d^2)."""
    h = np.asarray(h)
    d = h.shape[0]
    basis = gell_mann_basis(d)
    x = np.einsum("ukj,jk->u", basis, h).real
    x[0] /= d
    return x


def from_hermitian_coords(x):
    x = np.asarray(x, dtype=float)
    d = int(round(np.sqrt(x.size)))
    return np.einsum("u,ujk->jk", x, gell_mann_basis(d))


def dist(a, b, kind="trace"):
    """Trace-norm (sum of singular values) or Frobenius distance."""
    a, b = np.asarray(a), np.asarray(b)
    if a.shape != b.shape:
        raise DimensionMismatch(f"shapes {a.shape} and {b.shape} differ")
    diff = a - b
    if kind == "trace":
        if diff.ndim != 2 or diff.shape[0] != diff.shape[1]:
            raise DimensionMismatch("trace distance needs square matrices")
        return float(np.sum(np.linalg.svd(diff, compute_uv=False)))
    if kind == "frobenius":
        return float(np.linalg.norm(diff))
    raise ValueError(f"unknown distance kind {kind!r}")


def ginibre(d, rng):
    return (rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))) / np.sqrt(2)


def haar_unitary(d, rng):
    """Haar-random unitary from the QR decomposition of a Ginibre matrix.

    Column phases are fixed so that the triangular factor has a positive
    real diagonal, which makes the distribution exactly Haar.
    """
    if d < 1:
        raise ValueError("dimension must be positive")
    q, r = np.linalg.qr(ginibre(d, rng))
    diag = np.diagonal(r)
    return q * (diag / np.abs(diag))


def n_givens_params(d, phases=True):
    """Number of real parameters used by :func:`givens_unitary`."""
    return d * (d - 1) + (d if phases else 0)


def givens_unitary(params, d, phases=True):
    """Unitary built from complex Givens rotations and diagonal phases.

    One rotation per index pair ``(p, q)``, each with an angle and a phase,
    applied in lexicographic order, followed by ``d`` diagonal phases when
    ``phases`` is true. Zero parameters give the identity. With phases the
    map covers all of U(d); without them it covers U(d) modulo a diagonal
    phase matrix, which is all that matters for measurement bases.
    """
    params = np.asarray(params, dtype=float)
    if params.size != n_givens_params(d, phases):
        raise DimensionMismatch(
            f"expected {n_givens_params(d, phases)} parameters, got {params.size}")
    u = np.eye(d, dtype=np.complex128)
    i = 0
    for p, q in combinations(range(d), 2):
        theta, phi = params[i], params[i + 1]
        i += 2
        c, s = np.cos(theta), np.sin(theta)
        e = np.exp(1j * phi)
        col_p, col_q = u[:, p].copy(), u[:, q].copy()
        u[:, p] = c * col_p + np.conj(e) * s * col_q
        u[:, q] = -e * s * col_p + c * col_q
    if phases:
        u = u * np.exp(1j * params[i:])
    return u


def matrix_to_dict(m):
    m = as_cmat(m)
    return {
        "dims": [int(m.shape[0]), int(m.shape[1])],
        "re": m.real.ravel().tolist(),
        "im": m.imag.ravel().tolist(),
    }


def matrix_from_dict(obj):
    """Parse ``{"dims": [r, c], "re": [...], "im": [...]}`` (row-major)."""
    try:
        rows, cols = (int(x) for x in obj["dims"])
        re = np.asarray(obj["re"], dtype=float)
        im = np.asarray(obj["im"], dtype=float)
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed matrix record: {exc}") from exc
    if rows < 1 or cols < 1:
        raise ParseError("matrix dims must be positive")
    if re.ndim != 1 or im.ndim != 1 or re.size != rows * cols or im.size != rows * cols:
        raise ParseError(
            f"expected {rows * cols} real and imaginary entries, "
            f"got {re.size} and {im.size}")
    m = (re + 1j * im).reshape(rows, cols)
    if not np.all(np.isfinite(m)):
        raise ParseError("matrix has non-finite entries")
    return m


def load_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: {exc}") from exc


def save_json(obj, path):
    with open(path, "w") as fh:
        json.dump(obj, fh)
