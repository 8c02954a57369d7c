"""Quantum states, spectra, and relatively unbiased basis pairs.

Density matrices, pure states and orthonormal bases are plain numpy arrays;
a basis is a unitary whose *columns* are the basis vectors. Validation lives
in :func:`density_failures` / :func:`check_density`.
"""
from dataclasses import dataclass

import numpy as np

from . import matlin
from .errors import DimensionMismatch, InvalidState, NotDiagonalInBasis, ParseError

STATE_TOL = 1e-10
GAP_TOL = 1e-8


def density_failures(rho, tol=STATE_TOL):
    """Names of the density-matrix invariants that ``rho`` violates."""
    rho = np.asarray(rho)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        return ["square"]
    if not np.all(np.isfinite(rho)):
        return ["finite"]
    failures = []
    if matlin.hermiticity_error(rho) > tol:
        failures.append("hermitian")
    if abs(np.trace(rho) - 1) > tol:
        failures.append("unit-trace")
    w = np.linalg.eigvalsh(0.5 * (rho + matlin.dagger(rho)))
    if w[0] < -tol:
        failures.append("positive-semidefinite")
    return failures


def check_density(rho, tol=STATE_TOL):
    """Return ``rho`` as a complex array, raising :class:`InvalidState` if needed."""
    rho = np.asarray(rho, dtype=np.complex128)
    failures = density_failures(rho, tol)
    if failures:
        raise InvalidState(failures)
    return rho


def projector(psi):
    psi = np.asarray(psi, dtype=np.complex128).ravel()
    return np.outer(psi, psi.conj())


def random_density(d, rng):
    """Hilbert-Schmidt random state ``G G^dagger / tr(G G^dagger)``."""
    if d < 2:
        raise ValueError("dimension must be at least 2")
    g = matlin.ginibre(d, rng)
    rho = g @ matlin.dagger(g)
    rho = rho / np.trace(rho).real
    return 0.5 * (rho + matlin.dagger(rho))


def random_pure(d, rng):
    """Haar-random unit vector."""
    psi = rng.standard_normal(d) + 1j * rng.standard_normal(d)
    return psi / np.linalg.norm(psi)


def random_hermitian(d, rng):
    g = matlin.ginibre(d, rng)
    return 0.5 * (g + matlin.dagger(g))


@dataclass(frozen=True)
class SpectrumClass:
    eigenvalues: np.ndarray
    label: str
    min_gap: float

    @property
    def degenerate(self):
        return self.label == "degenerate"


def spectrum_class(rho, gap_tol=GAP_TOL):
    """Classify a state as degenerate or nondegenerate by its smallest eigen-gap."""
    w, _ = matlin.herm_eig(rho)
    min_gap = float(np.min(np.diff(w))) if w.size > 1 else np.inf
    label = "degenerate" if min_gap <= gap_tol else "nondegenerate"
    return SpectrumClass(eigenvalues=w, label=label, min_gap=min_gap)


def simplex_coords(rho, basis, tol=1e-8):
    """Diagonal of ``rho`` in ``basis``: its point in the probability simplex.

    Raises :class:`NotDiagonalInBasis` if ``rho`` has off-diagonal weight
    above ``tol`` in that basis, i.e. it does not belong to the commuting
    family spanned by the basis projectors.
    """
    rho, basis = np.asarray(rho), np.asarray(basis)
    if rho.shape != basis.shape:
        raise DimensionMismatch("state and basis dimensions differ")
    r = matlin.dagger(basis) @ rho @ basis
    off = r - np.diag(np.diagonal(r))
    if np.max(np.abs(off)) > tol:
        raise NotDiagonalInBasis(f"off-diagonal weight {np.max(np.abs(off)):.3e}")
    return np.diagonal(r).real.copy()


def dft_hadamard(d):
    """Character table of the cyclic group Z_d, scaled to be unitary."""
    if d < 2:
        raise ValueError("dimension must be at least 2")
    k = np.arange(d)
    return np.exp(2j * np.pi * np.outer(k, k) / d) / np.sqrt(d)


def is_hadamard(u, tol=1e-10):
    """True if ``u`` is unitary and every entry has modulus 1/sqrt(d)."""
    u = np.asarray(u)
    if u.ndim != 2 or u.shape[0] != u.shape[1]:
        raise DimensionMismatch("Hadamard test needs a square matrix")
    d = u.shape[0]
    if not matlin.is_unitary(u, tol):
        return False
    return bool(np.max(np.abs(np.abs(u) - 1 / np.sqrt(d))) <= tol)


def relatively_unbiased_pair(d, rng=None, v=None, hadamard=None):
    """Two orthonormal bases with all overlaps of modulus 1/sqrt(d).

    The first basis is the columns of ``v`` (Haar-random if not given); the
    second is ``v @ H`` for the DFT Hadamard ``H`` unless another complex
    Hadamard matrix is supplied.
    """
    if v is None:
        if rng is None:
            raise ValueError("need either rng or v")
        v = matlin.haar_unitary(d, rng)
    h = dft_hadamard(d) if hadamard is None else np.asarray(hadamard)
    return np.asarray(v, dtype=np.complex128), v @ h


def basis_projectors(basis):
    basis = np.asarray(basis)
    return np.einsum("ik,jk->kij", basis, basis.conj())


def density_to_dict(rho):
    return {"kind": "density", **matlin.matrix_to_dict(rho)}


def density_from_dict(obj, tol=STATE_TOL):
    if obj.get("kind") != "density":
        raise ParseError(f"expected kind 'density', got {obj.get('kind')!r}")
    return check_density(matlin.matrix_from_dict(obj), tol)
