import numpy as np
import pytest

from qdplab import matlin, states
from qdplab.errors import InvalidState, NotDiagonalInBasis, ParseError


def test_random_density_valid(rng):
    for _ in range(1000):
        rho = states.random_density(3, rng)
        assert abs(np.trace(rho) - 1) <= 1e-12
        assert np.linalg.eigvalsh(rho)[0] >= -1e-12
        assert not states.density_failures(rho)


def test_random_density_mean_purity():
    # Hilbert-Schmidt measure: E tr(rho^2) = 2d / (d^2 + 1), i.e. 0.8 for a qubit
    rng = np.random.default_rng(3)
    purity = [np.trace(r @ r).real for r in (states.random_density(2, rng) for _ in range(100_000))]
    assert abs(np.mean(purity) - 4 / 5) <= 0.01


def test_random_pure(rng):
    psi = states.random_pure(4, rng)
    assert abs(np.linalg.norm(psi) - 1) <= 1e-12
    x = [abs(states.random_pure(4, rng)[0]) ** 2 for _ in range(10_000)]
    assert abs(np.mean(x) - 0.25) <= 0.01
    a = states.random_pure(4, np.random.default_rng(9))
    b = states.random_pure(4, np.random.default_rng(9))
    assert np.array_equal(a, b)


class TestSpectrumClass:
    def test_centre_triply_degenerate(self):
        sc = states.spectrum_class(np.eye(3) / 3)
        assert sc.label == "degenerate"
        assert sc.min_gap == pytest.approx(0, abs=1e-15)

    def test_generic_point(self):
        assert states.spectrum_class(np.diag([0.5, 0.3, 0.2])).label == "nondegenerate"

    def test_bisector_point(self):
        sc = states.spectrum_class(np.diag([0.4, 0.4, 0.2]))
        assert sc.label == "degenerate"
        assert np.allclose(sc.eigenvalues, [0.2, 0.4, 0.4])

    def test_relabeling_invariance(self, rng):
        for _ in range(20):
            rho = states.random_density(3, rng)
            perm = np.eye(3)[rng.permutation(3)]
            a = states.spectrum_class(rho)
            b = states.spectrum_class(perm @ rho @ perm.T)
            assert a.label == b.label
            assert np.allclose(a.eigenvalues, b.eigenvalues, atol=1e-14)

    def test_generic_nondegeneracy(self, rng):
        labels = [states.spectrum_class(states.random_density(3, rng), 1e-6).label
                  for _ in range(2000)]
        assert labels.count("nondegenerate") / len(labels) > 0.99


class TestSimplexCoords:
    def test_examples(self, rng):
        v = matlin.haar_unitary(3, rng)
        assert np.allclose(states.simplex_coords(np.eye(3) / 3, v), [1 / 3] * 3)
        assert np.allclose(states.simplex_coords(np.diag([1, 0, 0]), np.eye(3)), [1, 0, 0])
        assert np.allclose(states.simplex_coords(np.diag([0.5, 0.3, 0.2]), np.eye(3)),
                           [0.5, 0.3, 0.2])

    def test_degenerate_accepted(self):
        assert np.allclose(states.simplex_coords(np.diag([0.4, 0.4, 0.2]), np.eye(3)),
                           [0.4, 0.4, 0.2])

    def test_rotated_family(self, rng):
        v = matlin.haar_unitary(3, rng)
        p = rng.dirichlet(np.ones(3))
        rho = v @ np.diag(p) @ v.conj().T
        coords = states.simplex_coords(rho, v)
        assert np.allclose(coords, p, atol=1e-12)
        assert coords.sum() == pytest.approx(1)

    def test_not_diagonal(self):
        plus = np.full((2, 2), 0.5)
        with pytest.raises(NotDiagonalInBasis):
            states.simplex_coords(plus, np.eye(2))


class TestHadamard:
    def test_real_qubit(self):
        assert np.allclose(states.dft_hadamard(2), np.array([[1, 1], [1, -1]]) / np.sqrt(2))

    @pytest.mark.parametrize("d", [3, 4, 5, 7])
    def test_moduli_and_unitarity(self, d):
        h = states.dft_hadamard(d)
        assert np.max(np.abs(np.abs(h) - 1 / np.sqrt(d))) <= 1e-15
        assert np.max(np.abs(h @ h.conj().T - np.eye(d))) <= 1e-12

    def test_is_hadamard(self, rng):
        assert states.is_hadamard(states.dft_hadamard(3))
        assert not states.is_hadamard(np.eye(2))
        d1 = np.diag(np.exp(1j * rng.uniform(0, 2 * np.pi, 2)))
        d2 = np.diag(np.exp(1j * rng.uniform(0, 2 * np.pi, 2)))
        assert states.is_hadamard(d1 @ states.dft_hadamard(2) @ d2)

    def test_non_unitary_flat_matrix(self):
        assert not states.is_hadamard(np.full((2, 2), 1 / np.sqrt(2)))


class TestUnbiasedPair:
    def test_computational_pair(self):
        psi, phi = states.relatively_unbiased_pair(2, v=np.eye(2))
        assert np.allclose(psi, np.eye(2))
        assert np.allclose(phi[:, 0], np.array([1, 1]) / np.sqrt(2))
        assert np.allclose(phi[:, 1], np.array([1, -1]) / np.sqrt(2))

    @pytest.mark.parametrize("d", [2, 3, 4, 5])
    def test_uniform_overlaps(self, d, rng):
        for _ in range(20):
            psi, phi = states.relatively_unbiased_pair(d, rng)
            overlaps = np.array([[abs(np.vdot(psi[:, k], phi[:, a])) ** 2 for a in range(d)]
                                 for k in range(d)])
            assert np.max(np.abs(overlaps - 1 / d)) <= 1e-10
            for b in (psi, phi):
                assert np.max(np.abs(b.conj().T @ b - np.eye(d))) <= 1e-11


class TestDensityFile:
    def test_roundtrip(self, rng):
        rho = states.random_density(3, rng)
        assert np.allclose(states.density_from_dict(states.density_to_dict(rho)), rho)

    def test_reports_failed_invariants(self):
        obj = {"kind": "density", **matlin.matrix_to_dict(np.diag([1.5, -0.2]))}
        with pytest.raises(InvalidState) as info:
            states.density_from_dict(obj)
        assert info.value.failures == ["unit-trace", "positive-semidefinite"]

    def test_wrong_kind(self):
        with pytest.raises(ParseError):
            states.density_from_dict({"kind": "bipartite", **matlin.matrix_to_dict(np.eye(2))})
