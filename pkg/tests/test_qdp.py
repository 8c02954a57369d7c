import numpy as np
import pytest

from qdplab import matlin, qdp, states
from qdplab.correlations import BipartiteState, CQSpec, cq_state, product_embed
from qdplab.errors import (DimensionMismatch, EmptyFamily, InconsistentImages, NotCP,
                           NotInjective, NotUnitary, ParseError, PreconditionViolated,
                           Underdetermined)
from qdplab.qdp import AssignmentFamily

SWAP = np.eye(4)[[0, 2, 1, 3]].astype(complex)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Z = np.diag([1.0, -1.0]).astype(complex)


def product_family(rho_b, d_s, rng, n=None):
    n = d_s ** 2 if n is None else n
    return AssignmentFamily(d_s, rho_b.shape[0],
                            [product_embed(states.random_density(d_s, rng), rho_b)
                             for _ in range(n)])


class TestVec:
    def test_column_stacking(self):
        x = np.array([[1, 2], [3, 4]])
        assert np.array_equal(qdp.vec(x), [1, 3, 2, 4])
        assert np.array_equal(qdp.unvec(qdp.vec(x)), x)

    def test_superop_columns(self, rng):
        l = qdp.unitary_map(matlin.haar_unitary(3, rng))
        for j in range(3):
            for k in range(3):
                e = qdp.matrix_unit(j, k, 3)
                assert np.allclose(l.mat[:, k * 3 + j], qdp.vec(l(e)))


class TestChoi:
    def test_identity_is_unnormalized_bell(self):
        phi = np.array([1, 0, 0, 1])
        assert np.allclose(qdp.choi_of(qdp.identity_map(2)).mat, np.outer(phi, phi))

    def test_transpose_is_swap(self):
        assert np.allclose(qdp.choi_of(qdp.transpose_map(2)).mat, SWAP)

    def test_constant_map(self):
        c = qdp.choi_of(qdp.constant_map(np.eye(2) / 2)).mat
        assert np.allclose(c, np.eye(4) / 2)

    def test_linearity(self, rng):
        a = qdp.unitary_map(matlin.haar_unitary(2, rng))
        b = qdp.constant_map(states.random_density(2, rng))
        lhs = qdp.choi_of(0.3 * a + 0.7 * b).mat
        rhs = 0.3 * qdp.choi_of(a).mat + 0.7 * qdp.choi_of(b).mat
        assert np.max(np.abs(lhs - rhs)) <= 1e-14

    def test_unitary_channel_rank_one(self, rng):
        for d in (2, 3):
            c = qdp.choi_of(qdp.unitary_map(matlin.haar_unitary(d, rng))).mat
            assert qdp.numerical_rank(c) == 1
            assert np.trace(c).real == pytest.approx(d)


class TestCPVerdict:
    def test_identity(self):
        v = qdp.cp_verdict(qdp.identity_map(3))
        assert v.is_cp and v.is_tp and v.is_herm_preserving

    def test_transpose(self):
        v = qdp.cp_verdict(qdp.transpose_map(2))
        assert not v.is_cp and v.is_tp
        assert v.min_choi_eigenvalue == pytest.approx(-1, abs=1e-9)

    def test_non_trace_preserving(self):
        v = qdp.cp_verdict(2.0 * qdp.identity_map(2))
        assert v.is_cp and not v.is_tp
        assert v.tp_residual == pytest.approx(1.0)

    def test_record_fields(self):
        assert set(qdp.cp_verdict(qdp.identity_map(2)).to_dict()) == {
            "isCP", "minChoiEigenvalue", "isTP", "tpResidual", "isHermPreserving"}


class TestKraus:
    def test_identity(self):
        ks = qdp.kraus_from_choi(qdp.choi_of(qdp.identity_map(2)))
        assert len(ks) == 1
        k = ks[0]
        # one Kraus operator equal to the identity up to a global phase
        assert np.allclose(k * np.conj(k[0, 0]) / abs(k[0, 0]), np.eye(2))

    def test_constant_map_count(self, rng):
        rho = states.random_density(3, rng)
        ks = qdp.kraus_from_choi(qdp.choi_of(qdp.constant_map(rho)))
        assert len(ks) == 9
        rank2 = 0.5 * np.eye(3) - 0.5 * np.diag([0, 0, 1])
        assert len(qdp.kraus_from_choi(qdp.choi_of(qdp.constant_map(rank2)))) == 6

    def test_transpose_rejected(self):
        with pytest.raises(NotCP):
            qdp.kraus_from_choi(qdp.choi_of(qdp.transpose_map(2)))

    def test_roundtrip_folklore(self, rng):
        for _ in range(20):
            l = qdp.folklore_map(states.random_density(2, rng), matlin.haar_unitary(4, rng))
            back = qdp.Superoperator.from_kraus(qdp.kraus_from_choi(qdp.choi_of(l)))
            assert np.max(np.abs(back.mat - l.mat)) <= 1e-9


class TestFolkloreMap:
    def test_identity_unitary(self, rng):
        l = qdp.folklore_map(states.random_density(2, rng), np.eye(4))
        assert np.allclose(l.mat, np.eye(4), atol=1e-14)

    def test_swap_gives_constant_map(self, rng):
        rho_b = states.random_density(2, rng)
        l = qdp.folklore_map(rho_b, SWAP)
        assert np.allclose(qdp.choi_of(l).mat, np.kron(np.eye(2), rho_b), atol=1e-14)

    @pytest.mark.parametrize("d_s,d_b", [(2, 2), (2, 3), (3, 2)])
    def test_random_maps_are_cptp(self, d_s, d_b, rng):
        for _ in range(70):
            l = qdp.folklore_map(states.random_density(d_b, rng),
                                 matlin.haar_unitary(d_s * d_b, rng))
            v = qdp.cp_verdict(l)
            assert v.min_choi_eigenvalue >= -1e-10 and v.tp_residual <= 1e-12

    def test_rejects_non_unitary(self):
        with pytest.raises(NotUnitary):
            qdp.folklore_map(np.eye(2) / 2, 1.01 * np.eye(4))

    def test_rejects_size(self):
        with pytest.raises(DimensionMismatch):
            qdp.folklore_map(np.eye(2) / 2, np.eye(5))


class TestAudit:
    def test_product_family_full_span(self, rng):
        report = qdp.audit_family(product_family(states.random_density(2, rng), 2, rng))
        assert report.injective and report.full_span
        assert (report.span_dim, report.affine_dim) == (4, 3)

    def test_collision_detected(self, rng):
        rs = states.random_density(2, rng)
        a = product_embed(rs, np.diag([1.0, 0.0]))
        b = product_embed(rs, np.diag([0.0, 1.0]))
        report = qdp.audit_family(AssignmentFamily(2, 2, [a, b]))
        assert not report.injective and report.colliding_pairs == [(0, 1)]

    def test_duplicate_member_is_not_a_collision(self, rng):
        a = product_embed(states.random_density(2, rng), np.eye(2) / 2)
        assert qdp.audit_family(AssignmentFamily(2, 2, [a, a])).injective

    def test_shuffle_invariance(self, rng):
        fam = product_family(states.random_density(2, rng), 2, rng, n=7)
        base = qdp.audit_family(fam)
        for _ in range(5):
            order = rng.permutation(len(fam))
            r = qdp.audit_family(AssignmentFamily(2, 2, [fam.members[i] for i in order]))
            assert (r.span_dim, r.affine_dim, r.injective) == (
                base.span_dim, base.affine_dim, base.injective)

    def test_empty(self):
        with pytest.raises(EmptyFamily):
            qdp.audit_family(AssignmentFamily(2, 2, []))

    def test_mixed_dimensions(self):
        with pytest.raises(DimensionMismatch):
            AssignmentFamily(2, 2, [BipartiteState(np.eye(6) / 6, 2, 3)])

    def test_record_fields(self, rng):
        d = qdp.audit_family(product_family(np.eye(2) / 2, 2, rng)).to_dict()
        assert set(d) == {"injective", "collidingPairs", "spanDim", "affineDim", "fullSpan"}


class TestInducedMap:
    def test_agrees_with_folklore(self, rng):
        for d_s, d_b in [(2, 2), (2, 3), (3, 2)]:
            rho_b = states.random_density(d_b, rng)
            u = matlin.haar_unitary(d_s * d_b, rng)
            fam = product_family(rho_b, d_s, rng, n=d_s ** 2 + 2)
            got = qdp.induced_map(fam, u)
            assert np.max(np.abs(got.mat - qdp.folklore_map(rho_b, u).mat)) <= 1e-9

    def test_enumeration_independence(self, rng):
        rho_b = states.random_density(2, rng)
        u = matlin.haar_unitary(4, rng)
        fam = product_family(rho_b, 2, rng, n=6)
        ref = qdp.induced_map(fam, u).mat
        for _ in range(5):
            order = rng.permutation(6)
            other = AssignmentFamily(2, 2, [fam.members[i] for i in order])
            assert np.max(np.abs(qdp.induced_map(other, u).mat - ref)) <= 1e-10

    def test_different_spanning_sets_agree(self, rng):
        rho_b = states.random_density(3, rng)
        u = matlin.haar_unitary(6, rng)
        a = qdp.induced_map(product_family(rho_b, 2, rng), u).mat
        b = qdp.induced_map(product_family(rho_b, 2, rng, n=9), u).mat
        assert np.max(np.abs(a - b)) <= 1e-9

    def test_classical_family_underdetermined(self, rng):
        basis = matlin.haar_unitary(2, rng)
        baths = [states.random_density(2, rng) for _ in range(2)]
        fam = AssignmentFamily(2, 2, [cq_state(CQSpec(rng.dirichlet([1, 1]), basis, baths))
                                      for _ in range(10)])
        with pytest.raises(Underdetermined):
            qdp.induced_map(fam, matlin.haar_unitary(4, rng))

    def test_collision_not_injective(self, rng):
        rs = states.random_density(2, rng)
        fam = product_family(np.eye(2) / 2, 2, rng)
        fam = AssignmentFamily(2, 2, fam.members + [product_embed(rs, np.diag([1.0, 0])),
                                                    product_embed(rs, np.diag([0, 1.0]))])
        with pytest.raises(NotInjective):
            qdp.induced_map(fam, matlin.haar_unitary(4, rng))

    def test_nonlinear_assignment_inconsistent(self, rng):
        # bath state depends on the system state nonlinearly
        members = []
        for _ in range(8):
            rs = states.random_density(2, rng)
            members.append(product_embed(rs, rs))
        with pytest.raises(InconsistentImages):
            qdp.induced_map(AssignmentFamily(2, 2, members), matlin.haar_unitary(4, rng))


class TestWitness:
    def test_cnot_oracle(self):
        cnot = np.eye(4)[[0, 1, 3, 2]].astype(complex)
        delta = np.kron(SIGMA_X, SIGMA_X)
        assert np.allclose(matlin.partial_trace_bath(delta, 2, 2), 0)
        image = matlin.partial_trace_bath(cnot @ delta @ cnot, 2, 2)
        assert np.max(np.abs(image - 2 * SIGMA_X)) <= 1e-12
        assert qdp.witness_strength(delta, cnot, 2, 2) == pytest.approx(2 * np.sqrt(2))

    def test_zz_difference(self):
        delta = np.kron(SIGMA_Z, SIGMA_Z)
        hits = 0
        for seed in range(100):
            u = qdp.illdefinedness_witness(delta, 2, 2, np.random.default_rng(seed))
            hits += qdp.witness_strength(delta, u, 2, 2) > 0.1
        assert hits >= 99

    @pytest.mark.parametrize("delta", [np.zeros((4, 4)), np.kron(SIGMA_Z, np.eye(2)),
                                       np.kron(SIGMA_X, 1j * SIGMA_Z), np.eye(3)])
    def test_preconditions(self, delta, rng):
        with pytest.raises(PreconditionViolated):
            qdp.illdefinedness_witness(delta, 2, 2, rng)

    def test_refinement_path(self, rng, monkeypatch):
        # every Haar draw is the identity, so only the local search can succeed
        monkeypatch.setattr(matlin, "haar_unitary", lambda n, rng=None: np.eye(n, dtype=complex))
        delta = np.kron(SIGMA_X, SIGMA_X)
        assert qdp.witness_strength(delta, np.eye(4), 2, 2) == 0
        u = qdp.illdefinedness_witness(delta, 2, 2, rng, max_trials=40)
        assert matlin.is_unitary(u, 1e-10)
        assert qdp.witness_strength(delta, u, 2, 2) >= 1e-3 * np.linalg.norm(delta)


class TestRecords:
    def test_superop_roundtrip(self, rng):
        l = qdp.folklore_map(states.random_density(2, rng), matlin.haar_unitary(4, rng))
        d = l.to_dict()
        assert d["kind"] == "superop" and d["convention"] == "column-stacking"
        assert np.array_equal(qdp.Superoperator.from_dict(d).mat, l.mat)

    def test_choi_roundtrip(self):
        c = qdp.choi_of(qdp.transpose_map(2))
        assert np.array_equal(qdp.ChoiMatrix.from_dict(c.to_dict()).mat, c.mat)

    def test_wrong_convention(self):
        d = qdp.identity_map(2).to_dict()
        d["convention"] = "row-stacking"
        with pytest.raises(ParseError):
            qdp.Superoperator.from_dict(d)

    def test_wrong_kind(self):
        with pytest.raises(ParseError):
            qdp.Superoperator.from_dict(qdp.choi_of(qdp.identity_map(2)).to_dict())
