"""Tests for core/qrep.py."""

import pytest

from core import matrices
from core.errors import IndexOutOfRange, PositionOutOfRange, RankTooSmall, SchemaError, XiNotAllowed
from core.qrep import (
    UQ_FAMILIES,
    CartanBracket,
    CartanPower,
    GenWord,
    RepMatrix,
    RootData,
    RootGenerator,
    Xi,
    antipode_image,
    cartan_power,
    check_uq_relations,
    closed_form_coproduct,
    coproduct_power,
    coproduct_terms,
    counit,
    e,
    h_coeffs,
    q_commutator,
    root_vector,
    sigma_on_tensor,
    t_operator,
    tensor_rep,
    verify_hopf,
    verify_uq,
)
from core.scalar import ONE, Q, ZERO, equal, invert, q_power


class TestRootData:
    """Tests for RootData."""

    def test_theta(self):
        """Test that the highest root of sl(3) is eps_1 - eps_3."""
        assert RootData(2).theta() == (1, 0, -1)

    def test_cartan_matrix(self):
        """Test the A_2 Cartan matrix."""
        assert RootData(2).cartan_matrix() == [[2, -1], [-1, 2]]

    def test_positive_roots(self):
        """Test that sl(4) has six positive roots."""
        assert len(RootData(3).positive_roots()) == 6

    def test_rank_zero(self):
        """Test that n = 0 is rejected."""
        with pytest.raises(RankTooSmall):
            RootData(0)


class TestGenWord:
    """Tests for GenWord and the named words."""

    def test_weight_of_xi(self):
        """Test that xi has weight -theta on the finite part."""
        assert GenWord.of(Xi(2)).weight() == (-1, 0, 1)

    def test_inhomogeneous_weight(self):
        """Test that mixing weights is reported."""
        word = e(2, 1, 2) + e(2, 2, 1)
        with pytest.raises(Exception, match="homogeneous"):
            word.weight()

    def test_cancellation(self):
        """Test that w - w is the zero word."""
        word = e(2, 1, 2) * e(2, 2, 3)
        assert (word - word).is_zero()

    def test_has_xi(self):
        """Test xi detection."""
        assert (e(2, 1, 2) * GenWord.of(Xi(2))).has_xi()
        assert not e(2, 1, 2).has_xi()

    def test_bad_root_index(self):
        """Test that e_ii is not a root generator."""
        with pytest.raises(IndexOutOfRange):
            RootGenerator(2, 1, 1)

    def test_cartan_coefficient_count(self):
        """Test that Cartan words need n + 1 coefficients."""
        with pytest.raises(RankTooSmall):
            CartanPower(2, (1, 0))

    def test_q_commutator_exponent(self):
        """Test [e12, e23]_q = e12 e23 - q^-1 e23 e12."""
        x, y = e(2, 1, 2), e(2, 2, 3)
        expected = x * y - (y * x).scale(invert(Q))
        assert (q_commutator(x, y) - expected).is_zero()


class TestRootVector:
    """Tests for root_vector."""

    def test_natural_image_is_matrix_unit(self, natural_rep_factory):
        """Test that e_13 and e_31 act as matrix units in the natural rep."""
        rep = natural_rep_factory(2)
        assert matrices.equal(rep.word_image(root_vector(2, 1, 3)), matrices.unit(3, 0, 2))
        assert matrices.equal(rep.word_image(root_vector(2, 3, 1)), matrices.unit(3, 2, 0))

    def test_splitting_index_independent(self, natural_rep_factory):
        """Test that e_14 splits the same way through 2 and 3 in the natural rep."""
        rep = natural_rep_factory(3)
        assert matrices.equal(rep.word_image(root_vector(3, 1, 4, 2)), rep.word_image(root_vector(3, 1, 4, 3)))

    def test_bad_splitting_index(self):
        """Test that the splitting index must lie between i and j."""
        with pytest.raises(IndexOutOfRange):
            root_vector(3, 1, 4, 4)

    def test_chevalley_has_no_split(self):
        """Test that a Chevalley generator rejects a splitting index."""
        with pytest.raises(IndexOutOfRange):
            root_vector(2, 1, 2, 1)


class TestRepresentations:
    """Tests for natural_rep and tensor_rep."""

    def test_natural_cartan(self, natural_rep_factory):
        """Test that q^{e_11} is diag(q, 1, 1)."""
        rep = natural_rep_factory(2)
        image = rep.word_image(cartan_power(2, (1, 0, 0)))
        assert matrices.equal(image, matrices.diagonal([Q, ONE, ONE]))

    def test_cartan_bracket_acts_as_qnum(self, natural_rep_factory):
        """Test that [e_11 - e_22]_q acts as diag(1, -1, 0)."""
        rep = natural_rep_factory(2)
        image = rep.symbol_image(CartanBracket(2, h_coeffs(2, 1)))
        assert matrices.equal(image, matrices.diagonal([ONE, -ONE, ZERO]))

    def test_xi_not_allowed(self, natural_rep_factory):
        """Test that a plain U_q rep has no image for xi."""
        with pytest.raises(XiNotAllowed):
            natural_rep_factory(2).word_image(GenWord.of(Xi(2)))

    def test_tensor_dimension_and_weights(self):
        """Test that V (x) V for n = 1 has weights (2,0), (1,1), (1,1), (0,2)."""
        rep = tensor_rep(1, 2)
        assert rep.dim == 4
        assert rep.weights == [(2, 0), (1, 1), (1, 1), (0, 2)]

    def test_specialize(self, natural_rep_factory):
        """Test that specializing q = 2 changes the Cartan images only."""
        rep = natural_rep_factory(1).specialize({"q": 2})
        assert matrices.equal(rep.cartan_power((1, 0)), matrices.diagonal([2, 1]))

    def test_bracketings_agree(self):
        """Test that left and right bracketings give the same generator images."""
        left, right = tensor_rep(2, 3, "left"), tensor_rep(2, 3, "right")
        for label, image in left.generator_matrices().items():
            assert matrices.equal(image, right.generator_matrices()[label]), label

    def test_closed_form(self):
        """Test that Delta^(3)(e_12) matches the summed-position closed form."""
        image = coproduct_power(e(1, 1, 2), 3).matrix
        assert matrices.equal(image, closed_form_coproduct(1, 3, "e12"))

    def test_unknown_bracketing(self):
        """Test that an unknown bracketing is rejected."""
        with pytest.raises(Exception, match="bracketing"):
            tensor_rep(1, 2, "middle")


class TestTOperator:
    """Tests for t_operator and sigma_on_tensor."""

    @pytest.mark.parametrize("n", [1, 2])
    def test_quadratic(self, n):
        """Test T^2 = (q - q^-1) T + I."""
        t = t_operator(n).matrix
        rhs = matrices.add(matrices.scale(t, Q - invert(Q)), matrices.identity(t.shape[0]))
        assert matrices.equal(t.matmul(t), rhs)

    @pytest.mark.parametrize("n", [1, 2])
    def test_braid(self, n):
        """Test the braid relation on V^(x)3."""
        a = sigma_on_tensor(n, 3, 1).matrix
        b = sigma_on_tensor(n, 3, 2).matrix
        assert matrices.equal(matrices.mul(a, b, a), matrices.mul(b, a, b))

    def test_eigenspaces_for_n1(self):
        """Test that the q-eigenspace has dimension 3 and the -q^-1 one dimension 1."""
        t = t_operator(1).matrix
        identity = matrices.identity(4)
        assert 4 - matrices.rank(matrices.sub(t, matrices.scale(identity, Q))) == 3
        assert 4 - matrices.rank(matrices.add(t, matrices.scale(identity, invert(Q)))) == 1

    def test_commutes_with_coproduct(self):
        """Test that T commutes with Delta(e_12) on V (x) V."""
        t = t_operator(1).matrix
        image = tensor_rep(1, 2).raising[0]
        assert matrices.equal(t.matmul(image), image.matmul(t))

    def test_position_range(self):
        """Test that sigma_3 does not exist on three legs."""
        with pytest.raises(PositionOutOfRange):
            sigma_on_tensor(1, 3, 3)

    def test_json_round_trip(self):
        """Test that a RepMatrix survives JSON."""
        rep = t_operator(1)
        loaded = RepMatrix.from_json(rep.to_json())
        assert matrices.equal(loaded.matrix, rep.matrix)
        assert loaded.legs == 2

    def test_json_shape_mismatch(self):
        """Test that a wrong shape is a schema error."""
        doc = t_operator(1).to_json()
        doc["legs"] = 3
        with pytest.raises(SchemaError):
            RepMatrix.from_json(doc)


class TestHopfMaps:
    """Tests for coproduct_terms, antipode_image and counit."""

    def test_coproduct_of_raising(self):
        """Test Delta(e_12) = e_12 (x) 1 + q^{-h_1} (x) e_12."""
        terms = coproduct_terms(e(1, 1, 2))
        k_inv = CartanPower(1, (-1, 1))
        assert terms == {((RootGenerator(1, 1, 2),), ()): ONE, ((k_inv,), (RootGenerator(1, 1, 2),)): ONE}

    def test_coproduct_rejects_xi(self):
        """Test that the U_q coproduct cannot split xi."""
        with pytest.raises(XiNotAllowed):
            coproduct_terms(GenWord.of(Xi(2)))

    def test_antipode_of_raising(self, natural_rep_factory):
        """Test S(e_12) = -q^{h_1} e_12."""
        rep = natural_rep_factory(1)
        image = rep.word_image(antipode_image(e(1, 1, 2)))
        expected = matrices.scale(rep.word_image(cartan_power(1, h_coeffs(1, 1)) * e(1, 1, 2)), -ONE)
        assert matrices.equal(image, expected)

    def test_antipode_rejects_xi(self):
        """Test that the U_q antipode cannot act on xi."""
        with pytest.raises(XiNotAllowed):
            antipode_image(GenWord.of(Xi(2)))

    def test_counit(self):
        """Test eps(q^h) = 1, eps(e) = 0 and eps([h + 2]_q) = [2]_q."""
        assert equal(counit(cartan_power(1, (1, -1))), ONE)
        assert equal(counit(e(1, 1, 2)), ZERO)
        bracket = GenWord.of(CartanBracket(1, (1, -1), 2))
        assert equal(counit(bracket), Q + q_power(-1))


class TestVerifyUq:
    """Tests for check_uq_relations, verify_hopf and verify_uq."""

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_natural_and_coproduct(self, n):
        """Test that verify_uq passes."""
        report = verify_uq(n)
        assert report.passed, report.summary()

    def test_six_families(self, natural_rep_factory):
        """Test that the relation report has one entry per family."""
        report = check_uq_relations(natural_rep_factory(2))
        assert report.relation_ids() == [rid for rid, _ in UQ_FAMILIES]
        assert len(report.entries) == 6

    def test_hopf_entries(self):
        """Test the Hopf report layout."""
        report = verify_hopf(1)
        assert report.relation_ids() == ["coassociativity", "antipode", "counit"]
        assert report.passed

    def test_prefixed_ids(self):
        """Test that verify_uq prefixes entries by source."""
        ids = verify_uq(1).relation_ids()
        assert "natural/q-serre" in ids
        assert "coproduct2/weight" in ids
        assert "hopf/antipode" in ids

    def test_rank_limit(self):
        """Test that n above the limit is rejected."""
        with pytest.raises(Exception, match="n <="):
            verify_uq(5)
