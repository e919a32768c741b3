"""Tests for core/functor.py."""

import logging
from math import comb, factorial

import pytest

from core import matrices
from core.drinfeld import eval_rep, natural_xi_rep, verify_drinfeldian, verify_yangian
from core.errors import NotWellDefined, RankTooSmall, SchemaError
from core.functor import (
    HeckeModule,
    build_functor,
    builtin_module,
    level_check,
    regular_hecke_module,
    specialize_module,
    validate_module,
)
from core.qrep import natural_rep
from core.scalar import A, ETA, Q, equal, invert

CASES = [(2, 2), (3, 2), (2, 3), (3, 3)]


class TestHeckeModule:
    """Tests for HeckeModule and the builtin modules."""

    @pytest.mark.parametrize("kind", ["trivial", "sign"])
    @pytest.mark.parametrize("l", [2, 3, 4])
    def test_builtin_modules_validate(self, module_factory, kind, l):
        """Test that every builtin module satisfies all relation families."""
        report = validate_module(module_factory(kind, l))
        assert report.passed, report.summary()

    def test_trivial_u_values(self, module_factory):
        """Test u_2 = q^2 a - q eta on the trivial module."""
        module = module_factory("trivial", 2)
        assert equal(matrices.entries(module.u[1])[(0, 0)], Q * Q * A - Q * ETA)

    def test_sign_u_values(self, module_factory):
        """Test u_2 = q^-2 a + q^-1 eta on the sign module."""
        module = module_factory("sign", 2)
        assert equal(matrices.entries(module.u[1])[(0, 0)], invert(Q * Q) * A + invert(Q) * ETA)

    def test_swapped_u_fails_cross(self, module_factory):
        """Test that exchanging u_1 and u_2 breaks the cross relation."""
        module = module_factory("trivial", 2)
        swapped = HeckeModule(2, module.sigma, [module.u[1], module.u[0]])
        report = validate_module(swapped)
        assert not report.entry("cross").passed
        assert report.entry("cross").witness is not None

    def test_unknown_kind(self):
        """Test that unknown builtin kinds are schema errors."""
        with pytest.raises(SchemaError):
            builtin_module("regular", 2)

    def test_rank_one_rejected(self):
        """Test that l = 1 has no sigma to act."""
        with pytest.raises(RankTooSmall):
            builtin_module("trivial", 1)

    def test_shape_mismatch(self, module_factory):
        """Test that a missing u matrix is rejected."""
        module = module_factory("trivial", 3)
        with pytest.raises(RankTooSmall):
            HeckeModule(3, module.sigma, module.u[:2])

    @pytest.mark.parametrize("l", [2, 3])
    def test_regular_module(self, l):
        """Test that the regular module of dimension l! passes with eta = 0."""
        module = regular_hecke_module(l)
        assert module.dim == factorial(l)
        assert module.bindings == {"eta": 0}
        report = validate_module(module)
        assert report.passed, report.summary()

    def test_specialize_module(self, module_factory):
        """Test that specialization records its bindings."""
        module = specialize_module(module_factory("trivial", 2), {"a": 1, "eta": 0})
        assert module.bindings == {"a": 1, "eta": 0}
        assert equal(matrices.entries(module.u[1])[(0, 0)], Q * Q)

    def test_json_round_trip(self, module_factory):
        """Test that a module survives JSON."""
        module = module_factory("sign", 3)
        loaded = HeckeModule.from_json(module.to_json())
        assert loaded.l == 3
        for left, right in zip(loaded.u + loaded.sigma, module.u + module.sigma):
            assert matrices.equal(left, right)

    def test_json_dim_mismatch(self, module_factory):
        """Test that a wrong declared dimension is a schema error."""
        doc = module_factory("trivial", 2).to_json()
        doc["dim"] = 2
        with pytest.raises(SchemaError):
            HeckeModule.from_json(doc)

    def test_json_missing_u(self):
        """Test that a document without u is a schema error."""
        with pytest.raises(SchemaError):
            HeckeModule.from_json({"l": 2, "sigma": []})


class TestBuildFunctor:
    """Tests for build_functor."""

    @pytest.mark.parametrize("n, l", CASES)
    def test_trivial_dimension(self, module_factory, n, l):
        """Test that the trivial module gives the q-symmetric power of dimension C(n+l, l)."""
        quotient, rep = build_functor(module_factory("trivial", l), n)
        assert quotient.dim == comb(n + l, l)
        assert rep.dim == quotient.dim

    @pytest.mark.parametrize("n, l", CASES)
    def test_sign_dimension(self, module_factory, n, l):
        """Test that the sign module gives the q-exterior power of dimension C(n+1, l)."""
        quotient, _ = build_functor(module_factory("sign", l), n)
        assert quotient.dim == comb(n + 1, l)

    @pytest.mark.parametrize("kind", ["trivial", "sign"])
    @pytest.mark.parametrize("n, l", CASES)
    def test_output_is_drinfeldian(self, module_factory, kind, n, l):
        """Test that the constructed representation satisfies every xi relation."""
        _, rep = build_functor(module_factory(kind, l), n)
        report = verify_drinfeldian(rep)
        assert report.passed, report.summary()

    def test_eta_zero_matches_two_term_action(self, module_factory):
        """Test that at eta = 0 xi acts as a xi (x) 1 + q^2 a q^{e11-e33} (x) xi on the quotient."""
        module = module_factory("trivial", 2).specialize({"eta": 0})
        quotient, rep = build_functor(module, 2)
        xi = natural_xi_rep(2).xi
        k = natural_rep(2).cartan_power((1, 0, -1))
        direct = matrices.add(
            matrices.scale(matrices.kron(xi, matrices.identity(3)), A),
            matrices.scale(matrices.kron(k, xi), Q * Q * A),
        )
        assert matrices.equal(rep.xi, quotient.push(direct))

    def test_eta_zero_specialization_commutes(self, module_factory):
        """Test that building at eta = 0 equals specializing the generic output."""
        module = module_factory("trivial", 2)
        _, generic = build_functor(module, 2)
        _, special = build_functor(module.specialize({"eta": 0}), 2)
        assert matrices.equal(generic.specialize({"eta": 0}).xi, special.xi)

    @pytest.mark.parametrize("kind", ["trivial", "sign"])
    @pytest.mark.parametrize("n, l", CASES)
    def test_yangian_limit(self, module_factory, kind, n, l):
        """Test that the q = 1 specialization of the output satisfies the Yangian relations."""
        _, rep = build_functor(module_factory(kind, l), n)
        report = verify_yangian(rep)
        assert report.passed, report.summary()

    def test_regular_module_gives_full_tensor_power(self):
        """Test that the regular module gives back V (x) V."""
        quotient, rep = build_functor(regular_hecke_module(2), 2)
        assert quotient.dim == 9
        assert rep.bindings == {"eta": 0}

    def test_projection_section(self, module_factory):
        """Test that projection after section is the identity of the quotient."""
        quotient, _ = build_functor(module_factory("trivial", 2), 2)
        assert matrices.equal(quotient.projection.matmul(quotient.section), matrices.identity(quotient.dim))
        assert quotient.rank + quotient.dim == quotient.ambient_dim

    def test_invalid_module_not_well_defined(self, module_factory):
        """Test that a module breaking the cross relation does not give an invariant xi."""
        module = module_factory("trivial", 2)
        swapped = HeckeModule(2, module.sigma, [module.u[1], module.u[0]])
        with pytest.raises(NotWellDefined):
            build_functor(swapped, 2)

    def test_level_above_rank_warns(self, module_factory, caplog):
        """Test that l > n is logged as a warning."""
        with caplog.at_level(logging.WARNING, logger="core.functor"):
            build_functor(module_factory("sign", 3), 2)
        assert any("exceeds" in record.getMessage() for record in caplog.records)

    def test_rank_one_rejected(self, module_factory):
        """Test that n = 1 is rejected."""
        with pytest.raises(RankTooSmall):
            build_functor(module_factory("trivial", 2), 1)

    def test_deterministic(self, module_factory):
        """Test that the same seed gives the same quotient."""
        first, _ = build_functor(module_factory("trivial", 2), 2, seed=3)
        second, _ = build_functor(module_factory("trivial", 2), 2, seed=3)
        assert first.to_json() == second.to_json()


class TestLevelCheck:
    """Tests for level_check."""

    def test_functor_output_has_level_l(self, module_factory):
        """Test that the trivial functor output sits at level l."""
        _, rep = build_functor(module_factory("trivial", 3), 3)
        assert level_check(rep, 3)
        assert not level_check(rep, 2)

    def test_eval_rep_is_level_one(self):
        """Test that the evaluation representation is at level one."""
        assert level_check(eval_rep(2), 1)
        assert not level_check(eval_rep(2), 2)
