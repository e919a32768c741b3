"""Tests for core/report.py and core/matrices.py."""

import pytest

from core import matrices
from core.errors import HeckeForgeError, SchemaError
from core.report import (
    RelationCheck,
    VerificationReport,
    matrix_check,
    run_checks,
    thread_count,
    witness_to_json,
)
from core.scalar import ONE, Q, equal, invert


class TestMatrixCheck:
    """Tests for matrix_check."""

    def test_pass(self):
        """Test that equal pairs pass and are counted."""
        identity = matrices.identity(2)
        check = matrix_check("same", [("a", identity, identity), ("b", identity, identity)])
        assert check.passed
        assert check.checks == 2
        assert check.witness is None

    def test_first_failure_is_witness(self):
        """Test that the first non-zero difference is kept and checking stops."""
        identity = matrices.identity(2)
        doubled = matrices.scale(identity, 2)
        check = matrix_check("diff", [("ok", identity, identity), ("bad", doubled, identity), ("later", identity, doubled)])
        assert not check.passed
        assert check.checks == 2
        assert check.detail == {"instance": "bad"}
        assert matrices.equal(check.witness, identity)


class TestVerificationReport:
    """Tests for VerificationReport."""

    def test_combine_prefixes_ids(self):
        """Test that combine prefixes each entry with its source subject."""
        first = VerificationReport("natural", [RelationCheck("weight", True)])
        second = VerificationReport("hopf", [RelationCheck("counit", False, Q)])
        merged = VerificationReport.combine("uq", [first, second], {"n": 1})
        assert merged.relation_ids() == ["natural/weight", "hopf/counit"]
        assert not merged.passed
        assert [entry.relation_id for entry in merged.failures()] == ["hopf/counit"]

    def test_entry_lookup(self):
        """Test that unknown relation ids raise."""
        report = VerificationReport("x", [RelationCheck("a", True)])
        assert report.entry("a").passed
        with pytest.raises(HeckeForgeError):
            report.entry("b")

    def test_summary_lines(self):
        """Test one header line plus one line per entry."""
        report = VerificationReport("drinfeldian", [RelationCheck("a", True, checks=3), RelationCheck("b", False)])
        lines = report.summary().splitlines()
        assert lines[0] == "drinfeldian: FAIL (2 relations, 1 failed)"
        assert lines[1] == "  PASS a [3 checks]"
        assert lines[2] == "  FAIL b [1 checks]"

    def test_json(self):
        """Test the JSON layout of a report."""
        report = VerificationReport("module", [RelationCheck("cross", False, matrices.identity(1))], {"l": 2})
        doc = report.to_json()
        assert doc["status"] == "FAIL"
        assert doc["parameters"] == {"l": 2}
        assert doc["relations"][0]["witness"]["rows"] == matrices.to_json(matrices.identity(1))

    def test_scalar_witness(self):
        """Test that scalar witnesses are written as RatFunc JSON."""
        assert witness_to_json(None) is None
        assert witness_to_json({"count": 3}) == {"count": 3}
        assert "num" in witness_to_json(Q)


class TestRunner:
    """Tests for thread_count and run_checks."""

    @pytest.mark.parametrize("raw, expected", [("1", 1), ("3", 3), ("-2", 1)])
    def test_thread_count(self, monkeypatch, raw, expected):
        """Test explicit thread caps."""
        monkeypatch.setenv("HECKE_FORGE_THREADS", raw)
        assert thread_count() == expected

    def test_auto_thread_count(self, monkeypatch):
        """Test that 0 picks between 1 and 8 threads."""
        monkeypatch.setenv("HECKE_FORGE_THREADS", "0")
        assert 1 <= thread_count() <= 8

    def test_malformed_thread_count(self, monkeypatch):
        """Test that non-integers are rejected."""
        monkeypatch.setenv("HECKE_FORGE_THREADS", "two")
        with pytest.raises(HeckeForgeError):
            thread_count()

    def test_order_preserved_with_threads(self, monkeypatch):
        """Test that threaded runs keep task order."""
        monkeypatch.setenv("HECKE_FORGE_THREADS", "4")
        tasks = [lambda k=k: RelationCheck(f"r{k}", True) for k in range(10)]
        assert [check.relation_id for check in run_checks(tasks)] == [f"r{k}" for k in range(10)]


class TestMatrices:
    """Tests for the sparse matrix helpers."""

    def test_zero_entries_dropped(self):
        """Test that build never stores zeros."""
        matrix = matrices.build({(0, 0): 0, (1, 1): Q}, 2)
        assert list(matrices.entries(matrix)) == [(1, 1)]

    def test_kron_layout(self):
        """Test that the left factor is the outer index."""
        left = matrices.unit(2, 0, 1)
        right = matrices.unit(2, 1, 0)
        assert matrices.entries(matrices.kron(left, right)) == {(1, 2): ONE}

    def test_row_reduce_over_function_field(self):
        """Test the rank of a matrix that is singular only at q = 1."""
        matrix = matrices.from_rows([[Q, ONE], [ONE, invert(Q)]])
        assert matrices.rank(matrix) == 1
        generic = matrices.from_rows([[Q, ONE], [ONE, Q]])
        assert matrices.rank(generic) == 2
        assert matrices.rank(matrices.specialize_matrix(generic, {"q": 1})) == 1

    def test_json_round_trip(self):
        """Test that a matrix survives JSON."""
        matrix = matrices.from_rows([[Q, ONE], [ONE, invert(Q)]])
        loaded = matrices.from_json(matrices.to_json(matrix))
        assert matrices.equal(loaded, matrix)
        assert equal(matrices.entries(loaded)[(1, 1)], invert(Q))

    def test_ragged_json(self):
        """Test that ragged rows are schema errors."""
        with pytest.raises(SchemaError):
            matrices.from_json([[{"num": [], "den": [{"coeff": "1/1", "exp": {}}]}], []])
