"""Pytest configuration and fixtures.

Factories build the algebras, representations and modules shared by the
test modules. Everything is exact, so fixtures are cheap to rebuild per test.
"""

import pytest

from core import drinfeld, functor, qrep
from core.heckealg import HeckeAlgebra
from core.scalar import A, U


@pytest.fixture(autouse=True)
def sequential_checks(monkeypatch):
    """Run relation checks on one thread unless a test overrides it."""
    monkeypatch.setenv("HECKE_FORGE_THREADS", "1")


@pytest.fixture
def algebra_factory():
    """Factory fixture to create HeckeAlgebra objects by rank and mode."""

    def _create(l, mode="modified"):
        return HeckeAlgebra.for_mode(l, mode)

    return _create


@pytest.fixture
def natural_rep_factory():
    """Factory fixture to create natural representations of U_q(sl(n+1))."""

    def _create(n):
        return qrep.natural_rep(n)

    return _create


@pytest.fixture
def eval_rep_factory():
    """Factory fixture to create evaluation representations of the Drinfeldian."""

    def _create(n, u_value=U):
        return drinfeld.eval_rep(n, u_value)

    return _create


@pytest.fixture
def module_factory():
    """Factory fixture to create builtin one-dimensional Hecke modules."""

    def _create(kind="trivial", l=2, a=A):
        return functor.builtin_module(kind, l, a)

    return _create


@pytest.fixture
def json_file(tmp_path):
    """Factory fixture writing a JSON document and returning its path."""
    import json

    def _create(doc, name="doc.json"):
        path = tmp_path / name
        path.write_text(json.dumps(doc), encoding="utf-8")
        return str(path)

    return _create
