# Report - Relation check results, verification reports and the check runner

import logging
import os
from concurrent.futures import ThreadPoolExecutor

from sympy.polys.matrices import DomainMatrix

from . import matrices
from .errors import HeckeForgeError
from .scalar import FIELD, ratfunc_to_json

_logger = logging.getLogger(__name__)

THREADS_ENV_VAR = "HECKE_FORGE_THREADS"  # Caps worker threads, 0 = auto
MAX_AUTO_THREADS = 8  # Upper bound when the thread count is chosen automatically

PASS = "PASS"
FAIL = "FAIL"


class RelationCheck:
    """Outcome of checking one relation family."""

    def __init__(self, relation_id, passed, witness=None, checks=1, detail=None):
        self.relation_id = relation_id
        self.passed = bool(passed)
        self.witness = witness  # First non-zero LHS - RHS, None when passing
        self.checks = checks
        self.detail = detail or {}

    @property
    def status(self):
        return PASS if self.passed else FAIL

    def to_json(self):
        return {
            "relation_id": self.relation_id,
            "status": self.status,
            "checks": self.checks,
            "witness": witness_to_json(self.witness),
            "detail": self.detail,
        }

    def __repr__(self):
        return f"RelationCheck({self.relation_id!r}, {self.status}, checks={self.checks})"


class VerificationReport:
    """Ordered collection of relation checks about one subject."""

    def __init__(self, subject, entries=None, parameters=None):
        self.subject = subject
        self.entries = list(entries or [])
        self.parameters = dict(parameters or {})

    @property
    def passed(self):
        return all(entry.passed for entry in self.entries)

    def failures(self):
        return [entry for entry in self.entries if not entry.passed]

    def entry(self, relation_id):
        """
        Look up an entry by relation id.

        Args:
            relation_id: Identifier such as "braid" or "xi-weight-first"

        Returns:
            The matching RelationCheck
        """
        for entry in self.entries:
            if entry.relation_id == relation_id:
                return entry
        raise HeckeForgeError(f"No relation {relation_id!r} in report {self.subject!r}")

    def relation_ids(self):
        return [entry.relation_id for entry in self.entries]

    def extend(self, entries):
        self.entries.extend(entries)
        return self

    def summary(self):
        """One line per relation entry, preceded by a header line."""
        verdict = PASS if self.passed else FAIL
        lines = [f"{self.subject}: {verdict} ({len(self.entries)} relations, {len(self.failures())} failed)"]
        lines.extend(f"  {entry.status} {entry.relation_id} [{entry.checks} checks]" for entry in self.entries)
        return "\n".join(lines)

    def to_json(self):
        return {
            "subject": self.subject,
            "parameters": self.parameters,
            "status": PASS if self.passed else FAIL,
            "relations": [entry.to_json() for entry in self.entries],
        }

    @classmethod
    def combine(cls, subject, reports, parameters=None):
        """Merge several reports, prefixing entry ids with each source subject."""
        merged = cls(subject, parameters=parameters)
        for report in reports:
            for entry in report.entries:
                merged.entries.append(
                    RelationCheck(
                        f"{report.subject}/{entry.relation_id}",
                        entry.passed,
                        entry.witness,
                        entry.checks,
                        entry.detail,
                    )
                )
        return merged


def witness_to_json(witness):
    """Convert a witness (matrix, scalar, element or plain data) to JSON."""
    if witness is None:
        return None
    if isinstance(witness, DomainMatrix):
        return {"rows": matrices.to_json(witness)}
    if FIELD.is_element(witness):
        return ratfunc_to_json(witness)
    if hasattr(witness, "to_json"):
        return witness.to_json()
    return witness


def matrix_check(relation_id, pairs):
    """
    Compare matrix pairs exactly and summarize as one relation entry.

    Args:
        relation_id: Identifier of the relation family
        pairs: Iterable of (label, lhs, rhs) matrix triples

    Returns:
        RelationCheck whose witness is the first non-zero lhs - rhs
    """
    count = 0
    for label, lhs, rhs in pairs:
        count += 1
        difference = matrices.sub(lhs, rhs)
        if not matrices.is_zero(difference):
            _logger.debug("Relation %s fails at %s", relation_id, label)
            return RelationCheck(relation_id, False, difference, count, {"instance": label})
    return RelationCheck(relation_id, True, None, count)


def thread_count():
    """
    Read the worker thread cap from the environment.

    Returns:
        Number of threads, at least 1
    """
    raw = os.environ.get(THREADS_ENV_VAR, "").strip()
    if not raw:
        requested = 0
    else:
        try:
            requested = int(raw)
        except ValueError as exc:
            raise HeckeForgeError(f"{THREADS_ENV_VAR} must be an integer, got {raw!r}") from exc
    if requested == 0:
        return max(1, min(os.cpu_count() or 1, MAX_AUTO_THREADS))
    return max(1, requested)


def run_checks(tasks):
    """
    Evaluate independent check callables, preserving their order.

    Args:
        tasks: List of zero-argument callables returning a RelationCheck

    Returns:
        List of RelationCheck in task order
    """
    threads = min(thread_count(), len(tasks)) if tasks else 1
    if threads <= 1:
        return [task() for task in tasks]
    _logger.debug("Running %d checks on %d threads", len(tasks), threads)
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(lambda task: task(), tasks))
