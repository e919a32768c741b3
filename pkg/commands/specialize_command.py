# Specialize Command - Substitute rational values for q, eta, u, a in a JSON document

import logging

from core import matrices
from core.drinfeld import DrinfeldianRep
from core.errors import SchemaError
from core.functor import HeckeModule
from core.heckealg import AhaElement
from core.scalar import ratfunc_from_json, ratfunc_to_json, specialize

from .command_config import EXIT_OK, UsageError, load_json, write_output

_logger = logging.getLogger(__name__)

COMMAND_NAMES = ("specialize",)


def register(subparsers, common):
    """Add specialize to the parser."""
    sub = subparsers.add_parser("specialize", parents=[common], help="Specialize parameters in a JSON document")
    sub.add_argument("--in", dest="input", required=True, help="RatFunc, AhaElement, HeckeModule or DrinfeldianRep JSON")
    for name in ("q", "eta", "u", "a"):
        sub.add_argument(f"--{name}", default=None, help=f"Rational value for {name}")


def detect_kind(doc):
    """Name the document type from its keys."""
    if not isinstance(doc, dict):
        raise SchemaError("Expected a JSON object")
    if "generators" in doc and "weights" in doc:
        return "drinfeldian-rep"
    if "sigma" in doc and "u" in doc:
        return "hecke-module"
    if "terms" in doc and "l" in doc:
        return "aha-element"
    if "num" in doc and "den" in doc:
        return "ratfunc"
    if "rows" in doc:
        return "matrix"
    raise SchemaError(f"Cannot tell the document type from keys {sorted(doc)}")


def specialize_document(doc, bindings):
    """
    Specialize a document through the library type it describes.

    Returns:
        The specialized document as JSON
    """
    kind = detect_kind(doc)
    _logger.debug("Specializing a %s under %s", kind, bindings)
    if kind == "drinfeldian-rep":
        return DrinfeldianRep.from_json(doc).specialize(bindings).to_json()
    if kind == "hecke-module":
        return HeckeModule.from_json(doc).specialize(bindings).to_json()
    if kind == "aha-element":
        return AhaElement.from_json(doc).specialize(bindings).to_json()
    if kind == "ratfunc":
        return ratfunc_to_json(specialize(ratfunc_from_json(doc), bindings))
    rows = matrices.specialize_matrix(matrices.from_json(doc["rows"]), bindings)
    return {**doc, "rows": matrices.to_json(rows)}


def execute(config):
    bindings = config.bindings()
    if not bindings:
        raise UsageError("specialize needs at least one of --q, --eta, --u, --a")
    write_output(config, specialize_document(load_json(config.get("input")), bindings))
    return EXIT_OK
