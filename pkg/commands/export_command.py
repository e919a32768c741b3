# Export Command - Write builtin objects as JSON for the other commands

import logging

from core import drinfeld, functor, matrices, qrep
from core.heckealg import HeckeAlgebra

from .command_config import EXIT_OK, UsageError, write_output

_logger = logging.getLogger(__name__)

COMMAND_NAMES = ("export",)
EXPORT_KINDS = ("natural", "t-operator", "eval-rep", "module", "generator")


def register(subparsers, common):
    """Add export to the parser."""
    sub = subparsers.add_parser("export", parents=[common], help="Write a builtin object as JSON")
    sub.add_argument("--what", choices=EXPORT_KINDS, required=True)
    sub.add_argument("--n", type=int, help="Rank n for natural, t-operator and eval-rep")
    sub.add_argument("--l", type=int, help="Rank l for module and generator")
    sub.add_argument("--module", choices=functor.MODULE_KINDS, default="trivial")
    sub.add_argument("--generator", choices=("sigma", "u"), default="sigma")
    sub.add_argument("--index", type=int, help="Generator index")


def _natural(config):
    n = config.require_range("n", 1)
    rep = qrep.natural_rep(n)
    return {
        "n": n,
        "dim": rep.dim,
        "weights": [list(w) for w in rep.weights],
        "generators": {label: matrices.to_json(m) for label, m in rep.generator_matrices().items()},
    }


def _generator(config):
    l = config.require_range("l", 1)
    algebra = HeckeAlgebra(l)
    index = config.get("index")
    if index is None:
        raise UsageError("export --what generator needs --index")
    if config.get("generator") == "sigma":
        return algebra.sigma(index).to_json()
    return algebra.u(index).to_json()


def execute(config):
    what = config.get("what")
    if what == "natural":
        doc = _natural(config)
    elif what == "t-operator":
        doc = qrep.t_operator(config.require_range("n", 1)).to_json()
    elif what == "eval-rep":
        doc = drinfeld.eval_rep(config.require_range("n", drinfeld.MIN_RANK)).to_json()
    elif what == "module":
        doc = functor.builtin_module(config.get("module"), config.require_range("l", functor.MIN_MODULE_RANK)).to_json()
    else:
        doc = _generator(config)
    _logger.debug("Exported %s", what)
    write_output(config, doc)
    return EXIT_OK
