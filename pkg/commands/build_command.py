# Build Command - build-functor: the Drinfeldian module attached to a Hecke module

import logging
import sys

from core import drinfeld, functor
from core.functor import MODULE_KINDS, HeckeModule
from core.scalar import A

from .command_config import EXIT_FAILED, EXIT_OK, load_json, write_output

_logger = logging.getLogger(__name__)

COMMAND_NAMES = ("build-functor",)


def register(subparsers, common):
    """Add build-functor to the parser."""
    build = subparsers.add_parser("build-functor", parents=[common], help="Build W_M = M (x)_H V^(x)l")
    source = build.add_mutually_exclusive_group(required=True)
    source.add_argument("--module", choices=MODULE_KINDS, help="Builtin one-dimensional module")
    source.add_argument("--module-file", help="HeckeModule JSON file")
    build.add_argument("--l", type=int, help="Rank l of a builtin module (>= 2)")
    build.add_argument("--n", type=int, required=True, help="Rank n of sl(n+1) (>= 2)")
    build.add_argument("--a", default=None, help="Rational value for u_1 of a builtin module (symbolic when absent)")


def _module(config):
    path = config.get("module_file")
    if path:
        return HeckeModule.from_json(load_json(path))
    l = config.require_range("l", functor.MIN_MODULE_RANK)
    a = config.get("a")
    return functor.builtin_module(config.get("module"), l, A if a is None else a)


def execute(config):
    """
    Build the functor output and verify it.

    Returns:
        EXIT_OK when the module and the output pass their relation checks
    """
    module = _module(config)
    n = config.require_range("n", functor.MIN_FUNCTOR_RANK)
    module_report = functor.validate_module(module)
    quotient, rep = functor.build_functor(module, n, config.seed)
    report = drinfeld.verify_drinfeldian(rep)
    level = functor.level_check(rep, module.l)
    _logger.debug("Quotient dimension %d, level %s", quotient.dim, level)
    bundle = {
        "n": n,
        "l": module.l,
        "dim": quotient.dim,
        "level": level,
        "module": module.to_json(),
        "module_report": module_report.to_json(),
        "quotient": quotient.to_json(),
        "rep": rep.to_json(),
        "report": report.to_json(),
    }
    write_output(config, bundle)
    if config.summary:
        sys.stderr.write(module_report.summary() + "\n" + report.summary() + "\n")
    passed = module_report.passed and report.passed
    return EXIT_OK if passed else EXIT_FAILED
