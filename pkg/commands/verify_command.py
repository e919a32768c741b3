# Verify Command - verify-hecke, verify-uq, verify-drinfeldian, verify-yangian, verify-limits

import logging

from core import drinfeld, heckealg, qrep
from core.drinfeld import DrinfeldianRep
from core.heckealg import ASSOCIATIVITY_SAMPLES, MODES
from core.report import VerificationReport

from .command_config import emit_report, load_json

_logger = logging.getLogger(__name__)

COMMAND_NAMES = ("verify-hecke", "verify-uq", "verify-drinfeldian", "verify-yangian", "verify-limits")


def register(subparsers, common):
    """Add the verification sub-commands to the parser."""
    hecke = subparsers.add_parser("verify-hecke", parents=[common], help="Check the modified affine Hecke relations")
    hecke.add_argument("--l", type=int, required=True, help="Rank l (2..6)")
    hecke.add_argument("--mode", choices=MODES, default="modified")
    hecke.add_argument("--samples", type=int, default=ASSOCIATIVITY_SAMPLES, help="Associativity triples")

    uq = subparsers.add_parser("verify-uq", parents=[common], help="Check U_q(sl(n+1)) relations and Hopf axioms")
    uq.add_argument("--n", type=int, required=True, help="Rank n (1..4)")

    for name, text in (
        ("verify-drinfeldian", "Check the xi relations in an evaluation representation"),
        ("verify-yangian", "Check the q = 1 (Yangian) relations"),
    ):
        sub = subparsers.add_parser(name, parents=[common], help=text)
        sub.add_argument("--n", type=int, help="Rank n (>= 2) of the evaluation representation")
        sub.add_argument("--rep", help="DrinfeldianRep JSON file to verify instead")
        if name == "verify-drinfeldian":
            sub.add_argument("--hopf", action="store_true", help="Also check the Hopf axioms on xi")

    limits = subparsers.add_parser("verify-limits", parents=[common], help="Check the (q, eta) limit square")
    limits.add_argument("--n", type=int, required=True, help="Rank n (>= 2)")


def _load_or_build(config):
    path = config.get("rep")
    if path:
        return DrinfeldianRep.from_json(load_json(path))
    config.require_range("n", drinfeld.MIN_RANK)
    return drinfeld.eval_rep(config.get("n"))


def execute(config):
    """Run the verification suite named by config.command and write its report."""
    command = config.command
    if command == "verify-hecke":
        l = config.require_range("l", heckealg.MIN_VERIFY_RANK, heckealg.MAX_VERIFY_RANK)
        config.require_range("samples", 1)
        report = heckealg.verify_aha(l, config.get("mode"), config.seed, config.get("samples"))
    elif command == "verify-uq":
        n = config.require_range("n", 1, qrep.MAX_VERIFY_RANK)
        report = qrep.verify_uq(n)
    elif command == "verify-drinfeldian":
        rep = _load_or_build(config)
        report = drinfeld.verify_drinfeldian(rep)
        if config.get("hopf"):
            report = VerificationReport.combine(
                "drinfeldian", [report, drinfeld.verify_xi_hopf(rep.n)], report.parameters
            )
    elif command == "verify-yangian":
        report = drinfeld.verify_yangian(_load_or_build(config))
    else:
        n = config.require_range("n", drinfeld.MIN_RANK)
        _, report = drinfeld.limit_square(n)
    _logger.debug("%s finished with %d relation entries", command, len(report.entries))
    return emit_report(config, report)
