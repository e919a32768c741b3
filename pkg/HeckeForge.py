# Author: HeckeForge developers
# Description: Exact checks for modified affine Hecke algebras, the Drinfeldian and the duality functor

import argparse
import logging
import sys

from commands import build_command, export_command, specialize_command, verify_command
from commands.command_config import EXIT_SINGULAR, EXIT_USAGE, CommandConfig
from core.errors import HeckeForgeError, SingularSpecialization
from core.heckealg import DEFAULT_SEED

PROGRAM_NAME = "hecke-forge"
LOG_FORMAT = "%(levelname)s %(name)s: %(message)s"

# Command modules, each exposing COMMAND_NAMES, register() and execute()
COMMAND_MODULES = (verify_command, build_command, specialize_command, export_command)

_logger = logging.getLogger(__name__)


def build_parser():
    """Argument parser with one sub-command per command name."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="Write the report or bundle JSON here instead of stdout")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED, help="Seed for sampled checks")
    common.add_argument("--summary", action="store_true", help="Plain-text summary on stderr")
    common.add_argument("--verbose", action="store_true", help="Debug logging on stderr")

    parser = argparse.ArgumentParser(prog=PROGRAM_NAME, description="Exact checks for modified affine Hecke algebras and the Drinfeldian")
    subparsers = parser.add_subparsers(dest="command", required=True)
    for module in COMMAND_MODULES:
        module.register(subparsers, common)
    return parser


def _handler(command):
    for module in COMMAND_MODULES:
        if command in module.COMMAND_NAMES:
            return module.execute
    return None


def run(argv=None):
    """
    Parse arguments, dispatch the command and map errors to exit statuses.

    Args:
        argv: Argument list without the program name (sys.argv[1:] when None)

    Returns:
        Exit status: 0 pass, 1 relation failure, 2 usage or schema error, 3 singular specialization
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format=LOG_FORMAT,
        stream=sys.stderr,
    )
    config = CommandConfig.from_namespace(args)
    try:
        config.validate()
        return _handler(config.command)(config)
    except SingularSpecialization as exc:
        sys.stderr.write(f"{PROGRAM_NAME}: singular specialization: {exc}\n")
        return EXIT_SINGULAR
    except HeckeForgeError as exc:
        sys.stderr.write(f"{PROGRAM_NAME}: {exc}\n")
        _logger.debug("Command %s failed", config.command, exc_info=True)
        return EXIT_USAGE


def main():
    """Console entry point."""
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
