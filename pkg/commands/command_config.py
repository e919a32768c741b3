# Command Config - Parsed command parameters, exit statuses and report output

import json
import logging
import sys

from core.errors import HeckeForgeError, SchemaError
from core.heckealg import DEFAULT_SEED
from core.report import thread_count

_logger = logging.getLogger(__name__)

# Exit statuses
EXIT_OK = 0
EXIT_FAILED = 1  # At least one relation violated
EXIT_USAGE = 2  # Input, schema or usage error
EXIT_SINGULAR = 3  # SingularSpecialization

COMMANDS = (
    "verify-hecke",
    "verify-uq",
    "verify-drinfeldian",
    "verify-yangian",
    "verify-limits",
    "build-functor",
    "specialize",
    "export",
)

BINDING_FLAGS = ("q", "eta", "u", "a")


class UsageError(HeckeForgeError):
    """Parameters out of range for the requested command."""


class CommandConfig:
    """One CLI invocation: command name, its parameters and the common output flags."""

    def __init__(self, command, params=None, out=None, seed=DEFAULT_SEED, summary=False, verbose=False):
        self.command = command
        self.params = dict(params or {})
        self.out = out
        self.seed = seed
        self.summary = summary
        self.verbose = verbose

    @classmethod
    def from_namespace(cls, args):
        """Build a config from an argparse namespace, keeping only command parameters in params."""
        common = {"command", "out", "seed", "summary", "verbose", "handler"}
        params = {key: value for key, value in vars(args).items() if key not in common}
        return cls(args.command, params, args.out, args.seed, args.summary, args.verbose)

    def get(self, name, default=None):
        value = self.params.get(name)
        return default if value is None else value

    def bindings(self):
        """The --q/--eta/--u/--a values that were given, as strings."""
        return {name: self.params[name] for name in BINDING_FLAGS if self.params.get(name) is not None}

    def require_range(self, name, low, high=None):
        """
        Validate an integer parameter before dispatch.

        Args:
            name: Parameter name
            low: Smallest accepted value
            high: Largest accepted value, or None

        Returns:
            The validated value
        """
        value = self.params.get(name)
        if value is None:
            raise UsageError(f"{self.command} needs --{name}")
        if value < low or (high is not None and value > high):
            bound = f"{low}..{high}" if high is not None else f">= {low}"
            raise UsageError(f"--{name} must be {bound} for {self.command}, got {value}")
        return value

    def validate(self):
        if self.command not in COMMANDS:
            raise UsageError(f"Unknown command {self.command!r}")
        # Malformed thread settings are usage errors
        thread_count()


def load_json(path):
    """Read a JSON document, turning I/O and decode failures into SchemaError."""
    try:
        with open(path, encoding="utf-8") as handle:
            return json.load(handle)
    except OSError as exc:
        raise SchemaError(f"Cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path} is not valid JSON: {exc}") from exc


def write_output(config, doc):
    """Write doc as JSON to --out, or to stdout when no path was given."""
    text = json.dumps(doc, indent=2) + "\n"
    if config.out:
        with open(config.out, "w", encoding="utf-8") as handle:
            handle.write(text)
        _logger.debug("Wrote %s", config.out)
    else:
        sys.stdout.write(text)


def emit_report(config, report):
    """
    Write a VerificationReport and map its verdict to an exit status.

    Returns:
        EXIT_OK when every relation passed, EXIT_FAILED otherwise
    """
    write_output(config, report.to_json())
    if config.summary:
        sys.stderr.write(report.summary() + "\n")
    return EXIT_OK if report.passed else EXIT_FAILED
