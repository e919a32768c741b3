# Errors - Exception hierarchy shared by the algebra modules and the CLI


class HeckeForgeError(RuntimeError):
    """Base class for every error raised by HeckeForge."""


class DivisionByZero(HeckeForgeError, ZeroDivisionError):
    """Division by (or inversion of) the zero rational function."""


class SingularSpecialization(HeckeForgeError):
    """A denominator vanishes identically under the requested bindings."""


class RankMismatch(HeckeForgeError):
    """Operands belong to algebras or spaces of different rank."""


class PositionOutOfRange(HeckeForgeError):
    """A tensor position or generator index lies outside its range."""


class IndexOutOfRange(HeckeForgeError):
    """A root or matrix index lies outside 1..n+1."""


class XiNotAllowed(HeckeForgeError):
    """A U_q-only operation received a word containing the affine generator."""


class RankTooSmall(HeckeForgeError):
    """The rank n is below what the construction requires."""


class NotWellDefined(HeckeForgeError):
    """An operator does not preserve the balanced tensor relations."""


class SchemaError(HeckeForgeError, ValueError):
    """A JSON document does not match the expected layout."""
