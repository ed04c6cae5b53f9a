class CliffhcError(Exception):
    """Base class for everything this package raises on purpose."""

    exitCode = 1


class UsageError(CliffhcError):
    exitCode = 2


class UnsupportedAlgebraError(UsageError):
    """Unknown series, rank out of range, or a type behind a feature gate."""


class StructureError(CliffhcError):
    """The constructed algebra violates one of its defining identities."""


class GeneratorError(CliffhcError):
    """Invariant generator extraction failed or disagrees with the root data."""


class AmbientMismatchError(CliffhcError):
    pass


class DegreeError(CliffhcError):
    pass


class VerificationError(CliffhcError):
    pass
