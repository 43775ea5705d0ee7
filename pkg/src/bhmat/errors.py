"""Exception types shared across the library and the CLI."""


class FormatError(ValueError):
    """A matrix or Latin-square file could not be parsed."""


class PlanError(ValueError):
    """A construction plan cannot be realised (missing C1/C2, bad LSESC set, ...)."""


class VerificationError(RuntimeError):
    """A matrix that was required to be orthogonal is not."""
