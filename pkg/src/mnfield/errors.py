"""Exception types shared across the package."""


class MnfieldError(Exception):
    """Base class for package-specific errors."""


class PrecisionError(MnfieldError):
    """A digit, valuation or expansion is not covered by the available order bound."""


class ContextMismatchError(MnfieldError):
    """Operands live over different primes or residue-field presentations."""


class NoRootError(MnfieldError):
    """A residue polynomial has no root in the configured coefficient field."""
