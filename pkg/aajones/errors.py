"""
Exception hierarchy for aajones.

Every error carries the process exit code the CLI uses when it escapes a
command, so callers never need a separate mapping table.
"""


class AAJonesError(Exception):
    """Base class for all aajones errors."""

    exit_code = 1


# -------------------------------- polynomial arithmetic
class UnitError(AAJonesError):
    """Two Laurent polynomials with different exponent units were combined."""


class EmptyError(AAJonesError):
    """An operation needs a nonzero polynomial."""


class ExponentOverflowError(AAJonesError):
    """An exponent left the supported range."""


# -------------------------------- diagrams
class ParseError(AAJonesError):
    """PD text could not be tokenized."""


class ValidationError(AAJonesError):
    """PD text parsed but does not describe a planar link diagram."""


class SplitError(AAJonesError):
    """The operation requires a connected diagram."""


class NotApplicableError(AAJonesError):
    """The diagram does not meet the hypotheses of the requested formula."""


class AlreadyAlternatingError(NotApplicableError):
    """Dealternator search was run on an alternating diagram."""


class ParamError(AAJonesError):
    """Invalid parameters for a family graph constructor."""


# -------------------------------- runtime
class CapError(AAJonesError):
    """State enumeration would exceed the configured crossing cap."""

    exit_code = 3


class InternalError(AAJonesError):
    """An encoding invariant was violated; indicates a bug, not bad input."""


class ConfigError(AAJonesError):
    """Settings file or environment overrides are invalid."""


class CacheError(AAJonesError):
    """The result cache directory cannot be used."""
