"""Exception types shared across the package.

Everything raised on purpose derives from ModlabError, so callers (and the
CLI) can map failures onto stable exit-code classes.
"""


class ModlabError(Exception):
    """Base class for all library errors."""


class MalformedEdgeError(ModlabError):
    """An edge endpoint lies outside 1..n."""


class LoopRejectedError(ModlabError):
    """A self-loop {v, v} was supplied; only simple graphs are supported."""


class MalformedInputError(ModlabError):
    """A scalar argument violates its documented range."""


class IncompatibleClusteringError(ModlabError):
    """Graph and clustering disagree on the node set."""


class FormatError(ModlabError):
    """A file could not be parsed.  Carries the offending line number."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class UndefinedQualityError(ModlabError):
    """Quality functions are undefined on edgeless graphs (m = 0)."""


class UndefinedSimilarityError(ModlabError):
    """Pair-counting similarity is undefined when no pair is co-clustered in either input."""


class FamilyParameterError(ModlabError):
    """Family parameters violate the generator's lower bounds."""


class InstanceTooLargeError(ModlabError):
    """Exhaustive search was asked for a graph above the enumeration guard."""


class WitnessNotFoundError(ModlabError):
    """The witness search hit its cap; this signals a bug, not a mathematical gap."""
