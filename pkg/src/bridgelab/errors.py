class CapExceeded(RuntimeError):
    """Requested level is beyond what the enumerator is willing to run."""


class HypothesisError(RuntimeError):
    """A verifier was asked to run on a class that fails its hypothesis."""


class DegenerateDistribution(ValueError):
    """Total mass is zero, so no probability law exists."""


class DomainError(ValueError):
    """Argument outside an operation's domain (e.g. a cyclic 'forest')."""
