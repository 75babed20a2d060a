"""Exception types shared across the package."""


class NumerationError(Exception):
    """Base class for domain errors (bad input, unresolvable computation)."""


class WordError(NumerationError, ValueError):
    """Malformed digit word: negative digit, bad syntax, length mismatch."""


class RefinementBudgetError(NumerationError):
    """Interval refinement did not separate a floor boundary within budget."""


class UnresolvedBaseError(NumerationError):
    """An operation required an eventually periodic expansion of 1, but the
    base's expansion could not be resolved within the probed depth."""
