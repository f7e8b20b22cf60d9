"""Exception types shared across the package."""


class ParseError(ValueError):
    """An input file could not be parsed; the message names the line."""


class InternalInvariantError(RuntimeError):
    """A consistency guarantee that should be impossible to break failed.

    Seeing this means a bug in the library, not bad user input; the CLI
    maps it to exit code 2.
    """


class InfeasibleSupportError(InternalInvariantError):
    """No tight cycle has odd inner product with the given support vector."""


class BudgetExceededError(ValueError):
    """A brute-force oracle refused an instance larger than its budget."""
