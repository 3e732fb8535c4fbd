"""Exception hierarchy shared by all toricsym modules."""


class ToricSymError(Exception):
    """Base class for all toricsym errors."""


class ParseError(ToricSymError):
    """Malformed input file; carries the 1-based line number when known."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ValidationError(ToricSymError):
    """Structurally valid input that violates a precondition."""


class NonFanoError(ValidationError):
    """Operation requires a reflexive (Gorenstein Fano) fan."""


class NonLatticePolytopeError(ValidationError):
    """Operation requires every vertex to be a lattice point."""


class UnboundedPolytopeError(ValidationError):
    """Inequality system has a nontrivial recession cone."""


class InvariantViolation(ToricSymError):
    """A mathematical identity the library guarantees failed to hold.

    This is never a user error; it indicates a bug (or inconsistent input
    that slipped past validation) and maps to exit code 4 in the CLI.
    """
