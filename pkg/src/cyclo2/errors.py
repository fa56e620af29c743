"""Exception types shared across the package."""


class LevelBudgetExceeded(RuntimeError):
    """A computation would need a cyclotomic level beyond the configured cap."""


class ZeroArgument(ValueError):
    """Zero was passed where a nonzero field element is required."""


class NotAMember(ValueError):
    """Element lies outside the requested coefficient field."""


class SpecMismatch(ValueError):
    """Algebra elements from different algebras were combined."""


class NotIdempotent(ValueError):
    """An idempotent element was required."""


class UnsupportedShape(ValueError):
    """Polynomial shape not covered by the implemented irreducibility criteria."""


class VerificationError(RuntimeError):
    """An exact internal self-check failed; this indicates a bug, not bad input."""


class ElementSyntaxError(ValueError):
    """Malformed element expression, with the offending source position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position
