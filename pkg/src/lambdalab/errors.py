"""Shared exception types.

Domain failures ("provably no") and indeterminate outcomes ("ran out of
fuel") are kept distinct so callers, including the CLI exit-code mapping,
never confuse a refutation with a timeout.
"""


class LambdaLabError(Exception):
    """Base class for all package errors."""


class ParseError(LambdaLabError):
    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class NoNormalFormError(LambdaLabError):
    """A term required to normalize did not reach a normal form in fuel."""


class FuelExhaustedError(LambdaLabError):
    """Indeterminate: the step budget ran out before a decision was made."""


class InseparableError(LambdaLabError):
    """The two terms have the same beta-eta normal form."""


class OpenTermError(LambdaLabError):
    """A closed term was required but free variables are present."""


class MalformedCodeError(LambdaLabError):
    """A natural number outside the image of the term numbering."""


class VMTrap(LambdaLabError):
    """TinyVM fault: stack underflow, bad opcode, bad jump, bad read."""


class BootstrapOrderingError(LambdaLabError):
    """A measured bootstrap step-count ordering was violated."""
