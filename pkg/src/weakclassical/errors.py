"""Exception hierarchy shared by every layer of the library."""


class AlgebraError(Exception):
    """Base class for all errors raised by weakclassical."""


class InvalidParameter(AlgebraError, ValueError):
    pass


class Unsupported(AlgebraError):
    pass


class RingMismatch(AlgebraError):
    pass


class NotProper(AlgebraError):
    pass


class NotApplicable(AlgebraError):
    """A predicate was asked about a degenerate (zero) situation."""


class TooLarge(AlgebraError):
    pass


class InvalidSubmodule(AlgebraError):
    pass


class NotAHomomorphism(AlgebraError):
    pass


class NotMultiplicationModule(AlgebraError):
    pass


class NotWCP(AlgebraError):
    """Triple-zeros were requested for a submodule that is not weakly classical prime."""


class HypothesisFailed(AlgebraError):
    pass


class _UnknownKey(AlgebraError, KeyError):
    def __str__(self):
        # KeyError would repr() the message
        return str(self.args[0]) if self.args else ""


class UnknownTheorem(_UnknownKey):
    pass


class UnknownGoal(_UnknownKey):
    pass


class SpecSyntaxError(AlgebraError):
    """Raised by the instance-spec parser; carries position and expected tokens."""

    def __init__(self, message, line=1, column=1, expected=()):
        self.line = line
        self.column = column
        self.expected = tuple(sorted(set(expected)))
        detail = f"{message} at line {line}, column {column}"
        if self.expected:
            detail += f" (expected one of: {', '.join(self.expected)})"
        super().__init__(detail)
