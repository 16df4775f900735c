"""Exception hierarchy.

Every error raised by the library derives from :class:`AmalgamError`.
Input problems (bad syntax, ill-defined homomorphisms, unsupported
algebras) derive from :class:`InputError`; the CLI maps those to exit
status 1 and everything in :class:`ComputationError` to exit status 2.
"""


class AmalgamError(Exception):
    """Base class for all library errors."""


class InputError(AmalgamError):
    pass


class ComputationError(AmalgamError):
    pass


class FieldMismatch(InputError):
    pass


class ArityMismatch(InputError):
    pass


class RingMismatch(InputError):
    pass


class ParseError(InputError):
    """Syntax error in a polynomial or problem file, with 1-based position."""

    def __init__(self, message, line=1, column=1):
        self.line = line
        self.column = column
        super().__init__(f"{message} (line {line}, column {column})")


class UnknownVariable(ParseError):
    def __init__(self, name, line=1, column=1):
        self.name = name
        super().__init__(f"unknown variable {name!r}", line, column)


class BadCoefficient(ParseError):
    pass


class UnresolvedName(InputError):
    pass


class NotZeroDimensional(InputError):
    pass


class IllDefined(InputError):
    """A homomorphism does not respect a relation of its source."""

    def __init__(self, message, generator=None):
        self.generator = generator
        super().__init__(message)


class AmbientMismatch(InputError):
    pass


class TargetMismatch(InputError):
    pass


class NotClosed(InputError):
    pass


class NotLocal(InputError):
    pass


class NotSurjective(InputError):
    pass


class NotMonomial(InputError):
    pass


class SquareDoesNotCommute(InputError):
    pass


class ResourceLimit(ComputationError):
    pass


class CertificateFailure(ComputationError):
    pass
