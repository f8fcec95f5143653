"""Exception types raised across the package."""


class UnruhEntError(Exception):
    """Base class for all package errors."""


class NotHermitian(UnruhEntError, ValueError):
    pass


class ConvergenceFailure(UnruhEntError, ArithmeticError):
    pass


class MalformedMatrix(UnruhEntError, ValueError):
    pass


class NotNormalized(UnruhEntError, ValueError):
    pass


class InvalidState(UnruhEntError, ValueError):
    pass


class InvalidParty(UnruhEntError, ValueError):
    pass


class WrongPartyCount(UnruhEntError, ValueError):
    pass


class DuplicateParty(UnruhEntError, ValueError):
    pass


class NonPhysical(UnruhEntError, ValueError):
    pass


class ConfigError(UnruhEntError, ValueError):
    """Invalid sweep configuration; ``field`` names the offending setting."""

    def __init__(self, message, field=None, line=None):
        self.field = field
        self.line = line
        where = []
        if line is not None:
            where.append(f"line {line}")
        if field is not None:
            where.append(f"field '{field}'")
        prefix = f"{', '.join(where)}: " if where else ""
        super().__init__(prefix + message)


class EmptyInput(UnruhEntError, ValueError):
    pass
