"""Exception types shared across the package."""


class TopoprofError(Exception):
    """Base class for every error raised by this package."""


class ShapeError(TopoprofError, ValueError):
    """A sequence of counts does not form a valid profile."""


class CapacityError(TopoprofError, OverflowError):
    """A state count or profile entry exceeded the 64-bit limit."""


class SearchSpaceError(TopoprofError):
    """The solver's candidate space is larger than the configured cap."""


class ParseError(TopoprofError, ValueError):
    """Malformed textual input, with a 1-based line/column position."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.message = message
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)
