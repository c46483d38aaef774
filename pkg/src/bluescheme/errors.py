"""Exception hierarchy for the library."""


class BlueprintError(Exception):
    """Base class for everything raised by bluescheme."""


class PresentationError(BlueprintError):
    """Malformed presentation data (duplicate names, bad indices, ...)."""


class GradingError(BlueprintError):
    """A graded operation was applied to ungraded data, or a relation is inhomogeneous."""


class UnsupportedDegreeError(BlueprintError):
    """Degree-zero charts are only built for localizations at degree-1 generators."""


class UnknownGeneratorError(BlueprintError):
    pass


class EnumerationLimitError(BlueprintError):
    """Too many generators for subset enumeration."""


class DSLParseError(BlueprintError):
    def __init__(self, message, line, column):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
