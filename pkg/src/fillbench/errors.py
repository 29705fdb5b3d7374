"""Exception hierarchy. Every error raised on purpose derives from FillbenchError."""


class FillbenchError(Exception):
    pass


class DomainError(FillbenchError, ValueError):
    """Model outside the region where the requested quantity exists (e.g. non-stationary)."""


class InvalidSpecError(FillbenchError, ValueError):
    pass


class InvalidInputError(FillbenchError, ValueError):
    pass


class DegenerateSeriesError(FillbenchError, ValueError):
    """Series has zero sample variance."""


class NumericalDegeneracyError(FillbenchError, ArithmeticError):
    pass


class ConfigError(FillbenchError, ValueError):
    def __init__(self, field, message):
        self.field = field
        super().__init__(f"{field}: {message}")


class GridError(FillbenchError):
    def __init__(self, cell, message):
        self.cell = cell
        super().__init__(message)
