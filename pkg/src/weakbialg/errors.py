class InputError(ValueError):
    """Malformed or inconsistent input data (CLI exit code 2)."""

    def __init__(self, message, locus=None):
        self.locus = locus
        if locus is not None:
            message = f"{locus}: {message}"
        super().__init__(message)


class AxiomError(Exception):
    """A construction could not be completed because a required axiom failed.

    ``report`` holds the failing check report when one is available.
    """

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class ShapeError(ValueError):
    pass
