class NoriError(Exception):
    """Base class for all errors raised by this package."""


class InputError(NoriError):
    """Malformed or inconsistent input data (CLI exit code 2)."""


class FieldMismatchError(InputError):
    """Operands live over different coefficient fields."""


class FalsifiedIdentityError(NoriError):
    """A mathematical identity that should always hold failed on concrete
    data (CLI exit code 1).  Carries a witness describing the failure."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class PresentationSearchError(InputError):
    """present() exhausted its search bound; carries the failure report."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report
