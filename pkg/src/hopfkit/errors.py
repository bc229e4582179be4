"""Exception hierarchy shared across the toolkit."""


class HopfkitError(Exception):
    """Base class for all user-facing errors."""


class DimensionError(HopfkitError):
    """Shapes or ambient dimensions do not line up."""


class PreconditionError(HopfkitError):
    """An operation's stated precondition fails; carries a witness when available."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotAnIdealError(PreconditionError):
    pass


class NotStableError(PreconditionError):
    pass


class UnsupportedFieldError(HopfkitError):
    """Operation is only defined over some ground fields (e.g. characteristic 0)."""


class DocumentError(HopfkitError):
    """Document parsing or validation failure; message names the offending path."""
