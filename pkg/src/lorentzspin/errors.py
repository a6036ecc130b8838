"""Exception types raised by the library and the command line front end."""


class LorentzSpinError(Exception):
    """Base class for all errors raised by this package."""


class ZeroAxisError(LorentzSpinError, ValueError):
    pass


class NotSpecialUnitaryError(LorentzSpinError, ValueError):
    pass


class OffShellError(LorentzSpinError, ValueError):
    pass


class MetricViolationError(LorentzSpinError, ValueError):
    pass


class NotARotationError(LorentzSpinError, ValueError):
    pass


class DomainError(LorentzSpinError, ValueError):
    """A spin map was applied to a mean spin outside its compatibility domain."""


class RadiusTooLargeError(LorentzSpinError, ValueError):
    pass


class ValidationError(LorentzSpinError, ValueError):
    """Input parsed fine but violates a physical or structural invariant."""


class ParseError(LorentzSpinError, ValueError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
