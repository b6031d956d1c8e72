"""Exception types shared across the package."""


class ExtorbError(Exception):
    """Base class for all errors raised by extorb."""


class InputError(ExtorbError, ValueError):
    """Malformed or inconsistent input (dimensions, primes, arity)."""


class SingularMatrix(ExtorbError, ArithmeticError):
    pass


class CapExceeded(ExtorbError):
    """An enumeration would exceed the configured size cap."""

    def __init__(self, needed, cap, what="enumeration"):
        self.needed = needed
        self.cap = cap
        self.what = what
        super().__init__(f"{what} of size {needed} exceeds cap {cap}")


class WitnessSearchCapExceeded(CapExceeded):
    pass


class DegenerateForm(ExtorbError, ValueError):
    pass


class ZeroForm(ExtorbError, ValueError):
    pass


class FormSyntaxError(InputError):
    def __init__(self, message, text="", pos=0):
        self.text = text
        self.pos = pos
        super().__init__(f"{message} at position {pos}" + (f" in {text!r}" if text else ""))


class WellDefinednessViolation(ExtorbError, AssertionError):
    """Omega product depended on the chosen representative (an implementation bug)."""


class UnlabeledOrder(ExtorbError):
    def __init__(self, fingerprint):
        self.fingerprint = fingerprint
        super().__init__(f"no unique label for fingerprint {fingerprint}")
