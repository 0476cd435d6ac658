"""Exception hierarchy shared by the library and the command line tool."""


class ProjpermError(Exception):
    """Base class for all errors raised by projperm."""


class FieldError(ProjpermError, ValueError):
    """Invalid field parameters (non-prime p, q <= 2, bad modulus, ...)."""


class ParseError(ProjpermError, ValueError):
    """Text could not be parsed into a field, point, map or representation."""


class GuardError(ProjpermError):
    """A desk-scale size guard was exceeded."""


class VerificationError(ProjpermError):
    """An internal consistency check failed (should be unreachable)."""


class DepthExhausted(ProjpermError):
    """The breadth-first rank oracle ran out of depth before reaching the target."""
