"""Exception hierarchy.

Every error carries a stable machine-readable ``code`` and the process exit
status the CLI uses for it.
"""


class LocusKitError(Exception):
    code = "ERROR"
    exit_code = 1

    def __init__(self, message, code=None):
        super().__init__(message)
        if code is not None:
            self.code = code


class ParseError(LocusKitError, ValueError):
    code = "PARSE_ERROR"
    exit_code = 2


class DomainError(LocusKitError, ValueError):
    code = "DOMAIN_ERROR"
    exit_code = 3


class NumericOverflowError(LocusKitError, OverflowError):
    code = "NUMERIC_OVERFLOW"
    exit_code = 4


class NoRootError(LocusKitError, ArithmeticError):
    code = "NO_ROOT"
    exit_code = 5
