# app/utils/errors.py


class ChtError(Exception):
    """Base error. `code` is a short tag for JSON envelopes, `exit_code` goes to the shell."""

    code = "ERROR"
    exit_code = 1

    def __init__(self, message: str, code: str | None = None, errors: dict | None = None):
        super().__init__(message)
        self.message = message
        if code:
            self.code = code
        self.errors = errors or {}


class InputError(ChtError):
    code = "INVALID_INPUT"
    exit_code = 2


class ConfigError(ChtError):
    code = "INVALID_CONFIG"
    exit_code = 2


class SpecificationError(ChtError):
    code = "BAD_CLAIM"
    exit_code = 1


class PrecisionError(ChtError):
    code = "PRECISION"
    exit_code = 3


class IndeterminateError(ChtError):
    code = "INDETERMINATE"
    exit_code = 3


class NoTransitionError(ChtError):
    code = "NO_TRANSITION"
    exit_code = 3
