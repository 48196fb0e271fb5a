"""Exception hierarchy shared by the library and the CLI."""


class MatroidError(Exception):
    """Base class for every error raised by this package."""


class InputError(MatroidError, ValueError):
    """Malformed or out-of-range input (bad index, value outside an area, ...)."""


class ContractError(MatroidError, ValueError):
    """An operation was called with its precondition violated."""


class UnsupportedInstanceError(MatroidError):
    """The instance is outside what an exhaustive procedure can handle."""
