"""Exception types raised across the package."""


class SapPrimesError(Exception):
    """Base class for every error this package raises on purpose."""


class DomainError(SapPrimesError, ValueError):
    """An argument lies outside the domain an operation is defined on."""


class ResourceError(SapPrimesError, RuntimeError):
    """A request exceeds the configured memory budget or a covered range."""


class InsufficientSamplesError(DomainError):
    pass


class DuplicateAbscissaError(DomainError):
    pass


class EmptySamplesError(DomainError):
    pass
