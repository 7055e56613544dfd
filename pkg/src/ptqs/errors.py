"""Exception hierarchy.

Everything raised for a physics reason (wrong PT phase, bound violated)
derives from :class:`PhysicsDomainError`; the CLI maps those to exit code 2.
"""


class PTQSError(Exception):
    pass


class SingularMatrixError(PTQSError, ArithmeticError):
    pass


class NotSymmetricError(PTQSError, ValueError):
    """Off-diagonal phase is not a multiple of pi."""


class PhysicsDomainError(PTQSError, ValueError):
    pass


class BrokenPhaseError(PhysicsDomainError):
    def __init__(self, message: str, eigenvalues: tuple[complex, complex]):
        super().__init__(message)
        self.eigenvalues = eigenvalues


class ExceptionalPointError(PhysicsDomainError):
    pass


class UnsupportedCouplingError(PhysicsDomainError):
    """Effective off-diagonal coupling is negative; the eigenvector
    convention used throughout assumes it is positive."""


class UnbrokenViolationError(PhysicsDomainError):
    pass


class NonPositiveProductError(PTQSError, ValueError):
    pass


class BiorthogonalityViolation(PTQSError, ValueError):
    pass
