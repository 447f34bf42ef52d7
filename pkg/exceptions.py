"""
Custom exceptions for ConeCheck

Provides semantic error handling for the algebra, metric and verification layers.
"""
from typing import Optional


class ConeCheckError(Exception):
    """Base exception for all application errors"""
    pass


class ConfigurationError(ConeCheckError):
    """Raised when a run configuration is invalid or a suite cannot run on the algebra"""
    pass


class InvalidDescriptorError(ConeCheckError):
    """Raised when an algebra descriptor is malformed or violates size rules"""
    def __init__(self, descriptor: str, reason: str):
        super().__init__(f"Invalid algebra descriptor {descriptor!r}: {reason}")
        self.descriptor = descriptor
        self.reason = reason


class AlgebraMismatchError(ConeCheckError):
    """Raised when operands belong to different algebras"""
    pass


class ConvergenceFailureError(ConeCheckError):
    """Raised when the Jacobi eigensolver exceeds its sweep cap"""
    def __init__(self, sweeps: int, off_norm: float):
        super().__init__(
            f"Jacobi eigensolver did not converge after {sweeps} sweeps "
            f"(off-diagonal norm {off_norm:.3e})"
        )
        self.sweeps = sweeps
        self.off_norm = off_norm


class DomainError(ConeCheckError):
    """Raised when an eigenvalue lies outside the domain of a spectral function"""
    pass


class NotInConeError(ConeCheckError):
    """Raised when a point is required to lie in the open cone but does not"""
    def __init__(self, min_eigenvalue: Optional[float] = None, message: Optional[str] = None):
        if message is None:
            message = f"Point is not in the open cone (min eigenvalue {min_eigenvalue})"
        super().__init__(message)
        self.min_eigenvalue = min_eigenvalue


class NotTraceZeroError(ConeCheckError):
    """Raised when the Hilbert rescaled metric receives a vector with non-zero trace"""
    def __init__(self, trace: float):
        super().__init__(f"Hilbert rescaling requires trace-zero vectors, got trace {trace:.3e}")
        self.trace = trace


class NotUnitalError(ConeCheckError):
    """Raised when a map expected to fix the unit moves it"""
    def __init__(self, residual: float):
        super().__init__(f"Map does not fix the unit (residual {residual:.3e})")
        self.residual = residual


class NotIdempotentError(ConeCheckError):
    """Raised when an element expected to be idempotent is not"""
    pass


class WrongRankError(ConeCheckError):
    """Raised when an operation requires a specific algebra rank"""
    def __init__(self, rank: int, required: str):
        super().__init__(f"Algebra rank {rank} does not satisfy requirement: {required}")
        self.rank = rank
        self.required = required


class NotAProductError(ConeCheckError):
    """Raised when an operation requires at least two factors"""
    def __init__(self, factor_count: int):
        super().__init__(f"Operation requires at least 2 factors, algebra has {factor_count}")
        self.factor_count = factor_count


class InvalidFrameError(ConeCheckError):
    """Raised when a list of idempotents is not a Jordan frame"""
    pass


class TrivialIdempotentError(ConeCheckError):
    """Raised when a nontrivial idempotent is required but 0 or e was given"""
    pass


class IsIdempotentError(ConeCheckError):
    """Raised when the non-extremality decomposition receives an idempotent"""
    pass
