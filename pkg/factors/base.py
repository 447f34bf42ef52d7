"""
Abstract Base Class for simple Euclidean Jordan algebra factors

Every factor works on flat coordinate vectors over a fixed basis that is
orthogonal for the trace form, so multiplication operators are symmetric
matrices. Algebras are direct sums of these factors.
"""
from abc import ABC, abstractmethod
from dataclasses import dataclass
from enum import Enum

import numpy as np


class FactorKind(Enum):
    """Enumeration of supported simple factor kinds"""
    RN = "rn"
    SPIN = "spin"
    SYM = "sym"
    HERM = "herm"


@dataclass(frozen=True)
class FactorSpectrum:
    """Eigenvalues (ascending) with one primitive idempotent per eigenvalue"""
    eigenvalues: np.ndarray
    idempotents: np.ndarray  # shape (rank, dim), row i pairs with eigenvalues[i]


def random_orthogonal(n: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-distributed orthogonal matrix from the QR decomposition of a Gaussian matrix"""
    if n == 0:
        return np.zeros((0, 0))
    q, r = np.linalg.qr(rng.standard_normal((n, n)))
    signs = np.sign(np.diag(r))
    signs[signs == 0] = 1.0
    return q * signs


class Factor(ABC):
    """
    Abstract base class for simple factors

    Subclasses provide the product, the closed-form or eigensolver-backed
    spectral decomposition, a positive-definiteness test and a source of
    Jordan automorphisms.
    """

    kind: FactorKind

    def __init__(self, size: int):
        self.size = size

    @property
    @abstractmethod
    def dim(self) -> int:
        """Ambient real dimension"""
        pass

    @property
    @abstractmethod
    def rank(self) -> int:
        """Number of primitive idempotents in a Jordan frame"""
        pass

    @property
    def trace_weight(self) -> float:
        """Ratio between the trace form and the Euclidean inner product of coordinates"""
        return 1.0

    @abstractmethod
    def unit(self) -> np.ndarray:
        """Coordinates of the multiplicative unit"""
        pass

    @abstractmethod
    def product(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        """Jordan product of two coordinate vectors"""
        pass

    @abstractmethod
    def trace(self, x: np.ndarray) -> float:
        """Jordan trace (sum of eigenvalues)"""
        pass

    @abstractmethod
    def spectrum(self, x: np.ndarray) -> FactorSpectrum:
        """Eigenvalues in ascending order with a Jordan frame"""
        pass

    @abstractmethod
    def is_positive(self, x: np.ndarray, shift: float = 0.0) -> bool:
        """True iff every eigenvalue of x exceeds shift"""
        pass

    @abstractmethod
    def canonical_frame(self) -> np.ndarray:
        """Fixed Jordan frame, shape (rank, dim)"""
        pass

    @abstractmethod
    def random_frame(self, rng: np.random.Generator) -> np.ndarray:
        """Random Jordan frame, shape (rank, dim)"""
        pass

    @abstractmethod
    def random_automorphism(self, rng: np.random.Generator) -> np.ndarray:
        """Matrix of a random Jordan automorphism acting on coordinates"""
        pass

    def lmul_matrix(self, x: np.ndarray) -> np.ndarray:
        """Matrix of y -> x∘y, assembled column by column"""
        basis = np.eye(self.dim)
        return np.column_stack([self.product(x, basis[k]) for k in range(self.dim)])

    def inner(self, x: np.ndarray, y: np.ndarray) -> float:
        """Trace form (x, y) = Trace(x∘y)"""
        return self.trace_weight * float(np.dot(x, y))

    def descriptor(self) -> str:
        return f"{self.kind.value}:{self.size}"

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.size})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Factor) and self.kind == other.kind and self.size == other.size

    def __hash__(self) -> int:
        return hash((self.kind, self.size))

