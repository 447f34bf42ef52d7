"""
RN factor: R^n with the componentwise product (the positive orthant cone)
"""
import numpy as np

from factors.base import Factor, FactorKind, FactorSpectrum


class RealFactor(Factor):
    """Componentwise algebra R^n; rank n, every coordinate vector is diagonal"""

    kind = FactorKind.RN

    @property
    def dim(self) -> int:
        return self.size

    @property
    def rank(self) -> int:
        return self.size

    def unit(self) -> np.ndarray:
        return np.ones(self.size)

    def product(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        return x * y

    def trace(self, x: np.ndarray) -> float:
        return float(np.sum(x))

    def lmul_matrix(self, x: np.ndarray) -> np.ndarray:
        return np.diag(x)

    def spectrum(self, x: np.ndarray) -> FactorSpectrum:
        order = np.argsort(x, kind="stable")
        return FactorSpectrum(eigenvalues=np.asarray(x, dtype=float)[order],
                              idempotents=np.eye(self.size)[order])

    def is_positive(self, x: np.ndarray, shift: float = 0.0) -> bool:
        return bool(np.all(x > shift))

    def canonical_frame(self) -> np.ndarray:
        return np.eye(self.size)

    def random_frame(self, rng: np.random.Generator) -> np.ndarray:
        return np.eye(self.size)[rng.permutation(self.size)]

    def random_automorphism(self, rng: np.random.Generator) -> np.ndarray:
        # Coordinate permutations are the only automorphisms of R^n
        return np.eye(self.size)[rng.permutation(self.size)]
