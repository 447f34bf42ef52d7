"""
SPIN factor: R ⊕ R^{n-1} with (s,u)∘(t,v) = (st + <u,v>, sv + tu)

The cone of squares is the Lorentz cone {s > |u|}. Coordinates are the plain
(s, u) components; the trace form is twice their Euclidean inner product.
"""
import numpy as np

from factors.base import Factor, FactorKind, FactorSpectrum, random_orthogonal


class SpinFactor(Factor):
    """Spin factor of ambient dimension n (n >= 3), rank 2"""

    kind = FactorKind.SPIN

    @property
    def dim(self) -> int:
        return self.size

    @property
    def rank(self) -> int:
        return 2

    @property
    def trace_weight(self) -> float:
        return 2.0

    def unit(self) -> np.ndarray:
        e = np.zeros(self.size)
        e[0] = 1.0
        return e

    def product(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        s, u = x[0], x[1:]
        t, v = y[0], y[1:]
        return np.concatenate(([s * t + np.dot(u, v)], s * v + t * u))

    def trace(self, x: np.ndarray) -> float:
        return 2.0 * float(x[0])

    def lmul_matrix(self, x: np.ndarray) -> np.ndarray:
        s, u = x[0], x[1:]
        m = s * np.eye(self.size)
        m[0, 1:] = u
        m[1:, 0] = u
        return m

    def _direction(self, u: np.ndarray) -> np.ndarray:
        norm = float(np.linalg.norm(u))
        if norm > 0.0:
            return u / norm
        # u = 0: both eigenvalues coincide, any unit direction splits e
        w = np.zeros(self.size - 1)
        w[0] = 1.0
        return w

    def _pair(self, w: np.ndarray) -> np.ndarray:
        return 0.5 * np.vstack([np.concatenate(([1.0], -w)), np.concatenate(([1.0], w))])

    def spectrum(self, x: np.ndarray) -> FactorSpectrum:
        s, u = float(x[0]), x[1:]
        norm = float(np.linalg.norm(u))
        return FactorSpectrum(eigenvalues=np.array([s - norm, s + norm]),
                              idempotents=self._pair(self._direction(u)))

    def is_positive(self, x: np.ndarray, shift: float = 0.0) -> bool:
        return bool(x[0] - shift > np.linalg.norm(x[1:]))

    def canonical_frame(self) -> np.ndarray:
        return self._pair(self._direction(np.zeros(self.size - 1)))

    def random_frame(self, rng: np.random.Generator) -> np.ndarray:
        return self._pair(self._direction(rng.standard_normal(self.size - 1)))

    def random_automorphism(self, rng: np.random.Generator) -> np.ndarray:
        m = np.eye(self.size)
        m[1:, 1:] = random_orthogonal(self.size - 1, rng)
        return m
