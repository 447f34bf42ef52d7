"""
Matrix factors: real symmetric (SYM) and complex Hermitian (HERM) n x n matrices

Coordinates run over the upper triangle in row-major order. Diagonal entries
are stored as-is; off-diagonal entries are scaled by sqrt(2) (real and
imaginary parts separately for HERM) so the basis is orthonormal for
Re tr(XY).
"""
from abc import abstractmethod

import numpy as np

from eigensolver import hermitian_eigh, jacobi_eigh
from factors.base import Factor, FactorKind, FactorSpectrum, random_orthogonal

SQRT2 = np.sqrt(2.0)


class MatrixFactor(Factor):
    """Shared behaviour of the matrix factors; rank n"""

    dtype = float

    def __init__(self, size: int):
        super().__init__(size)
        self._rows, self._cols = np.triu_indices(size)

    @property
    def rank(self) -> int:
        return self.size

    @abstractmethod
    def to_matrix(self, x: np.ndarray) -> np.ndarray:
        pass

    @abstractmethod
    def from_matrix(self, m: np.ndarray) -> np.ndarray:
        pass

    @abstractmethod
    def _eigh(self, m: np.ndarray):
        pass

    @abstractmethod
    def _random_unitary(self, rng: np.random.Generator) -> np.ndarray:
        pass

    def unit(self) -> np.ndarray:
        return self.from_matrix(np.eye(self.size))

    def product(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        a, b = self.to_matrix(x), self.to_matrix(y)
        return self.from_matrix(0.5 * (a @ b + b @ a))

    def trace(self, x: np.ndarray) -> float:
        return float(np.real(np.trace(self.to_matrix(x))))

    def _projectors(self, vectors: np.ndarray) -> np.ndarray:
        return np.vstack([self.from_matrix(np.outer(v, v.conj())) for v in vectors.T])

    def spectrum(self, x: np.ndarray) -> FactorSpectrum:
        values, vectors = self._eigh(self.to_matrix(x))
        return FactorSpectrum(eigenvalues=np.asarray(values, dtype=float),
                              idempotents=self._projectors(vectors))

    def is_positive(self, x: np.ndarray, shift: float = 0.0) -> bool:
        m = self.to_matrix(x) - shift * np.eye(self.size)
        try:
            np.linalg.cholesky(m)
        except np.linalg.LinAlgError:
            return False
        return True

    def canonical_frame(self) -> np.ndarray:
        return self._projectors(np.eye(self.size, dtype=self.dtype))

    def random_frame(self, rng: np.random.Generator) -> np.ndarray:
        return self._projectors(self._random_unitary(rng))

    def conjugation_matrix(self, u: np.ndarray, conjugate: bool = False) -> np.ndarray:
        """Coordinate matrix of X -> U^H X U, optionally followed by entrywise conjugation"""
        columns = []
        for k in range(self.dim):
            basis = np.zeros(self.dim)
            basis[k] = 1.0
            image = u.conj().T @ self.to_matrix(basis) @ u
            columns.append(self.from_matrix(image.conj() if conjugate else image))
        return np.column_stack(columns)

    def random_automorphism(self, rng: np.random.Generator) -> np.ndarray:
        return self.conjugation_matrix(self._random_unitary(rng))


class SymmetricFactor(MatrixFactor):
    """Real symmetric n x n matrices, ambient dimension n(n+1)/2"""

    kind = FactorKind.SYM

    def __init__(self, size: int):
        super().__init__(size)
        self._scale = np.where(self._rows == self._cols, 1.0, SQRT2)

    @property
    def dim(self) -> int:
        return self.size * (self.size + 1) // 2

    def to_matrix(self, x: np.ndarray) -> np.ndarray:
        m = np.zeros((self.size, self.size))
        m[self._rows, self._cols] = np.asarray(x, dtype=float) / self._scale
        return m + m.T - np.diag(np.diag(m))

    def from_matrix(self, m: np.ndarray) -> np.ndarray:
        m = np.real(m)
        sym = 0.5 * (m + m.T)
        return sym[self._rows, self._cols] * self._scale

    def _eigh(self, m: np.ndarray):
        return jacobi_eigh(m)

    def _random_unitary(self, rng: np.random.Generator) -> np.ndarray:
        return random_orthogonal(self.size, rng)


class HermitianFactor(MatrixFactor):
    """Complex Hermitian n x n matrices over a real basis, ambient dimension n^2"""

    kind = FactorKind.HERM
    dtype = complex

    def __init__(self, size: int):
        super().__init__(size)
        diagonal, real, imag = [], [], []
        slot = 0
        for i, j in zip(self._rows, self._cols):
            if i == j:
                diagonal.append(slot)
                slot += 1
            else:
                real.append(slot)
                imag.append(slot + 1)
                slot += 2
        off = self._rows != self._cols
        self._diag_slots = np.array(diagonal, dtype=int)
        self._re_slots = np.array(real, dtype=int)
        self._im_slots = np.array(imag, dtype=int)
        self._off_rows = self._rows[off]
        self._off_cols = self._cols[off]
        self._diag_idx = self._rows[~off]

    @property
    def dim(self) -> int:
        return self.size * self.size

    def to_matrix(self, x: np.ndarray) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        m = np.zeros((self.size, self.size), dtype=complex)
        m[self._diag_idx, self._diag_idx] = x[self._diag_slots]
        upper = (x[self._re_slots] + 1j * x[self._im_slots]) / SQRT2
        m[self._off_rows, self._off_cols] = upper
        m[self._off_cols, self._off_rows] = upper.conj()
        return m

    def from_matrix(self, m: np.ndarray) -> np.ndarray:
        m = np.asarray(m, dtype=complex)
        h = 0.5 * (m + m.conj().T)
        x = np.zeros(self.dim)
        x[self._diag_slots] = h[self._diag_idx, self._diag_idx].real
        upper = h[self._off_rows, self._off_cols]
        x[self._re_slots] = SQRT2 * upper.real
        x[self._im_slots] = SQRT2 * upper.imag
        return x

    def _eigh(self, m: np.ndarray):
        return hermitian_eigh(m)

    def _random_unitary(self, rng: np.random.Generator) -> np.ndarray:
        z = rng.standard_normal((self.size, self.size)) + 1j * rng.standard_normal((self.size, self.size))
        q, r = np.linalg.qr(z)
        d = np.diag(r)
        phases = np.where(np.abs(d) > 0, d / np.abs(d), 1.0)
        return q * phases

    def random_automorphism(self, rng: np.random.Generator) -> np.ndarray:
        # Entrywise conjugation is a Jordan automorphism of the Hermitian matrices
        conjugate = bool(rng.integers(2))
        return self.conjugation_matrix(self._random_unitary(rng), conjugate=conjugate)
