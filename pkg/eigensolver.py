"""
Cyclic Jacobi eigensolver for small symmetric and Hermitian matrices

The symmetric solver applies Givens rotations row by row until the
off-diagonal mass falls below a relative threshold. Hermitian matrices are
solved through their real 2n x 2n embedding; every eigenvalue appears twice
there and each pair of embedded eigenvectors spans one complex eigenline.
"""
from typing import Optional, Tuple

import numpy as np

from config import Config
from exceptions import ConvergenceFailureError
from logging_config import get_logger

logger = get_logger(__name__)


def _off_norm(a: np.ndarray) -> float:
    return float(np.linalg.norm(a - np.diag(np.diag(a))))


def jacobi_eigh(
    matrix: np.ndarray,
    threshold: Optional[float] = None,
    max_sweeps: Optional[int] = None,
) -> Tuple[np.ndarray, np.ndarray]:
    """
    Eigen-decompose a real symmetric matrix with cyclic Jacobi rotations

    Args:
        matrix: Real symmetric (n, n) matrix
        threshold: Relative off-diagonal stopping threshold
        max_sweeps: Sweep cap before ConvergenceFailureError

    Returns:
        (eigenvalues ascending, orthogonal matrix of eigenvectors as columns)
    """
    threshold = Config.JACOBI_THRESHOLD if threshold is None else threshold
    max_sweeps = Config.JACOBI_MAX_SWEEPS if max_sweeps is None else max_sweeps

    a = np.array(matrix, dtype=float)
    a = 0.5 * (a + a.T)
    n = a.shape[0]
    v = np.eye(n)
    scale = float(np.linalg.norm(a))
    if n < 2 or scale == 0.0:
        return _sorted(np.diag(a).copy(), v)

    target = threshold * scale
    off = _off_norm(a)
    sweeps = 0
    while off > target:
        if sweeps >= max_sweeps:
            raise ConvergenceFailureError(sweeps, off)
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= 1e-300:
                    continue
                tau = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = (1.0 if tau >= 0 else -1.0) / (abs(tau) + np.hypot(1.0, tau))
                c = 1.0 / np.hypot(1.0, t)
                s = t * c
                rot = np.array([[c, s], [-s, c]])
                a[:, [p, q]] = a[:, [p, q]] @ rot
                a[[p, q], :] = rot.T @ a[[p, q], :]
                a[p, q] = a[q, p] = 0.0
                v[:, [p, q]] = v[:, [p, q]] @ rot
        sweeps += 1
        off = _off_norm(a)

    logger.debug(f"Jacobi converged: n={n} sweeps={sweeps} off={off:.2e}")
    return _sorted(np.diag(a).copy(), v)


def _sorted(values: np.ndarray, vectors: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    order = np.argsort(values, kind="stable")
    return values[order], vectors[:, order]


def cluster_eigenvalues(values: np.ndarray, tol: Optional[float] = None) -> list:
    """Group indices of ascending eigenvalues whose consecutive gaps are within tol"""
    tol = Config.CLUSTER_TOL if tol is None else tol
    if len(values) == 0:
        return []
    clusters = [[0]]
    for i in range(1, len(values)):
        if values[i] - values[i - 1] <= tol * max(1.0, abs(values[i])):
            clusters[-1].append(i)
        else:
            clusters.append([i])
    return clusters


def hermitian_eigh(matrix: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """
    Eigen-decompose a complex Hermitian matrix through its real embedding

    H = A + iB embeds as [[A, -B], [B, A]]. Embedded eigenvectors (x; y) give
    complex eigenvectors x + iy, and each eigenvalue of H appears twice.

    Returns:
        (eigenvalues ascending, unitary matrix of eigenvectors as columns)
    """
    h = np.asarray(matrix, dtype=complex)
    h = 0.5 * (h + h.conj().T)
    n = h.shape[0]
    a, b = h.real, h.imag
    embedded = np.block([[a, -b], [b, a]])
    values, vectors = jacobi_eigh(embedded)

    complex_vectors = vectors[:n, :] + 1j * vectors[n:, :]
    eigenvalues = []
    columns = []
    for cluster in cluster_eigenvalues(values):
        if len(cluster) % 2:
            raise ConvergenceFailureError(0, float("nan"))
        multiplicity = len(cluster) // 2
        # Orthonormal basis of the complex span of the cluster's candidates
        u, _, _ = np.linalg.svd(complex_vectors[:, cluster], full_matrices=False)
        columns.append(u[:, :multiplicity])
        paired = values[cluster].reshape(multiplicity, 2).mean(axis=1)
        eigenvalues.extend(float(x) for x in paired)

    return np.array(eigenvalues), np.hstack(columns)
