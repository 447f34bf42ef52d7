"""
Spectral decomposition and functional calculus

Every element x has eigenvalues λ_1 <= ... <= λ_r and a Jordan frame
(p_i) with x = Σ λ_i p_i. Spectral functions f(x) = Σ f(λ_i) p_i, the
JB-norm max|λ_i| and the σ-seminorm max λ_i - min λ_i are built on it.
"""
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Optional, Tuple

import numpy as np

from algebra import Algebra, Element, lmul
from config import Config
from exceptions import DomainError, NotIdempotentError
from logging_config import get_logger

logger = get_logger(__name__)


class FunctionDomain(Enum):
    """Where a scalar function may be evaluated on the spectrum"""
    REAL = "real"
    NONNEGATIVE = "nonnegative"
    POSITIVE = "positive"
    NONZERO = "nonzero"


@dataclass(frozen=True)
class SpectralDecomposition:
    """Eigenvalues (ascending, with multiplicity) and a matching Jordan frame"""
    algebra: Algebra
    eigenvalues: np.ndarray
    frame: np.ndarray  # shape (rank, dim); row i is the idempotent of eigenvalues[i]

    @property
    def idempotents(self) -> Tuple[Element, ...]:
        return tuple(Element(self.algebra, row) for row in self.frame)

    def map(self, values: np.ndarray) -> Element:
        """Σ values_i p_i"""
        return Element(self.algebra, np.asarray(values, dtype=float) @ self.frame)

    def reconstruct(self) -> Element:
        return self.map(self.eigenvalues)

    def reconstruction_residual(self, x: Element) -> float:
        scale = max(1.0, float(np.max(np.abs(x.coords), initial=0.0)))
        return self.reconstruct().distance_to(x) / scale


def _factor_spectra(x: Element) -> Tuple[np.ndarray, np.ndarray]:
    algebra = x.algebra
    values, rows = [], []
    for index, (factor, block) in enumerate(zip(algebra.factors, algebra.slices)):
        spectrum = factor.spectrum(x.coords[block])
        values.append(spectrum.eigenvalues)
        embedded = np.zeros((factor.rank, algebra.dim))
        embedded[:, block] = spectrum.idempotents
        rows.append(embedded)
    return np.concatenate(values), np.vstack(rows)


def spectral_decompose(x: Element) -> SpectralDecomposition:
    """
    Decompose x = Σ λ_i p_i

    RN and SPIN factors use closed forms; SYM and HERM use the Jacobi
    eigensolver. Factor spectra are concatenated and sorted ascending.

    Raises:
        ConvergenceFailureError: If the eigensolver exceeds its sweep cap
    """
    values, frame = _factor_spectra(x)
    order = np.argsort(values, kind="stable")
    return SpectralDecomposition(algebra=x.algebra, eigenvalues=values[order], frame=frame[order])


def eigenvalues(x: Element) -> np.ndarray:
    """Ascending eigenvalues with multiplicity"""
    return spectral_decompose(x).eigenvalues


def min_eigenvalue(x: Element) -> float:
    return float(eigenvalues(x)[0])


def max_eigenvalue(x: Element) -> float:
    return float(eigenvalues(x)[-1])


def _check_domain(values: np.ndarray, domain: FunctionDomain, tol: float) -> np.ndarray:
    if domain == FunctionDomain.NONNEGATIVE:
        if np.any(values < -tol):
            raise DomainError(f"Negative eigenvalue {values.min():.3e} outside the domain")
        return np.clip(values, 0.0, None)
    if domain == FunctionDomain.POSITIVE and np.any(values <= 0.0):
        raise DomainError(f"Non-positive eigenvalue {values.min():.3e} outside the domain")
    if domain == FunctionDomain.NONZERO and np.any(np.abs(values) <= tol):
        raise DomainError("Element is not invertible (eigenvalue at zero)")
    return values


def apply_function(
    x: Element,
    f: Callable[[np.ndarray], np.ndarray],
    domain: FunctionDomain = FunctionDomain.REAL,
    tol: Optional[float] = None,
) -> Element:
    """
    Functional calculus Σ f(λ_i) p_i

    Args:
        x: Element
        f: Vectorized scalar function
        domain: Required location of the spectrum
        tol: Slack for NONNEGATIVE (clipped) and NONZERO checks

    Raises:
        DomainError: If an eigenvalue lies outside the domain
    """
    tol = Config.MEMBERSHIP_TOL if tol is None else tol
    decomposition = spectral_decompose(x)
    values = _check_domain(decomposition.eigenvalues, domain, tol)
    return decomposition.map(f(values))


def jordan_exp(x: Element) -> Element:
    return apply_function(x, np.exp)


def jordan_log(x: Element) -> Element:
    return apply_function(x, np.log, FunctionDomain.POSITIVE)


def jordan_sqrt(x: Element) -> Element:
    return apply_function(x, np.sqrt, FunctionDomain.NONNEGATIVE)


def jordan_inverse(x: Element) -> Element:
    return apply_function(x, lambda v: 1.0 / v, FunctionDomain.NONZERO, tol=0.0)


def jordan_power(x: Element, t: float) -> Element:
    """x^t; non-integer t needs a nonnegative spectrum, negative t a positive one"""
    t = float(t)
    integral = t.is_integer()
    if t >= 0:
        domain = FunctionDomain.REAL if integral else FunctionDomain.NONNEGATIVE
    else:
        domain = FunctionDomain.NONZERO if integral else FunctionDomain.POSITIVE
    return apply_function(x, lambda v: np.power(v, t), domain, tol=0.0 if t < 0 else None)


def jb_norm(x: Element) -> float:
    """Spectral norm max |λ_i|"""
    return float(np.max(np.abs(eigenvalues(x))))


def sigma_seminorm(x: Element) -> float:
    """Diameter of the spectrum max λ_i - min λ_i"""
    values = eigenvalues(x)
    return float(values[-1] - values[0])


def riemannian_norm(x: Element) -> float:
    """Trace(x^2)^(1/2)"""
    return float(np.sqrt(np.sum(eigenvalues(x) ** 2)))


def is_regular(x: Element, tol: Optional[float] = None) -> bool:
    """True iff all r eigenvalues are pairwise separated by more than tol"""
    tol = Config.CLUSTER_TOL if tol is None else tol
    return bool(np.all(np.diff(eigenvalues(x)) > tol))


def idempotent_rank(p: Element, tol: Optional[float] = None) -> int:
    """
    Number of eigenvalues at 1 of an idempotent

    Raises:
        NotIdempotentError: If some eigenvalue is farther than tol from {0, 1}
    """
    tol = Config.IDEMPOTENT_TOL if tol is None else tol
    values = eigenvalues(p)
    at_one = np.abs(values - 1.0) <= tol
    at_zero = np.abs(values) <= tol
    if not np.all(at_one | at_zero):
        stray = values[~(at_one | at_zero)]
        raise NotIdempotentError(f"Spectrum strays from {{0, 1}}: {stray}")
    return int(np.sum(at_one))


def commutator_norm(a: Element, b: Element) -> float:
    """Operator norm of L(a)L(b) - L(b)L(a)"""
    la, lb = lmul(a).matrix, lmul(b).matrix
    return float(np.linalg.norm(la @ lb - lb @ la, 2))


def simultaneously_diagonalizable(a: Element, b: Element, tol: float = 1e-9) -> bool:
    """
    True iff a and b are diagonal in a common Jordan frame

    Decided by the commutator of the multiplication operators, relative to
    ‖L(a)‖‖L(b)‖ (operator norms, equal to the JB-norms).
    """
    scale = float(np.linalg.norm(lmul(a).matrix, 2) * np.linalg.norm(lmul(b).matrix, 2))
    if scale == 0.0:
        return True
    return commutator_norm(a, b) <= tol * scale
