"""
Metrics, geodesics and means on symmetric cones

All distances are read off the spectrum of the relative position
w = P(a^{-1/2}) b:
    Thompson    d_T = max |log λ_i|
    Hilbert     d_H = max log λ_i - min log λ_i
    Riemannian  d_R = (Σ (log λ_i)^2)^(1/2)
The gauge M(P, Q) = inf{t > 0 : tQ - P in the cone} is the top eigenvalue of
P(Q^{-1/2}) P; gauge_bruteforce recovers it by bisection on membership.
"""
from enum import Enum
from typing import Dict, List, Optional, Sequence, Union

import numpy as np

from algebra import Algebra, Element, jordan_det, jordan_trace, quad_rep, random_cone_point, split, trace_form
from config import Config
from exceptions import DomainError, NotAProductError, NotInConeError, NotTraceZeroError
from logging_config import get_logger
from reports import CheckRecord, VerificationReport
from spectral import (
    FunctionDomain,
    apply_function,
    eigenvalues,
    jb_norm,
    jordan_exp,
    jordan_inverse,
    jordan_power,
    jordan_sqrt,
    riemannian_norm,
    sigma_seminorm,
)

logger = get_logger(__name__)


class MetricKind(Enum):
    """Cone metrics"""
    THOMPSON = "thompson"
    HILBERT = "hilbert"
    RIEMANNIAN = "riemannian"


class ConePoint:
    """
    Element of the open cone with its (lazily cached) smallest eigenvalue

    Use ConePoint.of to validate untrusted input. Results of cone operations
    are wrapped without re-validation.
    """

    def __init__(self, element: Element, min_eigenvalue: Optional[float] = None):
        self.element = element
        self._min_eigenvalue = min_eigenvalue

    @classmethod
    def of(cls, x: Union["ConePoint", Element], tol: Optional[float] = None) -> "ConePoint":
        """
        Validate membership of the open cone

        Raises:
            NotInConeError: If the smallest eigenvalue is not above tol
        """
        if isinstance(x, ConePoint):
            return x
        tol = Config.MEMBERSHIP_TOL if tol is None else tol
        smallest = float(eigenvalues(x)[0])
        if not smallest > tol:
            raise NotInConeError(smallest)
        return cls(x, smallest)

    @property
    def min_eigenvalue(self) -> float:
        if self._min_eigenvalue is None:
            self._min_eigenvalue = float(eigenvalues(self.element)[0])
        return self._min_eigenvalue

    @property
    def algebra(self) -> Algebra:
        return self.element.algebra

    @property
    def coords(self) -> np.ndarray:
        return self.element.coords

    def __repr__(self) -> str:
        return f"ConePoint({self.element!r})"


PointLike = Union[ConePoint, Element]


def _el(x: PointLike) -> Element:
    return ConePoint.of(x).element


def cone_membership(x: Element, tol: Optional[float] = None) -> bool:
    """
    True iff every eigenvalue of x exceeds tol

    Decided factor-wise by positive definiteness of x - tol·e (closed forms on
    RN and SPIN, Cholesky on SYM and HERM), without the Jacobi eigensolver.
    """
    tol = Config.MEMBERSHIP_TOL if tol is None else tol
    algebra = x.algebra
    return all(
        factor.is_positive(x.coords[block], shift=tol)
        for factor, block in zip(algebra.factors, algebra.slices)
    )


def relative_position(a: PointLike, b: PointLike) -> Element:
    """w = P(a^{-1/2}) b; its spectrum determines every distance from a to b"""
    a, b = _el(a), _el(b)
    return quad_rep(jordan_power(a, -0.5)).apply(b)


def _log_spectrum(a: PointLike, b: PointLike) -> np.ndarray:
    values = eigenvalues(relative_position(a, b))
    return np.log(np.clip(values, np.finfo(float).tiny, None))


def gauge(p: PointLike, q: PointLike) -> float:
    """M(P, Q) = sup spec(P(Q^{-1/2}) P)"""
    return float(np.max(eigenvalues(relative_position(q, p))))


def gauge_bruteforce(
    p: PointLike,
    q: PointLike,
    tol: Optional[float] = None,
    iterations: Optional[int] = None,
) -> float:
    """
    M(P, Q) by bisection on t, testing membership of tQ - P

    The bracket starts at [M/4, 4M] from the spectral estimate and is widened
    until the membership test confirms it, so the answer rests on the
    membership test alone.

    Args:
        tol: Optional absolute bracket width for early stopping
        iterations: Bisection steps (default 60)
    """
    p, q = _el(p), _el(q)
    iterations = Config.BISECTION_ITERATIONS if iterations is None else iterations

    def feasible(t: float) -> bool:
        return cone_membership(q * t - p, tol=0.0)

    estimate = gauge(p, q)
    lo, hi = estimate / 4.0, estimate * 4.0
    for _ in range(iterations):
        if feasible(hi):
            break
        hi *= 4.0
    for _ in range(iterations):
        if not feasible(lo):
            break
        lo /= 4.0

    for _ in range(iterations):
        if tol is not None and hi - lo <= tol:
            break
        mid = 0.5 * (lo + hi)
        if feasible(mid):
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)


def _snap(value: float) -> float:
    """Round distances below DISTANCE_ZERO_TOL to exactly zero"""
    return 0.0 if value < Config.DISTANCE_ZERO_TOL else value


def thompson_distance(a: PointLike, b: PointLike) -> float:
    """d_T = ‖log P(a^{-1/2}) b‖ (JB-norm)"""
    return _snap(float(np.max(np.abs(_log_spectrum(a, b)))))


def hilbert_distance(a: PointLike, b: PointLike) -> float:
    """d_H = ‖log P(a^{-1/2}) b‖_σ"""
    logs = _log_spectrum(a, b)
    return _snap(float(logs.max() - logs.min()))


def riemannian_distance(a: PointLike, b: PointLike) -> float:
    """d_R = Trace((log P(a^{-1/2}) b)^2)^(1/2)"""
    return _snap(float(np.sqrt(np.sum(_log_spectrum(a, b) ** 2))))


_DISTANCES = {
    MetricKind.THOMPSON: thompson_distance,
    MetricKind.HILBERT: hilbert_distance,
    MetricKind.RIEMANNIAN: riemannian_distance,
}


def distance(kind: MetricKind, a: PointLike, b: PointLike) -> float:
    return _DISTANCES[kind](a, b)


def riemannian_geodesic(a: PointLike, b: PointLike, t: float) -> ConePoint:
    """γ(t) = P(a^{1/2}) (P(a^{-1/2}) b)^t, with w^t evaluated as exp(t log w)"""
    a, b = _el(a), _el(b)
    w = quad_rep(jordan_power(a, -0.5)).apply(b)
    wt = apply_function(w, lambda v: np.exp(t * np.log(v)), FunctionDomain.POSITIVE)
    return ConePoint(quad_rep(jordan_sqrt(a)).apply(wt))


def geometric_mean(a: PointLike, b: PointLike) -> ConePoint:
    """a#b = P(a^{1/2}) (P(a^{-1/2}) b)^{1/2}, the solution of P(x) a^{-1} = b"""
    a, b = _el(a), _el(b)
    w = quad_rep(jordan_power(a, -0.5)).apply(b)
    return ConePoint(quad_rep(jordan_sqrt(a)).apply(jordan_sqrt(w)))


def spectral_mean(a: PointLike, b: PointLike) -> ConePoint:
    """P((a^{-1}#b)^{1/2}) a"""
    a, b = _el(a), _el(b)
    m = geometric_mean(jordan_inverse(a), b).element
    return ConePoint(quad_rep(jordan_sqrt(m)).apply(a))


def normalize_det(a: PointLike) -> ConePoint:
    """a / det(a)^{1/r}, the representative of the ray on the det = 1 section"""
    a = _el(a)
    return ConePoint(a / jordan_det(a) ** (1.0 / a.algebra.rank))


def riemannian_inner(a: PointLike, u: Element, v: Element) -> float:
    """Tangent inner product at a: (P(a)^{-1} u, v) = (P(a^{-1}) u, v)"""
    a = _el(a)
    return trace_form(quad_rep(jordan_inverse(a)).apply(u), v)


def geodesic_midpoint_refinement(a: PointLike, b: PointLike, depth: int) -> List[ConePoint]:
    """
    Dyadic points of the geodesic from a to b built from repeated midpoints

    Returns 2^depth + 1 points; point k sits at parameter k / 2^depth.
    """
    points: List[ConePoint] = [ConePoint.of(a), ConePoint.of(b)]
    for _ in range(depth):
        refined = [points[0]]
        for left, right in zip(points, points[1:]):
            refined.append(geometric_mean(left, right))
            refined.append(right)
        points = refined
    return points


def limit_norm(kind: MetricKind, w: Element) -> float:
    """Norm that the rescaled metric d_λ tends to as λ -> 0"""
    if kind == MetricKind.THOMPSON:
        return jb_norm(w)
    if kind == MetricKind.HILBERT:
        return sigma_seminorm(w)
    return riemannian_norm(w)


def rescaled_distance(kind: MetricKind, lam: float, u: Element, v: Element) -> float:
    """
    d_λ(u, v) = d(exp(λu), exp(λv)) / λ

    Raises:
        DomainError: If λ <= 0
        NotTraceZeroError: For HILBERT when u or v has non-zero trace
    """
    if not lam > 0:
        raise DomainError(f"Rescaling parameter must be positive, got {lam}")
    if kind == MetricKind.HILBERT:
        for w in (u, v):
            trace = jordan_trace(w)
            if abs(trace) > 1e-10:
                raise NotTraceZeroError(trace)
    a = ConePoint(jordan_exp(u * lam))
    b = ConePoint(jordan_exp(v * lam))
    return distance(kind, a, b) / lam


def rescaled_convergence(
    kind: MetricKind,
    u: Element,
    v: Element,
    lambdas: Sequence[float] = (1e-1, 1e-2, 1e-3),
) -> Dict[str, List[float]]:
    """Errors |d_λ(u, v) - ‖v - u‖| along lambdas and successive error ratios"""
    limit = limit_norm(kind, v - u)
    errors = [abs(rescaled_distance(kind, lam, u, v) - limit) for lam in lambdas]
    ratios = [
        errors[i] / errors[i + 1] if errors[i + 1] > 0 else float("inf")
        for i in range(len(errors) - 1)
    ]
    return {"limit": [limit], "errors": errors, "ratios": ratios}


def _pair_witness(a: Element, b: Element, **values) -> Dict:
    witness = {"a": a.to_list(), "b": b.to_list()}
    witness.update(values)
    return witness


def product_sup_law_check(
    algebra: Algebra,
    trials: int,
    seed: int = 0,
    tol: float = 1e-12,
) -> VerificationReport:
    """
    Thompson sup law d_T = max_i d_T(a_i, b_i) and its failure for Hilbert

    Raises:
        NotAProductError: If the algebra has fewer than two factors
    """
    if algebra.factor_count < 2:
        raise NotAProductError(algebra.factor_count)

    report = VerificationReport()
    max_error = 0.0
    sup_witness = None
    hilbert_witness = None

    # Rays through each factor unit: every factor Hilbert distance vanishes
    base_a = algebra.unit
    base_b = algebra.factor_units[0] * 2.0
    for unit in algebra.factor_units[1:]:
        base_b = base_b + unit
    pairs = [(base_a, base_b)]
    pairs += [
        (random_cone_point(algebra, seed + 2 * i), random_cone_point(algebra, seed + 2 * i + 1))
        for i in range(trials)
    ]

    for a, b in pairs:
        parts = list(zip(split(a), split(b)))
        d_t = thompson_distance(a, b)
        factor_t = max(thompson_distance(x, y) for x, y in parts)
        error = abs(d_t - factor_t)
        if error > max_error:
            max_error = error
            sup_witness = _pair_witness(a, b, product=d_t, factorMax=factor_t)

        if hilbert_witness is None:
            d_h = hilbert_distance(a, b)
            factor_h = max(hilbert_distance(x, y) for x, y in parts)
            if d_h > factor_h + 1e-9:
                hilbert_witness = _pair_witness(a, b, product=d_h, factorMax=factor_h)

    report.add(CheckRecord.from_error(
        "products.thompson_sup_law",
        "Thompson distance on a product is the max of factor distances",
        len(pairs), max_error, tol, witness=sup_witness,
    ))
    report.add(CheckRecord.from_witness(
        "products.hilbert_sup_law_fails",
        "Hilbert distance on a product exceeds the max of factor distances for some pair",
        len(pairs), 0.0, 1e-9, witness=hilbert_witness,
    ))
    return report
