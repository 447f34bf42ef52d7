"""
Isometry generators of symmetric cones and their numerical certification

Generators are composed into an IsometryMap whose atoms act right to left:
    QuadRepAuto(a)        x -> P(a) x
    FrameAuto(Φ)          x -> Φ x, Φ an orthogonal Jordan automorphism
    FactorPermutation(π)  swaps isomorphic factors
    FactorInversion(ε)    Σ x_i -> Σ x_i^{ε_i}
    CentralSymmetryMul(s) x -> s∘x (linear, does not preserve the cone)
Certification is sampling based: a pass means no violation above tol was found.
"""
import itertools
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from algebra import (
    Algebra,
    Element,
    LinearMap,
    _block_diag,
    is_central,
    jordan_det,
    jordan_product,
    jordan_trace,
    join,
    lmul,
    make_algebra,
    quad_rep,
    random_cone_point,
    random_element,
    split,
    trace_angle,
)
from cone_metrics import ConePoint, MetricKind, distance, gauge, geometric_mean, spectral_mean
from config import Config
from exceptions import AlgebraMismatchError, DomainError, NotUnitalError, WrongRankError
from logging_config import get_logger
from reports import CheckRecord, Verdict, VerificationReport
from spectral import idempotent_rank, jb_norm, jordan_exp, jordan_inverse, jordan_log, sigma_seminorm

logger = get_logger(__name__)

AUTOMORPHISM_TOL = 1e-9


class IsometryAtom(ABC):
    """One generator of the isometry group"""

    #: Whether the atom acts by a matrix on ambient coordinates
    linear: bool = True

    def __init__(self, algebra: Algebra):
        self.algebra = algebra

    @abstractmethod
    def apply(self, x: Element) -> Element:
        pass

    @property
    @abstractmethod
    def label(self) -> str:
        pass

    @property
    def matrix(self) -> Optional[np.ndarray]:
        """Coordinate matrix for linear atoms"""
        return None

    def _check(self, x: Element) -> None:
        if x.algebra != self.algebra:
            raise AlgebraMismatchError(f"{self.label} acts on {self.algebra.signature}, not {x.algebra.signature}")

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.label})"


class QuadRepAuto(IsometryAtom):
    """x -> P(a) x for a cone point a; fixes e only when a = e"""

    def __init__(self, a: Union[ConePoint, Element]):
        point = ConePoint.of(a)
        super().__init__(point.algebra)
        self.point = point
        self._map = quad_rep(point.element)

    @property
    def label(self) -> str:
        return "quad_rep"

    @property
    def matrix(self) -> np.ndarray:
        return self._map.matrix

    def apply(self, x: Element) -> Element:
        self._check(x)
        return self._map.apply(x)


class FrameAuto(IsometryAtom):
    """
    Orthogonal Jordan automorphism given by its coordinate matrix

    The matrix is validated on construction: orthogonality and
    Φ(x∘y) = Φ(x)∘Φ(y) on sampled pairs, both within 1e-9.

    Raises:
        DomainError: If the matrix is not an orthogonal Jordan automorphism
    """

    def __init__(self, algebra: Algebra, matrix: np.ndarray, seed: int = 0, samples: int = 8):
        super().__init__(algebra)
        m = np.asarray(matrix, dtype=float)
        if m.shape != (algebra.dim, algebra.dim):
            raise AlgebraMismatchError(f"Automorphism matrix shape {m.shape} does not match dim {algebra.dim}")
        self._matrix = m
        self.validate(seed, samples)

    @classmethod
    def random(cls, algebra: Algebra, seed: int) -> "FrameAuto":
        """Block-diagonal automorphism from a random automorphism of each factor"""
        rng = np.random.default_rng(seed)
        blocks = [factor.random_automorphism(rng) for factor in algebra.factors]
        return cls(algebra, _block_diag(blocks, algebra.dim), seed=seed)

    @property
    def label(self) -> str:
        return "frame_auto"

    @property
    def matrix(self) -> np.ndarray:
        return self._matrix

    def multiplicativity_residual(self, seed: int = 0, samples: int = 8) -> float:
        worst = 0.0
        for i in range(samples):
            x = random_element(self.algebra, seed + 2 * i)
            y = random_element(self.algebra, seed + 2 * i + 1)
            lhs = self.apply(jordan_product(x, y))
            rhs = jordan_product(self.apply(x), self.apply(y))
            worst = max(worst, lhs.distance_to(rhs))
        return worst

    def orthogonality_residual(self) -> float:
        return float(np.max(np.abs(self._matrix.T @ self._matrix - np.eye(self.algebra.dim))))

    def validate(self, seed: int = 0, samples: int = 8) -> None:
        ortho = self.orthogonality_residual()
        mult = self.multiplicativity_residual(seed, samples)
        if ortho > AUTOMORPHISM_TOL or mult > AUTOMORPHISM_TOL:
            raise DomainError(
                f"Matrix is not an orthogonal Jordan automorphism "
                f"(orthogonality {ortho:.2e}, multiplicativity {mult:.2e})"
            )

    def apply(self, x: Element) -> Element:
        self._check(x)
        return Element(self.algebra, self._matrix @ x.coords)


class FactorPermutation(IsometryAtom):
    """
    Reorders factors: output factor i is input factor perm[i]

    Raises:
        AlgebraMismatchError: If perm moves a factor onto a non-isomorphic one
    """

    def __init__(self, algebra: Algebra, perm: Sequence[int]):
        super().__init__(algebra)
        perm = tuple(int(p) for p in perm)
        if sorted(perm) != list(range(algebra.factor_count)):
            raise AlgebraMismatchError(f"{perm} is not a permutation of {algebra.factor_count} factors")
        for target, source in enumerate(perm):
            if algebra.factors[target] != algebra.factors[source]:
                raise AlgebraMismatchError(
                    f"Cannot move {algebra.factors[source].descriptor()} onto {algebra.factors[target].descriptor()}"
                )
        self.perm = perm
        index = np.concatenate([np.arange(algebra.dim)[algebra.slices[source]] for source in perm])
        self._matrix = np.eye(algebra.dim)[index]

    @property
    def label(self) -> str:
        return "factor_permutation"

    @property
    def matrix(self) -> np.ndarray:
        return self._matrix

    def apply(self, x: Element) -> Element:
        self._check(x)
        return Element(self.algebra, self._matrix @ x.coords)


class FactorInversion(IsometryAtom):
    """Σ x_i -> Σ x_i^{ε_i} with ε_i = ±1 per factor"""

    def __init__(self, algebra: Algebra, signs: Sequence[int]):
        super().__init__(algebra)
        signs = tuple(int(s) for s in signs)
        if len(signs) != algebra.factor_count or any(s not in (1, -1) for s in signs):
            raise DomainError(f"Need one sign in {{+1, -1}} per factor, got {signs}")
        self.signs = signs
        self.linear = all(s == 1 for s in signs)

    @property
    def label(self) -> str:
        if all(s == -1 for s in self.signs):
            return "global_inversion"
        if self.linear:
            return "identity"
        return "factor_inversion(" + ",".join("+" if s > 0 else "-" for s in self.signs) + ")"

    @property
    def matrix(self) -> Optional[np.ndarray]:
        return np.eye(self.algebra.dim) if self.linear else None

    def apply(self, x: Element) -> Element:
        self._check(x)
        if self.linear:
            return x
        if self.algebra.factor_count == 1:
            return jordan_inverse(x)
        parts = [part if s == 1 else jordan_inverse(part) for part, s in zip(split(x), self.signs)]
        return join(parts, self.algebra)


@dataclass(frozen=True)
class CentralSymmetry:
    """s = Σ ε_i e_i with ε_i = ±1; s∘s = e and s lies in the centre"""
    algebra: Algebra
    signs: Tuple[int, ...]

    @property
    def element(self) -> Element:
        s = self.algebra.zero()
        for sign, unit in zip(self.signs, self.algebra.factor_units):
            s = s + sign * unit
        return s

    def square_residual(self) -> float:
        s = self.element
        return jordan_product(s, s).distance_to(self.algebra.unit)

    def is_central(self, tol: float = 1e-9) -> bool:
        return is_central(self.element, tol)


class CentralSymmetryMul(IsometryAtom):
    """x -> s∘x; a linear isometry of the JB-norm that leaves the cone"""

    def __init__(self, symmetry: CentralSymmetry):
        super().__init__(symmetry.algebra)
        self.symmetry = symmetry
        self._matrix = lmul(symmetry.element).matrix

    @property
    def label(self) -> str:
        return "central_symmetry(" + ",".join("+" if s > 0 else "-" for s in self.symmetry.signs) + ")"

    @property
    def matrix(self) -> np.ndarray:
        return self._matrix

    def apply(self, x: Element) -> Element:
        self._check(x)
        return Element(self.algebra, self._matrix @ x.coords)


class IsometryMap:
    """Composite of atoms applied right to left"""

    def __init__(self, algebra: Algebra, atoms: Sequence[IsometryAtom] = ()):
        for atom in atoms:
            if atom.algebra != algebra:
                raise AlgebraMismatchError(f"Atom {atom.label} acts on {atom.algebra.signature}")
        self.algebra = algebra
        self.atoms: Tuple[IsometryAtom, ...] = tuple(atoms)

    @classmethod
    def identity(cls, algebra: Algebra) -> "IsometryMap":
        return cls(algebra)

    @classmethod
    def global_inversion(cls, algebra: Algebra) -> "IsometryMap":
        return cls(algebra, [FactorInversion(algebra, [-1] * algebra.factor_count)])

    @classmethod
    def of(cls, atom: IsometryAtom) -> "IsometryMap":
        return cls(atom.algebra, [atom])

    def compose(self, other: "IsometryMap") -> "IsometryMap":
        """self ∘ other: other acts first"""
        if other.algebra != self.algebra:
            raise AlgebraMismatchError("Cannot compose maps on different algebras")
        return IsometryMap(self.algebra, self.atoms + other.atoms)

    @property
    def is_linear(self) -> bool:
        return all(atom.linear for atom in self.atoms)

    @property
    def label(self) -> str:
        if not self.atoms:
            return "identity"
        return "*".join(atom.label for atom in self.atoms)

    def __call__(self, x: Element) -> Element:
        for atom in reversed(self.atoms):
            x = atom.apply(x)
        return x

    def __repr__(self) -> str:
        return f"IsometryMap({self.label!r})"


def apply_isometry(m: IsometryMap, x: Union[ConePoint, Element]) -> ConePoint:
    """
    Apply m to a cone point

    Raises:
        NotInConeError: If x (or the image) is not in the cone
    """
    return ConePoint.of(m(ConePoint.of(x).element))


def apply_linear(m: IsometryMap, u: Element) -> Element:
    """
    Apply a composite of linear atoms to an arbitrary element

    Raises:
        DomainError: If some atom is not linear
    """
    if not m.is_linear:
        raise DomainError(f"{m.label} is not linear")
    return m(u)


def enumerate_central_symmetries(algebra: Algebra) -> List[CentralSymmetry]:
    """All 2^k sign patterns Σ ε_i e_i, starting from e"""
    return [
        CentralSymmetry(algebra, signs)
        for signs in itertools.product((1, -1), repeat=algebra.factor_count)
    ]


def _relative_gap(x: Element, y: Element) -> float:
    scale = max(1.0, float(np.max(np.abs(x.coords))))
    return x.distance_to(y) / scale


def _random_pair(algebra: Algebra, seed: int, i: int) -> Tuple[Element, Element]:
    return random_cone_point(algebra, seed + 2 * i), random_cone_point(algebra, seed + 2 * i + 1)


def mixed_inversion_pair(algebra: Algebra) -> Tuple[Element, Element]:
    """P = e and Q = Σ 2^{k-i+1} e_i; on RN(1)xRN(1) this is (1,1), (4,2)"""
    k = algebra.factor_count
    q = algebra.zero()
    for i, unit in enumerate(algebra.factor_units):
        q = q + float(2 ** (k - i)) * unit
    return algebra.unit, q


def is_isometry_numeric(
    m: IsometryMap,
    metric: MetricKind,
    algebra: Algebra,
    trials: int,
    tol: float,
    seed: int = 0,
    expect: Verdict = Verdict.PASS,
    seed_pairs: Sequence[Tuple[Element, Element]] = (),
    check_id: Optional[str] = None,
) -> VerificationReport:
    """
    Sample cone pairs and compare d(g a, g b) with d(a, b)

    Seed pairs are tried before the random pairs. For expect=PASS the record is
    PASS iff the worst deviation is within tol, with the worst pair as
    witness otherwise. For expect=WITNESS the first pair deviating by more
    than tol is recorded and the check succeeds only if one was found.
    """
    check_id = check_id or f"isometries.{m.label}.{metric.value}"
    pairs = list(seed_pairs) + [_random_pair(algebra, seed, i) for i in range(trials)]
    max_error = 0.0
    worst = None
    first_violation = None

    for a, b in pairs:
        before = distance(metric, a, b)
        ga, gb = apply_isometry(m, a), apply_isometry(m, b)
        after = distance(metric, ga, gb)
        error = abs(after - before)
        if error > max_error:
            max_error = error
            worst = {"a": a.to_list(), "b": b.to_list(), "before": before, "after": after}
        if first_violation is None and error > tol:
            first_violation = {"a": a.to_list(), "b": b.to_list(), "before": before, "after": after}
            logger.debug(f"{check_id}: violation {before:.6g} -> {after:.6g}")

    claim = f"{m.label} {'preserves' if expect == Verdict.PASS else 'does not preserve'} the {metric.value} metric"
    report = VerificationReport()
    if expect == Verdict.WITNESS:
        report.add(CheckRecord.from_witness(check_id, claim, len(pairs), max_error, tol, first_violation))
    else:
        report.add(CheckRecord.from_error(check_id, claim, len(pairs), max_error, tol, witness=worst))
    return report


@dataclass(frozen=True)
class PushforwardResult:
    """
    Estimate of g_* with its diagnostics

    Attributes:
        matrix: Columns (1/λ) log g(exp(λ b_k)) over the coordinate basis
        linearity_residual: Max entry gap between the estimates at λ and λ/2
        norm_isometry_residual: Max |‖g_* v‖ - ‖v‖| (JB-norm) on random v
        sigma_residual: Max |‖g_* v‖_σ - ‖v‖_σ| on trace-zero random v
        additivity_residual: Max gap between the direct estimate at v and g_* v
    """
    matrix: LinearMap
    linearity_residual: float
    norm_isometry_residual: float
    sigma_residual: float
    additivity_residual: float


def _log_image(m: IsometryMap, u: Element, scale: float) -> Element:
    return jordan_log(m(jordan_exp(u * scale))) / scale


def _estimate(m: IsometryMap, basis: np.ndarray, algebra: Algebra, scale: float) -> np.ndarray:
    images = np.column_stack([
        _log_image(m, Element(algebra, column), scale).coords for column in basis.T
    ])
    return np.linalg.solve(basis.T, images.T).T


def pushforward_at_identity(
    m: IsometryMap,
    algebra: Algebra,
    scale: Optional[float] = None,
    basis: Optional[Sequence[Element]] = None,
    seed: int = 0,
    samples: int = 16,
) -> PushforwardResult:
    """
    Estimate the linear part g_* of a unital isometry at e

    Raises:
        NotUnitalError: If g(e) differs from e by more than 1e-9
    """
    scale = Config.PUSHFORWARD_SCALE if scale is None else scale
    residual = m(algebra.unit).distance_to(algebra.unit)
    if residual > 1e-9:
        raise NotUnitalError(residual)

    columns = np.eye(algebra.dim) if basis is None else np.column_stack([b.coords for b in basis])
    coarse = _estimate(m, columns, algebra, scale)
    fine = _estimate(m, columns, algebra, scale / 2.0)
    linear = LinearMap(coarse, algebra)

    norm_residual = 0.0
    sigma_residual = 0.0
    additivity = 0.0
    for i in range(samples):
        v = random_element(algebra, seed + i)
        norm_residual = max(norm_residual, abs(jb_norm(linear(v)) - jb_norm(v)))
        w = algebra.trace_zero_projection(v)
        sigma_residual = max(sigma_residual, abs(sigma_seminorm(linear(w)) - sigma_seminorm(w)))
        direct = _log_image(m, v, scale)
        additivity = max(additivity, direct.distance_to(linear(v)))

    return PushforwardResult(
        matrix=linear,
        linearity_residual=float(np.max(np.abs(coarse - fine))),
        norm_isometry_residual=norm_residual,
        sigma_residual=sigma_residual,
        additivity_residual=additivity,
    )


def rank2_inversion_linearity(algebra: Algebra, trials: int, seed: int = 0, tol: float = 1e-9) -> VerificationReport:
    """
    u^{-1} = (Tr(u) e - u) / det(u) in rank 2

    Raises:
        WrongRankError: Unless the rank is exactly 2
    """
    if algebra.rank != 2:
        raise WrongRankError(algebra.rank, "= 2")
    points = [random_cone_point(algebra, seed + i) for i in range(trials)]
    max_error = 0.0
    witness = None
    for u in points:
        projective = (jordan_trace(u) * algebra.unit - u) / jordan_det(u)
        error = _relative_gap(jordan_inverse(u), projective)
        if error > max_error:
            max_error = error
            witness = {"u": u.to_list()}
    report = VerificationReport()
    report.add(CheckRecord.from_error(
        "isometries.rank2_inversion_projective",
        "In rank 2 inversion is u -> (Tr(u) e - u) / det(u)",
        len(points), max_error, tol, witness=witness,
    ))
    return report


def blowup_divergence(algebra: Algebra, n_max: Optional[float] = None, tol: float = 1e-5) -> VerificationReport:
    """
    Rays n e1 + e2 + e3 and n e1 + 2 e2 + e3 merge as n grows while their
    inverses converge to the distinct rays [e2 + e3] and [(1/2) e2 + e3]

    Further frame idempotents (rank > 3) enter every vector with weight 1.

    Raises:
        WrongRankError: If the rank is below 3
    """
    if algebra.rank < 3:
        raise WrongRankError(algebra.rank, ">= 3")
    n_max = Config.BLOWUP_N_MAX if n_max is None else float(n_max)
    threshold = Config.BLOWUP_ANGLE
    frame = algebra.canonical_frame()
    e1, e2, e3 = frame[:3]
    rest = algebra.zero()
    for p in frame[3:]:
        rest = rest + p

    limit_1 = e2 + e3 + rest
    limit_2 = 0.5 * e2 + e3 + rest
    profile = []
    n = 10.0
    while n <= n_max * (1 + 1e-12):
        u1 = n * e1 + e2 + e3 + rest
        u2 = n * e1 + 2.0 * e2 + e3 + rest
        inv1, inv2 = jordan_inverse(u1), jordan_inverse(u2)
        profile.append({
            "n": n,
            "sourceAngle": trace_angle(u1, u2),
            "inverseAngle": trace_angle(inv1, inv2),
            "limitGap": max(trace_angle(inv1, limit_1), trace_angle(inv2, limit_2)),
        })
        n *= 10.0
    last = profile[-1]
    logger.info(f"Blow-up at n={last['n']:.0e}: source {last['sourceAngle']:.2e} rad, inverse {last['inverseAngle']:.4f} rad")

    report = VerificationReport()
    report.add(CheckRecord.from_error(
        "blowup.source_rays_merge",
        "Rays of n e1 + e2 + e3 and n e1 + 2 e2 + e3 converge to [e1]",
        len(profile), last["sourceAngle"], tol, witness={"n": last["n"]},
    ))
    report.add(CheckRecord.from_error(
        "blowup.inverse_limits",
        "Inverted rays converge to [e2 + e3] and [(1/2) e2 + e3]",
        len(profile), last["limitGap"], tol, witness={"n": last["n"]},
    ))
    separation = last["inverseAngle"]
    report.add(CheckRecord.from_witness(
        "blowup.inversion_not_projective",
        "Inversion separates rays with a common limit, so it is not projective in rank >= 3",
        len(profile), 0.0, threshold,
        witness={"n": last["n"], "angle": separation} if separation > threshold else None,
        details={"profile": profile},
    ))
    return report


@dataclass(frozen=True)
class OrbitCount:
    """Central symmetries up to permutations of isomorphic factors"""
    count: int
    k: int
    n: int
    formula: int


def thompson_symmetry_orbit_count(algebra: Union[Algebra, str]) -> OrbitCount:
    """
    Count sign patterns modulo permutations within isomorphism classes

    The orbit of a pattern is determined by the number of minus signs in
    each class, so the count is Π (k_i + 1); it is enumerated explicitly and
    reported with the formula value.
    """
    if isinstance(algebra, str):
        algebra = make_algebra(algebra)
    classes = algebra.isomorphism_classes()
    orbits = {
        tuple(sum(1 for i in members if signs[i] < 0) for members in classes)
        for signs in itertools.product((1, -1), repeat=algebra.factor_count)
    }
    formula = int(np.prod([len(members) + 1 for members in classes]))
    return OrbitCount(count=len(orbits), k=algebra.factor_count, n=len(classes), formula=formula)


def hilbert_automorphism_index(algebra: Union[Algebra, str]) -> int:
    """2 when inversion is a non-projective Hilbert isometry (rank >= 3), else 1"""
    if isinstance(algebra, str):
        algebra = make_algebra(algebra)
    return 2 if algebra.rank >= 3 else 1


def _preservation_check(
    check_id: str,
    claim: str,
    m: IsometryMap,
    algebra: Algebra,
    trials: int,
    seed: int,
    tol: float,
    mean: Callable[[Element, Element], ConePoint],
) -> VerificationReport:
    max_error = 0.0
    witness = None
    for i in range(trials):
        a, b = _random_pair(algebra, seed, i)
        lhs = m(mean(a, b).element)
        rhs = mean(m(a), m(b)).element
        error = _relative_gap(lhs, rhs)
        if error > max_error:
            max_error = error
            witness = {"a": a.to_list(), "b": b.to_list()}
    report = VerificationReport()
    report.add(CheckRecord.from_error(check_id, claim, trials, max_error, tol, witness=witness))
    return report


def midpoint_preservation_check(m: IsometryMap, algebra: Algebra, trials: int, seed: int = 0, tol: float = 1e-9) -> VerificationReport:
    return _preservation_check(
        f"isometries.{m.label}.midpoint", f"{m.label} preserves Riemannian midpoints",
        m, algebra, trials, seed, tol, geometric_mean,
    )


def spectral_mean_preservation_check(m: IsometryMap, algebra: Algebra, trials: int, seed: int = 0, tol: float = 1e-9) -> VerificationReport:
    return _preservation_check(
        f"isometries.{m.label}.spectral_mean", f"{m.label} preserves the spectral mean",
        m, algebra, trials, seed, tol, spectral_mean,
    )


def gauge_invariance_check(m: IsometryMap, algebra: Algebra, trials: int, seed: int = 0, tol: float = 1e-9) -> VerificationReport:
    """M(P, Q) = M(gP, gQ) for cone automorphisms"""
    max_error = 0.0
    witness = None
    for i in range(trials):
        p, q = _random_pair(algebra, seed, i)
        before = gauge(p, q)
        error = abs(gauge(m(p), m(q)) - before) / max(1.0, before)
        if error > max_error:
            max_error = error
            witness = {"p": p.to_list(), "q": q.to_list()}
    report = VerificationReport()
    report.add(CheckRecord.from_error(
        f"isometries.{m.label}.gauge", f"{m.label} leaves the gauge M(P, Q) invariant",
        trials, max_error, tol, witness=witness,
    ))
    return report


def frame_auto_rank_check(atom: FrameAuto, trials: int, seed: int = 0, tol: float = 1e-9) -> VerificationReport:
    """Images of Jordan frames are Jordan frames: rank-one, orthogonal, summing to e"""
    algebra = atom.algebra
    max_error = 0.0
    witness = None
    for i in range(trials):
        images = [atom.apply(p) for p in algebra.random_frame(seed + i)]
        error = 0.0
        for p in images:
            if idempotent_rank(p) != 1:
                error = max(error, 1.0)
        for p, q in itertools.combinations(images, 2):
            error = max(error, float(np.max(np.abs(jordan_product(p, q).coords))))
        total = algebra.zero()
        for p in images:
            total = total + p
        error = max(error, total.distance_to(algebra.unit))
        if error > max_error:
            max_error = error
            witness = {"frameSeed": seed + i}
    report = VerificationReport()
    report.add(CheckRecord.from_error(
        "isometries.frame_auto.rank",
        "Jordan automorphisms map Jordan frames to Jordan frames",
        trials, max_error, tol, witness=witness,
    ))
    return report


@dataclass(frozen=True)
class Generator:
    """Catalogue entry: a generator with its expected behaviour per metric"""
    name: str
    isometry: IsometryMap
    expectations: Dict[MetricKind, Verdict]
    unital: bool
    automorphism: bool
    seed_pairs: Tuple[Tuple[Element, Element], ...] = ()


def generator_catalogue(algebra: Algebra, seed: int = 0) -> List[Generator]:
    """Generators applicable to the algebra with their expected verdicts"""
    both = {MetricKind.THOMPSON: Verdict.PASS, MetricKind.HILBERT: Verdict.PASS}
    catalogue = [
        Generator("quad_rep", IsometryMap.of(QuadRepAuto(random_cone_point(algebra, seed + 7919))),
                  both, unital=False, automorphism=True),
        Generator("frame_auto", IsometryMap.of(FrameAuto.random(algebra, seed)),
                  both, unital=True, automorphism=True),
    ]
    for members in algebra.isomorphism_classes():
        if len(members) >= 2:
            perm = list(range(algebra.factor_count))
            perm[members[0]], perm[members[1]] = perm[members[1]], perm[members[0]]
            catalogue.append(Generator("factor_permutation", IsometryMap.of(FactorPermutation(algebra, perm)),
                                       both, unital=True, automorphism=True))
            break
    catalogue.append(Generator("global_inversion", IsometryMap.global_inversion(algebra),
                               both, unital=True, automorphism=False))
    if algebra.factor_count >= 2:
        signs = [1] + [-1] * (algebra.factor_count - 1)
        catalogue.append(Generator(
            "factor_inversion",
            IsometryMap.of(FactorInversion(algebra, signs)),
            {MetricKind.THOMPSON: Verdict.PASS, MetricKind.HILBERT: Verdict.WITNESS},
            unital=True,
            automorphism=False,
            seed_pairs=(mixed_inversion_pair(algebra),),
        ))
    return catalogue
