"""
Verification suites and their concurrent runner

Each suite is a plain function of a SuiteContext returning a
VerificationReport. SuiteRegistry runs the selected suites concurrently in a
thread pool; records are merged and sorted by check id, so the report does
not depend on scheduling.
"""
import asyncio
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Dict, List, Optional, Tuple

import numpy as np

from algebra import Algebra, Element, jordan_det, lmul, make_algebra, quad_rep, random_cone_point, random_element
from cone_metrics import (
    MetricKind,
    distance,
    gauge,
    gauge_bruteforce,
    geodesic_midpoint_refinement,
    geometric_mean,
    hilbert_distance,
    limit_norm,
    normalize_det,
    product_sup_law_check,
    rescaled_convergence,
    rescaled_distance,
    riemannian_geodesic,
    spectral_mean,
    thompson_distance,
)
from config import Config
from exceptions import ConeCheckError, NotAProductError, WrongRankError
from idempotents import frame_sigma_check, idempotent_class_norm_check, sigma_cardinality_sweep
from isometries import (
    CentralSymmetry,
    CentralSymmetryMul,
    FactorInversion,
    FrameAuto,
    IsometryMap,
    blowup_divergence,
    enumerate_central_symmetries,
    frame_auto_rank_check,
    gauge_invariance_check,
    generator_catalogue,
    hilbert_automorphism_index,
    is_isometry_numeric,
    midpoint_preservation_check,
    pushforward_at_identity,
    rank2_inversion_linearity,
    spectral_mean_preservation_check,
    thompson_symmetry_orbit_count,
)
from logging_config import get_logger
from reports import CheckRecord, Verdict, VerificationReport
from spectral import eigenvalues, jb_norm, jordan_exp, jordan_inverse, jordan_sqrt, simultaneously_diagonalizable
from validation import RunConfig

logger = get_logger(__name__)

LAMBDAS = (1e-1, 1e-2, 1e-3)
LIMIT_RATIO = 5.0


class SuiteStatus(Enum):
    """Suite run status"""
    COMPLETED = "completed"
    SKIPPED = "skipped"
    ERROR = "error"


@dataclass(frozen=True)
class SuiteContext:
    """Inputs shared by every suite of one run"""
    algebra: Algebra
    seed: int
    trials: int
    tol: float
    r_max: int

    @classmethod
    def from_run_config(cls, config: RunConfig) -> "SuiteContext":
        return cls(
            algebra=make_algebra(config.algebra),
            seed=config.seed,
            trials=config.trials,
            tol=config.tol,
            r_max=config.r_max,
        )

    def capped(self, limit: int) -> int:
        """Trial count for the heavier checks"""
        return max(1, min(self.trials, limit))


@dataclass
class SuiteOutcome:
    name: str
    status: SuiteStatus
    report: VerificationReport
    reason: Optional[str] = None
    duration: float = 0.0


def _relative_gap(x: Element, y: Element) -> float:
    scale = max(1.0, float(np.max(np.abs(x.coords))))
    return x.distance_to(y) / scale


def _pair(algebra: Algebra, seed: int, i: int) -> Tuple[Element, Element]:
    return random_cone_point(algebra, seed + 2 * i), random_cone_point(algebra, seed + 2 * i + 1)


class _Worst:
    """Tracks the largest error and the inputs that produced it"""

    def __init__(self):
        self.error = 0.0
        self.witness = None

    def update(self, error: float, **witness) -> None:
        if error > self.error or np.isnan(error):
            self.error = float(error)
            self.witness = {k: v.to_list() if isinstance(v, Element) else v for k, v in witness.items()}

    def record(self, check_id: str, claim: str, trials: int, tol: float) -> CheckRecord:
        return CheckRecord.from_error(check_id, claim, trials, self.error, tol, witness=self.witness)


def metrics_suite(ctx: SuiteContext) -> VerificationReport:
    """Gauge oracle, log-of-gauge formulas, metric axioms and ray invariance"""
    algebra, trials = ctx.algebra, ctx.trials
    oracle, formulas, inverse_sym = _Worst(), _Worst(), _Worst()
    symmetry, triangle, projective = _Worst(), _Worst(), _Worst()

    for i in range(trials):
        p, q = _pair(algebra, ctx.seed, i)
        m_pq, m_qp = gauge(p, q), gauge(q, p)
        oracle.update(abs(m_pq - gauge_bruteforce(p, q)), p=p, q=q)
        formulas.update(
            max(
                abs(thompson_distance(p, q) - np.log(max(m_pq, m_qp))),
                abs(hilbert_distance(p, q) - np.log(m_pq * m_qp)),
            ),
            p=p, q=q,
        )
        inverse_sym.update(abs(m_pq - gauge(jordan_inverse(q), jordan_inverse(p))) / max(1.0, m_pq), p=p, q=q)

        c = random_cone_point(algebra, ctx.seed + 2 * trials + i)
        for kind in MetricKind:
            symmetry.update(abs(distance(kind, p, q) - distance(kind, q, p)), a=p, b=q, metric=kind.value)
            if kind == MetricKind.HILBERT:
                a, b, cc = (normalize_det(x) for x in (p, q, c))
            else:
                a, b, cc = p, q, c
            slack = distance(kind, a, cc) - distance(kind, a, b) - distance(kind, b, cc)
            triangle.update(max(slack, 0.0), a=p, b=q, c=c, metric=kind.value)

        projective.update(
            max(hilbert_distance(p, p * 7.0), abs(hilbert_distance(p, q) - hilbert_distance(normalize_det(p), normalize_det(q)))),
            a=p, b=q,
        )

    report = VerificationReport()
    report.add(oracle.record("metrics.gauge_oracle", "Spectral gauge sup spec P(Q^{-1/2})P equals inf{t : tQ - P in the cone}", trials, 1e-7))
    report.add(formulas.record("metrics.gauge_formulas", "d_T = log max(M(P,Q), M(Q,P)) and d_H = log M(P,Q)M(Q,P)", trials, 1e-9))
    report.add(inverse_sym.record("metrics.gauge_inverse", "M(a, b) = M(b^-1, a^-1)", trials, 1e-9))
    report.add(symmetry.record("metrics.symmetry", "d(a, b) = d(b, a) for all three metrics", trials, 1e-10))
    report.add(triangle.record("metrics.triangle", "Triangle inequality for d_T, d_H (det-one section) and d_R", trials, 1e-9))
    report.add(projective.record("metrics.hilbert_projective", "d_H vanishes on rays and is unchanged by det normalization", trials, 1e-9))
    return report


def means_suite(ctx: SuiteContext) -> VerificationReport:
    """Geodesics, geometric and spectral means, and the commutation criterion"""
    algebra, trials = ctx.algebra, ctx.trials
    rng = np.random.default_rng(ctx.seed)
    speed, endpoints, midpoint = _Worst(), _Worst(), _Worst()
    geo_eq, geo_sym, spec_eq, det_one, refinement = _Worst(), _Worst(), _Worst(), _Worst(), _Worst()

    for i in range(trials):
        a, b = _pair(algebra, ctx.seed, i)
        s, t = rng.uniform(-0.5, 1.5, size=2)
        gs, gt = riemannian_geodesic(a, b, s), riemannian_geodesic(a, b, t)
        for kind in MetricKind:
            expected = abs(t - s) * distance(kind, a, b)
            speed.update(abs(distance(kind, gs, gt) - expected), a=a, b=b, s=float(s), t=float(t), metric=kind.value)
        endpoints.update(
            max(_relative_gap(riemannian_geodesic(a, b, 0.0).element, a), _relative_gap(riemannian_geodesic(a, b, 1.0).element, b)),
            a=a, b=b,
        )
        mean = geometric_mean(a, b).element
        midpoint.update(_relative_gap(riemannian_geodesic(a, b, 0.5).element, mean), a=a, b=b)

        geo_eq.update(_relative_gap(quad_rep(mean).apply(jordan_inverse(a)), b), a=a, b=b)
        geo_sym.update(_relative_gap(geometric_mean(b, a).element, mean), a=a, b=b)

        x = spectral_mean(a, b).element
        a_inv = jordan_inverse(a)
        lhs = geometric_mean(a_inv, b).element
        spec_eq.update(_relative_gap(jordan_sqrt(lhs), geometric_mean(a_inv, x).element), a=a, b=b)

        n = normalize_det(a * float(1.0 + i % 5))
        det_one.update(max(abs(jordan_det(n.element) - 1.0), _relative_gap(n.element, normalize_det(a).element)), a=a)

    for i in range(ctx.capped(25)):
        a, b = _pair(algebra, ctx.seed + 7 * trials, i)
        points = geodesic_midpoint_refinement(a, b, 3)
        error = max(
            _relative_gap(point.element, riemannian_geodesic(a, b, k / 8.0).element)
            for k, point in enumerate(points)
        )
        refinement.update(error, a=a, b=b)

    report = VerificationReport()
    report.add(speed.record("means.geodesic_speed", "Geodesics have constant speed for d_T, d_H and d_R", trials, ctx.tol))
    report.add(endpoints.record("means.geodesic_endpoints", "γ(0) = a and γ(1) = b", trials, 1e-9))
    report.add(midpoint.record("means.geodesic_midpoint", "γ(1/2) equals the geometric mean", trials, 1e-9))
    report.add(geo_eq.record("means.geometric_equation", "a#b solves P(x) a^-1 = b", trials, 1e-9))
    report.add(geo_sym.record("means.geometric_symmetric", "a#b = b#a", trials, 1e-9))
    report.add(spec_eq.record("means.spectral_equation", "x = spectral mean solves (a^-1#b)^(1/2) = a^-1#x", trials, 1e-9))
    report.add(det_one.record("means.normalize_det", "normalize_det lands on det = 1 and is constant on rays", trials, 1e-10))
    report.add(refinement.record("means.midpoint_refinement", "Repeated midpoints reproduce the dyadic geodesic points", ctx.capped(25), 1e-9))
    report.extend(commutation_criterion_check(algebra, trials, ctx.seed))
    return report


def _commuting_pair(algebra: Algebra, seed: int, frame: Optional[List[Element]] = None) -> Tuple[Element, Element]:
    """Two elements diagonal in one frame (random frame unless given)"""
    rng = np.random.default_rng(seed)
    frame = frame if frame is not None else algebra.random_frame(seed)
    rows = np.vstack([p.coords for p in frame])
    return (
        Element(algebra, rng.standard_normal(algebra.rank) @ rows),
        Element(algebra, rng.standard_normal(algebra.rank) @ rows),
    )


def commutation_criterion_check(algebra: Algebra, trials: int, seed: int = 0, tol: float = 1e-7) -> VerificationReport:
    """Means of exp(x), exp(y) coincide iff x and y are simultaneously diagonalizable"""
    disagreements = []
    for i in range(trials):
        if i % 2 == 0:
            x, y = _commuting_pair(algebra, seed + i)
        else:
            x, y = random_element(algebra, seed + 2 * i) * 0.5, random_element(algebra, seed + 2 * i + 1) * 0.5
        a, b = jordan_exp(x), jordan_exp(y)
        gap = _relative_gap(geometric_mean(a, b).element, spectral_mean(a, b).element)
        commuting = simultaneously_diagonalizable(x, y)
        if commuting != (gap <= tol):
            disagreements.append({"x": x.to_list(), "y": y.to_list(), "gap": gap, "commuting": commuting})
    report = VerificationReport()
    report.add(CheckRecord.from_error(
        "means.commutation_criterion",
        "Geometric and spectral means agree exactly on simultaneously diagonalizable pairs",
        trials, len(disagreements), 0.0,
        witness=disagreements[0] if disagreements else None,
    ))
    return report


def _limit_is_smooth(kind: MetricKind, w: Element, gap: float = 0.1) -> bool:
    """The limit norm of w is attained by well separated eigenvalues"""
    values = eigenvalues(w)
    if kind == MetricKind.RIEMANNIAN or len(values) < 2:
        return True
    if kind == MetricKind.THOMPSON:
        magnitudes = np.sort(np.abs(values))
        return bool(magnitudes[-1] - magnitudes[-2] >= gap)
    return bool(values[-1] - values[-2] >= gap and values[1] - values[0] >= gap)


def limits_suite(ctx: SuiteContext) -> VerificationReport:
    """Rescaled metrics d_λ and their norm limits as λ -> 0"""
    algebra = ctx.algebra
    exact, unit_lambda = _Worst(), _Worst()
    frame = algebra.canonical_frame()
    trials = ctx.capped(50)

    def prepare(kind: MetricKind, u: Element, v: Element) -> Tuple[Element, Element]:
        if kind == MetricKind.HILBERT:
            return algebra.trace_zero_projection(u), algebra.trace_zero_projection(v)
        return u, v

    rate_violations = []
    ratios: List[float] = []
    skipped = 0
    for i in range(trials):
        u, v = _commuting_pair(algebra, ctx.seed + i, frame)
        for kind in MetricKind:
            uk, vk = prepare(kind, u, v)
            limit = limit_norm(kind, vk - uk)
            for lam in LAMBDAS:
                exact.update(abs(rescaled_distance(kind, lam, uk, vk) - limit), u=uk, v=vk, lam=lam, metric=kind.value)

        w = random_element(algebra, ctx.seed + 3 * trials + i)
        unit_lambda.update(
            abs(rescaled_distance(MetricKind.THOMPSON, 1.0, algebra.zero(), w) - thompson_distance(algebra.unit, jordan_exp(w))),
            v=w,
        )

        u, v = random_element(algebra, ctx.seed + 2 * i), random_element(algebra, ctx.seed + 2 * i + 1)
        for kind in MetricKind:
            uk, vk = prepare(kind, u, v)
            if not _limit_is_smooth(kind, vk - uk):
                skipped += 1
                continue
            profile = rescaled_convergence(kind, uk, vk, LAMBDAS)
            errors = profile["errors"]
            # commuting draws (e.g. associative algebras) are exact at every λ
            if errors[0] <= 1e-10:
                continue
            ratios.extend(profile["ratios"])
            if any(r < LIMIT_RATIO for r in profile["ratios"]):
                rate_violations.append({"u": uk.to_list(), "v": vk.to_list(), "metric": kind.value, "errors": errors})

    report = VerificationReport()
    report.add(exact.record("limits.commuting_exact", "d_λ equals the limit norm at every λ for commuting pairs", trials, 1e-12))
    report.add(unit_lambda.record("limits.unit_lambda", "d_1(0, v) = d_T(e, exp v)", trials, 1e-12))
    details = {"lambdas": list(LAMBDAS), "skippedNearDegenerate": skipped}
    if ratios:
        details.update({"minRatio": float(min(ratios)), "maxRatio": float(max(ratios))})
    report.add(CheckRecord.from_error(
        "limits.convergence_rate",
        "|d_λ(u, v) - ‖v - u‖| decreases monotonically as λ -> 0",
        trials, len(rate_violations), 0.0,
        witness=rate_violations[0] if rate_violations else None,
        details=details,
    ))
    return report


def _expected_pushforward(m: IsometryMap) -> Optional[np.ndarray]:
    """Closed-form g_* of a single-atom unital generator"""
    atom = m.atoms[0]
    if isinstance(atom, FactorInversion):
        return lmul(CentralSymmetry(atom.algebra, atom.signs).element).matrix
    return atom.matrix


def isometries_suite(ctx: SuiteContext) -> VerificationReport:
    """Generator catalogue against both metrics, preservation laws and g_*"""
    algebra, trials = ctx.algebra, ctx.trials
    heavy = ctx.capped(100)
    report = VerificationReport()

    for generator in generator_catalogue(algebra, ctx.seed):
        m = generator.isometry
        for metric, verdict in generator.expectations.items():
            report.extend(is_isometry_numeric(
                m, metric, algebra, trials, 1e-9, seed=ctx.seed, expect=verdict, seed_pairs=generator.seed_pairs,
            ))
        report.extend(midpoint_preservation_check(m, algebra, heavy, ctx.seed))
        if generator.automorphism:
            report.extend(gauge_invariance_check(m, algebra, heavy, ctx.seed))
        if generator.unital:
            report.extend(spectral_mean_preservation_check(m, algebra, heavy, ctx.seed))
            result = pushforward_at_identity(m, algebra, seed=ctx.seed)
            residuals = [
                result.linearity_residual,
                result.additivity_residual,
                result.norm_isometry_residual,
                float(np.max(np.abs(result.matrix.matrix - _expected_pushforward(m)))),
            ]
            # σ is only preserved by maps that are Hilbert isometries
            hilbert_isometry = generator.expectations.get(MetricKind.HILBERT) == Verdict.PASS
            if hilbert_isometry:
                residuals.append(result.sigma_residual)
            report.add(CheckRecord.from_error(
                f"isometries.{m.label}.pushforward",
                f"g_* of {m.label} is linear, a JB-isometry"
                f"{', a σ-isometry' if hilbert_isometry else ''} and matches its closed form",
                algebra.dim, max(residuals), 1e-6,
                witness={"generator": m.label},
                details={
                    "linearityResidual": result.linearity_residual,
                    "normIsometryResidual": result.norm_isometry_residual,
                    "sigmaResidual": result.sigma_residual,
                },
            ))

    symmetries = enumerate_central_symmetries(algebra)
    worst = _Worst()
    worst.update(abs(len(symmetries) - 2 ** algebra.factor_count), count=len(symmetries))
    for symmetry in symmetries:
        worst.update(symmetry.square_residual(), signs=list(symmetry.signs))
        if not symmetry.is_central():
            worst.update(1.0, signs=list(symmetry.signs))
        mul = IsometryMap.of(CentralSymmetryMul(symmetry))
        for i in range(min(heavy, 10)):
            x = random_element(algebra, ctx.seed + i)
            worst.update(abs(jb_norm(mul(x)) - jb_norm(x)), signs=list(symmetry.signs), x=x)
    report.add(worst.record(
        "isometries.central_symmetries",
        "There are 2^k central symmetries; each squares to e, is central and preserves the JB-norm",
        len(symmetries), 1e-9,
    ))

    report.extend(frame_auto_rank_check(FrameAuto.random(algebra, ctx.seed), ctx.capped(50), ctx.seed))
    if algebra.rank == 2:
        report.extend(rank2_inversion_linearity(algebra, trials, ctx.seed))

    orbits = thompson_symmetry_orbit_count(algebra)
    report.add(CheckRecord.from_error(
        "isometries.symmetry_orbits",
        "Central symmetries modulo isomorphic-factor permutations number Π(k_i + 1)",
        1, abs(orbits.count - orbits.formula), 0.0,
        witness={"count": orbits.count, "formula": orbits.formula},
        details={"count": orbits.count, "k": orbits.k, "n": orbits.n,
                 "hilbertIndex": hilbert_automorphism_index(algebra)},
    ))
    return report


def idempotents_suite(ctx: SuiteContext) -> VerificationReport:
    report = sigma_cardinality_sweep(ctx.r_max)
    report.extend(frame_sigma_check(ctx.algebra, ctx.seed))
    if ctx.algebra.rank >= 2:
        report.extend(idempotent_class_norm_check(ctx.algebra, ctx.capped(100), ctx.seed))
    else:
        logger.warning(f"Skipping idempotent class checks: rank {ctx.algebra.rank} < 2")
    return report


def blowup_suite(ctx: SuiteContext) -> VerificationReport:
    return blowup_divergence(ctx.algebra)


def products_suite(ctx: SuiteContext) -> VerificationReport:
    return product_sup_law_check(ctx.algebra, ctx.trials, ctx.seed)


def _require_rank3(algebra: Algebra) -> None:
    if algebra.rank < 3:
        raise WrongRankError(algebra.rank, ">= 3")


def _require_product(algebra: Algebra) -> None:
    if algebra.factor_count < 2:
        raise NotAProductError(algebra.factor_count)


class SuiteRegistry:
    """
    Suite manager

    Holds the suite functions with their preconditions and runs a selection
    concurrently on a thread pool.
    """

    def __init__(self, max_workers: Optional[int] = None):
        self.suites: Dict[str, Callable[[SuiteContext], VerificationReport]] = {}
        self.requirements: Dict[str, Callable[[Algebra], None]] = {}
        self.max_workers = max_workers or Config.MAX_WORKERS

    def register_suite(
        self,
        name: str,
        suite_func: Callable[[SuiteContext], VerificationReport],
        requirement: Optional[Callable[[Algebra], None]] = None,
    ):
        """
        Register a suite

        Args:
            name: Suite name (e.g., "metrics", "blowup")
            suite_func: Function of a SuiteContext returning a VerificationReport
            requirement: Raises WrongRankError/NotAProductError when the suite
                does not apply to an algebra
        """
        self.suites[name] = suite_func
        if requirement is not None:
            self.requirements[name] = requirement
        logger.debug(f"Registered suite: {name}")

    def check_applicable(self, name: str, algebra: Algebra) -> None:
        requirement = self.requirements.get(name)
        if requirement is not None:
            requirement(algebra)

    def select(self, names: List[str], algebra: Algebra, explicit: bool) -> List[str]:
        """
        Drop inapplicable suites

        Raises:
            WrongRankError, NotAProductError: If an explicitly requested suite
                does not apply
        """
        selected = []
        for name in names:
            try:
                self.check_applicable(name, algebra)
            except (WrongRankError, NotAProductError) as e:
                if explicit:
                    raise
                logger.warning(f"Skipping suite {name} for {algebra.signature}: {e}")
                continue
            selected.append(name)
        return selected

    def _run_blocking(self, name: str, context: SuiteContext) -> SuiteOutcome:
        start = time.perf_counter()
        logger.info(f"Suite {name} started on {context.algebra.signature}")
        try:
            report = self.suites[name](context)
            status, reason = SuiteStatus.COMPLETED, None
        except ConeCheckError as e:
            logger.error(f"Suite {name} failed: {e}")
            report = VerificationReport()
            report.add(CheckRecord(
                check_id=f"{name}.error",
                claim=f"Suite {name} runs to completion",
                trials=0,
                max_error=float("inf"),
                tolerance=0.0,
                verdict=Verdict.FAIL,
                witness={"error": type(e).__name__, "message": str(e)},
            ))
            status, reason = SuiteStatus.ERROR, str(e)
        duration = time.perf_counter() - start
        logger.info(f"Suite {name} finished in {duration:.2f}s ({report.passed_count}/{len(report)} passed)")
        return SuiteOutcome(name=name, status=status, report=report, reason=reason, duration=duration)

    async def run_suite(self, name: str, context: SuiteContext, executor: Optional[ThreadPoolExecutor] = None) -> SuiteOutcome:
        if name not in self.suites:
            raise KeyError(f"Unknown suite: {name}")
        loop = asyncio.get_running_loop()
        return await loop.run_in_executor(executor, self._run_blocking, name, context)

    async def run_all(
        self,
        context: SuiteContext,
        names: Optional[List[str]] = None,
        explicit: bool = False,
    ) -> Tuple[VerificationReport, List[SuiteOutcome]]:
        """
        Run the selected suites concurrently

        Returns:
            Merged report and per-suite outcomes (skipped suites included)
        """
        names = names if names is not None else list(self.suites)
        selected = self.select(names, context.algebra, explicit)
        outcomes = [
            SuiteOutcome(name=n, status=SuiteStatus.SKIPPED, report=VerificationReport(), reason="not applicable")
            for n in names if n not in selected
        ]

        with ThreadPoolExecutor(max_workers=self.max_workers) as executor:
            results = await asyncio.gather(*(self.run_suite(n, context, executor) for n in selected))

        merged = VerificationReport()
        for outcome in results:
            merged.records.extend(outcome.report.records)
        outcomes.extend(results)
        return merged, outcomes


def default_registry(max_workers: Optional[int] = None) -> SuiteRegistry:
    """Registry with every suite of the catalogue in canonical order"""
    registry = SuiteRegistry(max_workers)
    registry.register_suite("metrics", metrics_suite)
    registry.register_suite("means", means_suite)
    registry.register_suite("isometries", isometries_suite)
    registry.register_suite("limits", limits_suite)
    registry.register_suite("idempotents", idempotents_suite)
    registry.register_suite("blowup", blowup_suite, _require_rank3)
    registry.register_suite("products", products_suite, _require_product)
    return registry
