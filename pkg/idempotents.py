"""
Idempotents diagonal in a Jordan frame

For a frame (m_1, ..., m_r) every bit mask selects the idempotent Σ m_i over
the set bits. The neighbour set Σ(p) of a nontrivial p collects the q != p
in the same frame with ‖p - q‖_σ = 1; it has 2^k + 2^{r-k} - 2 elements for
rank k, and these counts separate ranks up to k <-> r - k.
"""
import itertools
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from algebra import Algebra, Element, jordan_product, split
from config import Config
from exceptions import DomainError, InvalidFrameError, IsIdempotentError, TrivialIdempotentError, WrongRankError
from logging_config import get_logger
from reports import CheckRecord, VerificationReport
from spectral import idempotent_rank, sigma_seminorm, spectral_decompose

logger = get_logger(__name__)

SIGMA_TOL = 1e-9


@dataclass(frozen=True)
class FrameIdempotent:
    """Σ frame[i] over the set bits of mask"""
    frame: Tuple[Element, ...]
    mask: int

    @property
    def algebra(self) -> Algebra:
        return self.frame[0].algebra

    @property
    def size(self) -> int:
        return len(self.frame)

    @property
    def full_mask(self) -> int:
        return (1 << self.size) - 1

    @property
    def rank(self) -> int:
        return bin(self.mask).count("1")

    @property
    def is_trivial(self) -> bool:
        return self.mask in (0, self.full_mask)

    @property
    def element(self) -> Element:
        total = self.algebra.zero()
        for i, p in enumerate(self.frame):
            if self.mask >> i & 1:
                total = total + p
        return total

    def complement(self) -> "FrameIdempotent":
        """e - p"""
        return FrameIdempotent(self.frame, self.full_mask ^ self.mask)

    def below(self, other: "FrameIdempotent") -> bool:
        """Strictly dominated: self < other in the frame order"""
        return self.mask != other.mask and self.mask & ~other.mask == 0

    def idempotency_residual(self) -> float:
        x = self.element
        return jordan_product(x, x).distance_to(x)

    def __repr__(self) -> str:
        return f"FrameIdempotent(mask={self.mask:0{self.size}b}, rank={self.rank})"


def validate_frame(frame: Sequence[Element], tol: float = 1e-10) -> Tuple[Element, ...]:
    """
    Check that frame is a Jordan frame of its algebra

    Raises:
        InvalidFrameError: On wrong length, non-idempotent or non-primitive
            members, non-orthogonal pairs, or a sum different from e
    """
    frame = tuple(frame)
    if not frame:
        raise InvalidFrameError("Frame is empty")
    algebra = frame[0].algebra
    if any(p.algebra != algebra for p in frame):
        raise InvalidFrameError("Frame members belong to different algebras")
    if len(frame) != algebra.rank:
        raise InvalidFrameError(f"Frame has {len(frame)} members, rank is {algebra.rank}")

    total = algebra.zero()
    for i, p in enumerate(frame):
        if jordan_product(p, p).distance_to(p) > tol:
            raise InvalidFrameError(f"Member {i} is not idempotent")
        if idempotent_rank(p, tol=Config.IDEMPOTENT_TOL) != 1:
            raise InvalidFrameError(f"Member {i} is not primitive")
        total = total + p
    for i, j in itertools.combinations(range(len(frame)), 2):
        if float(np.max(np.abs(jordan_product(frame[i], frame[j]).coords))) > tol:
            raise InvalidFrameError(f"Members {i} and {j} are not orthogonal")
    if total.distance_to(algebra.unit) > tol:
        raise InvalidFrameError("Frame does not sum to the unit")
    return frame


def enumerate_diagonal_idempotents(frame: Sequence[Element], nontrivial: bool = False) -> List[FrameIdempotent]:
    """
    All 2^r idempotents diagonal in the frame, by increasing mask

    Raises:
        InvalidFrameError: If frame is not a Jordan frame
    """
    frame = validate_frame(frame)
    masks = range(1, (1 << len(frame)) - 1) if nontrivial else range(1 << len(frame))
    return [FrameIdempotent(frame, mask) for mask in masks]


def sigma_set(p: FrameIdempotent) -> List[FrameIdempotent]:
    """
    Frame idempotents q != p (0 and e included) with ‖p - q‖_σ = 1

    σ is evaluated spectrally; the spectrum of p - q lies in {-1, 0, 1}.

    Raises:
        TrivialIdempotentError: If p is 0 or e
    """
    if p.is_trivial:
        raise TrivialIdempotentError(f"Idempotent with mask {p.mask} is trivial")
    x = p.element
    neighbours = []
    for mask in range(1 << p.size):
        if mask == p.mask:
            continue
        q = FrameIdempotent(p.frame, mask)
        if abs(sigma_seminorm(x - q.element) - 1.0) <= SIGMA_TOL:
            neighbours.append(q)
    return neighbours


def sigma_split(p: FrameIdempotent) -> Tuple[List[FrameIdempotent], List[FrameIdempotent]]:
    """Σ(p) split into idempotents strictly below p and strictly above p"""
    neighbours = sigma_set(p)
    below = [q for q in neighbours if q.below(p)]
    above = [q for q in neighbours if p.below(q)]
    return below, above


def sigma_cardinality(r: int, k: int) -> int:
    return 2 ** k + 2 ** (r - k) - 2


def _sigma_counts(r: int) -> Tuple[np.ndarray, np.ndarray]:
    """Enumerated |Σ| and |Σ below| for the representative rank-k mask, k = 1..r-1"""
    masks = np.arange(1 << r, dtype=np.int64)
    bits = ((masks[:, None] >> np.arange(r)) & 1).astype(np.int8)
    counts, below = [], []
    for k in range(1, r):
        p = (1 << k) - 1
        diff = bits[p][None, :] - bits
        sigma = diff.max(axis=1) - diff.min(axis=1)
        neighbours = sigma == 1
        counts.append(int(np.count_nonzero(neighbours)))
        below.append(int(np.count_nonzero(neighbours & ((masks & ~p) == 0))))
    return np.array(counts), np.array(below)


def sigma_cardinality_sweep(r_max: Optional[int] = None) -> VerificationReport:
    """
    Exhaustive |Σ| count for every r <= r_max and rank k, with rank separation

    Raises:
        DomainError: If r_max is outside [1, 20]
    """
    r_max = Config.SIGMA_SWEEP_DEFAULT_RANK if r_max is None else int(r_max)
    if not 1 <= r_max <= Config.SIGMA_SWEEP_MAX_RANK:
        raise DomainError(f"r_max must lie in [1, {Config.SIGMA_SWEEP_MAX_RANK}], got {r_max}")

    count_error = 0
    split_error = 0
    tie_violations = []
    cases = 0
    for r in range(2, r_max + 1):
        counts, below = _sigma_counts(r)
        ranks = np.arange(1, r)
        expected = np.array([sigma_cardinality(r, k) for k in ranks])
        count_error = max(count_error, int(np.max(np.abs(counts - expected))))
        split_error = max(split_error, int(np.max(np.abs(below - (2 ** ranks - 1)))))
        cases += len(ranks)
        for (i, k), (j, k2) in itertools.combinations(enumerate(ranks), 2):
            tie = counts[i] == counts[j]
            if tie != (k2 == r - k):
                tie_violations.append({"r": r, "k": int(k), "k2": int(k2)})
        logger.debug(f"r={r}: sigma counts {counts.tolist()}")

    report = VerificationReport()
    report.add(CheckRecord.from_error(
        "idempotents.sigma_cardinality",
        "|Σ(p)| = 2^k + 2^(r-k) - 2 for every rank k",
        cases, count_error, 0.0,
        witness={"rMax": r_max}, details={"rMax": r_max},
    ))
    report.add(CheckRecord.from_error(
        "idempotents.sigma_split",
        "Σ(p) contains exactly 2^k - 1 idempotents below p",
        cases, split_error, 0.0, witness={"rMax": r_max},
    ))
    report.add(CheckRecord.from_error(
        "idempotents.sigma_rank_separation",
        "|Σ| agrees for ranks k and k' iff k' = k or k' = r - k",
        cases, len(tie_violations), 0.0,
        witness=tie_violations[0] if tie_violations else None,
    ))
    return report


def frame_sigma_check(algebra: Algebra, seed: int = 0, max_rank: int = 8) -> VerificationReport:
    """Spectral Σ enumeration on a random frame of the algebra against the formula"""
    r = algebra.rank
    frame = algebra.random_frame(seed)
    max_error = 0
    witness = None
    cases = 0
    if 2 <= r <= max_rank:
        frame = validate_frame(frame, tol=1e-9)
        for k in range(1, r):
            p = FrameIdempotent(frame, (1 << k) - 1)
            below, above = sigma_split(p)
            error = max(
                abs(len(below) + len(above) - sigma_cardinality(r, k)),
                abs(len(below) - (2 ** k - 1)),
            )
            cases += 1
            if error > max_error:
                max_error = error
                witness = {"rank": k, "below": len(below), "above": len(above)}
    report = VerificationReport()
    report.add(CheckRecord.from_error(
        "idempotents.sigma_frame",
        "Spectral Σ(p) on a sampled frame matches 2^k + 2^(r-k) - 2",
        cases, max_error, 0.0, witness=witness,
    ))
    return report


@dataclass(frozen=True)
class NonextremalDecomposition:
    """v = α d + (1 - α) f with [d] != [f] on the unit σ-sphere"""
    alpha: float
    d: Element
    f: Element

    def reconstruct(self) -> Element:
        return self.alpha * self.d + (1.0 - self.alpha) * self.f


def nonextremal_decomposition(v: Element, tol: Optional[float] = None) -> NonextremalDecomposition:
    """
    Split a non-idempotent v with spectrum in [0, 1] (0 and 1 attained)

    With λ the smallest eigenvalue strictly inside (0, 1) and p its
    idempotent, α = λ, f halves λ, and d moves λ to (λ + 1) / 2.

    Raises:
        DomainError: If the spectrum leaves [0, 1] or misses 0 or 1
        IsIdempotentError: If every eigenvalue is within tol of {0, 1}
    """
    tol = Config.IDEMPOTENT_TOL if tol is None else tol
    decomposition = spectral_decompose(v)
    values = decomposition.eigenvalues
    if values[0] < -tol or values[-1] > 1.0 + tol:
        raise DomainError(f"Spectrum [{values[0]:.3g}, {values[-1]:.3g}] leaves [0, 1]")
    if abs(values[0]) > tol or abs(values[-1] - 1.0) > tol:
        raise DomainError("Spectrum must attain both 0 and 1")
    interior = np.flatnonzero((values > tol) & (values < 1.0 - tol))
    if interior.size == 0:
        raise IsIdempotentError("Element is an idempotent; it has no interior eigenvalue")

    i = int(interior[0])
    lam = float(values[i])
    f_values = values.copy()
    d_values = values.copy()
    f_values[i] = lam / 2.0
    d_values[i] = (lam + 1.0) / 2.0
    return NonextremalDecomposition(
        alpha=lam,
        d=decomposition.map(d_values),
        f=decomposition.map(f_values),
    )


def idempotent_class_norm_check(
    algebra: Algebra,
    trials: int,
    seed: int = 0,
    tol: float = 1e-9,
    masks_per_frame: int = 16,
) -> VerificationReport:
    """
    Idempotent classes lie on the unit σ-sphere; classes with an interior
    eigenvalue are midpoints of distinct unit classes

    Raises:
        WrongRankError: If the rank is below 2
    """
    r = algebra.rank
    if r < 2:
        raise WrongRankError(r, ">= 2")
    rng = np.random.default_rng(seed)

    unit_error = 0.0
    unit_witness = None
    split_error = 0.0
    split_witness = None
    for i in range(trials):
        frame = tuple(algebra.random_frame(seed + i))
        full = (1 << r) - 1
        if full - 1 <= masks_per_frame:
            masks = range(1, full)
        else:
            masks = rng.integers(1, full, size=masks_per_frame)
        for mask in masks:
            p = FrameIdempotent(frame, int(mask))
            error = max(abs(sigma_seminorm(p.element) - 1.0), abs(sigma_seminorm(p.complement().element) - 1.0))
            if error > unit_error:
                unit_error = error
                unit_witness = {"frameSeed": seed + i, "mask": int(mask)}

        # rank 2 leaves no room for an eigenvalue strictly between 0 and 1
        if r < 3:
            continue
        values = np.concatenate([[0.0, 1.0], rng.uniform(0.05, 0.95, r - 2)])
        v = Element(algebra, values @ np.vstack([p.coords for p in frame]))
        result = nonextremal_decomposition(v)
        error = max(
            result.reconstruct().distance_to(v),
            sigma_seminorm(result.d) - 1.0,
            sigma_seminorm(result.f) - 1.0,
        )
        if error > split_error:
            split_error = error
            split_witness = {"v": v.to_list()}

    report = VerificationReport()
    report.add(CheckRecord.from_error(
        "idempotents.unit_sigma",
        "Every nontrivial idempotent p and its complement have ‖p‖_σ = 1",
        trials, unit_error, tol, witness=unit_witness,
    ))
    if r >= 3:
        report.add(CheckRecord.from_error(
            "idempotents.nonextremal",
            "Unit classes with an interior eigenvalue split as α[d] + (1-α)[f]",
            trials, split_error, tol, witness=split_witness,
        ))
    return report


@dataclass(frozen=True)
class ShiftDecomposition:
    idempotent: Element
    shift: float


def idempotent_shift_decomposition(u: Element, tol: Optional[float] = None) -> ShiftDecomposition:
    """
    Write u = p + λe with p idempotent

    λ is the smallest eigenvalue; a scalar multiple of e yields p = 0.

    Raises:
        NotIdempotentError: If u - λe is not idempotent
    """
    tol = Config.IDEMPOTENT_TOL if tol is None else tol
    decomposition = spectral_decompose(u)
    shift = float(decomposition.eigenvalues[0])
    p = u - shift * u.algebra.unit
    idempotent_rank(p, tol=tol)
    return ShiftDecomposition(idempotent=p, shift=shift)


def idempotent_component(p: Element, tol: Optional[float] = None) -> Tuple[int, ...]:
    """Per-factor ranks of an idempotent; they label its connected component"""
    if p.algebra.factor_count == 1:
        return (idempotent_rank(p, tol),)
    return tuple(idempotent_rank(part, tol) for part in split(p))


def component_label(p: Element) -> str:
    ranks = idempotent_component(p)
    return " x ".join(
        f"{factor.descriptor()}[{rank}]" for factor, rank in zip(p.algebra.factors, ranks)
    )

