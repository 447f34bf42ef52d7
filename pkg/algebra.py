"""
Euclidean Jordan algebras as ordered direct sums of simple factors

Elements are immutable coordinate vectors tagged with their algebra. The
multiplication operator L(x) and the quadratic representation
P(x) = 2L(x)^2 - L(x^2) are returned as dense symmetric matrices.
"""
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, List, Optional, Sequence, Union

import numpy as np

from config import Config
from exceptions import AlgebraMismatchError
from factors import Factor, FactorFactory
from logging_config import get_logger
from validation import AlgebraDescriptor, parse_descriptor

logger = get_logger(__name__)


class Algebra:
    """
    Direct sum J = J_1 x ... x J_s with cached structure data

    Attributes:
        descriptor: Validated AlgebraDescriptor
        signature: Canonical descriptor string
        factors: Simple factors in descriptor order
        slices: Coordinate slice of each factor
        dim: Ambient real dimension
        rank: Sum of factor ranks
    """

    def __init__(self, descriptor: AlgebraDescriptor):
        self.descriptor = descriptor
        self.signature = descriptor.signature
        self.factors: tuple = tuple(
            FactorFactory.create_factor(spec.kind, spec.size) for spec in descriptor.factors
        )
        offsets = np.cumsum([0] + [f.dim for f in self.factors])
        self.slices = tuple(slice(int(offsets[i]), int(offsets[i + 1])) for i in range(len(self.factors)))
        self.dim = int(offsets[-1])
        self.rank = sum(f.rank for f in self.factors)

    @property
    def factor_count(self) -> int:
        return len(self.factors)

    @cached_property
    def unit(self) -> "Element":
        return Element(self, np.concatenate([f.unit() for f in self.factors]))

    @cached_property
    def factor_units(self) -> tuple:
        """Per-factor units e_i embedded in J; they sum to e"""
        return tuple(self.embed(i, f.unit()) for i, f in enumerate(self.factors))

    @cached_property
    def factor_algebras(self) -> tuple:
        if self.factor_count == 1:
            return (self,)
        return tuple(make_algebra(f.descriptor()) for f in self.factors)

    def element(self, coords: Sequence[float]) -> "Element":
        return Element(self, coords)

    def zero(self) -> "Element":
        return Element(self, np.zeros(self.dim))

    def embed(self, index: int, coords: np.ndarray) -> "Element":
        """Place factor coordinates into the full ambient vector"""
        full = np.zeros(self.dim)
        full[self.slices[index]] = coords
        return Element(self, full)

    def basis(self) -> List["Element"]:
        eye = np.eye(self.dim)
        return [Element(self, eye[k]) for k in range(self.dim)]

    def _frame(self, rows_per_factor: List[np.ndarray]) -> List["Element"]:
        frame = []
        for index, rows in enumerate(rows_per_factor):
            frame.extend(self.embed(index, row) for row in rows)
        return frame

    def canonical_frame(self) -> List["Element"]:
        """Standard Jordan frame: coordinate idempotents, diagonal units, or (1/2)(1, ±e_1)"""
        return self._frame([f.canonical_frame() for f in self.factors])

    def random_frame(self, seed: int) -> List["Element"]:
        rng = np.random.default_rng(seed)
        return self._frame([f.random_frame(rng) for f in self.factors])

    def isomorphism_classes(self) -> List[List[int]]:
        """Factor indices grouped by identical descriptor, in first-appearance order"""
        classes: Dict[Factor, List[int]] = {}
        for index, factor in enumerate(self.factors):
            classes.setdefault(factor, []).append(index)
        return list(classes.values())

    def trace_zero_projection(self, u: "Element") -> "Element":
        """u - (Tr(u)/r) e"""
        return u - (jordan_trace(u) / self.rank) * self.unit

    def __eq__(self, other) -> bool:
        return isinstance(other, Algebra) and self.signature == other.signature

    def __hash__(self) -> int:
        return hash(self.signature)

    def __repr__(self) -> str:
        return f"Algebra({self.signature!r}, dim={self.dim}, rank={self.rank})"


@dataclass(frozen=True, eq=False)
class Element:
    """Coordinate vector over the algebra's orthonormal ambient basis"""
    algebra: Algebra
    coords: np.ndarray

    # numpy scalars defer to Element.__rmul__
    __array_ufunc__ = None

    def __post_init__(self):
        arr = np.array(self.coords, dtype=float).reshape(-1)
        if arr.shape[0] != self.algebra.dim:
            raise AlgebraMismatchError(
                f"Expected {self.algebra.dim} coordinates for {self.algebra.signature}, got {arr.shape[0]}"
            )
        arr.setflags(write=False)
        object.__setattr__(self, "coords", arr)

    def _other(self, other: "Element") -> np.ndarray:
        _check_same(self, other)
        return other.coords

    def __add__(self, other: "Element") -> "Element":
        return Element(self.algebra, self.coords + self._other(other))

    def __sub__(self, other: "Element") -> "Element":
        return Element(self.algebra, self.coords - self._other(other))

    def __neg__(self) -> "Element":
        return Element(self.algebra, -self.coords)

    def __mul__(self, scalar: float) -> "Element":
        if isinstance(scalar, Element):
            raise TypeError("Use jordan_product for the product of two elements")
        return Element(self.algebra, self.coords * float(scalar))

    __rmul__ = __mul__

    def __truediv__(self, scalar: float) -> "Element":
        return Element(self.algebra, self.coords / float(scalar))

    def distance_to(self, other: "Element") -> float:
        """Max-abs coordinate difference"""
        return float(np.max(np.abs(self.coords - self._other(other)), initial=0.0))

    def to_list(self) -> List[float]:
        return [float(c) for c in self.coords]

    def __repr__(self) -> str:
        return f"Element({self.algebra.signature!r}, {np.array2string(self.coords, precision=6)})"


@dataclass(frozen=True, eq=False)
class LinearMap:
    """Dense real matrix acting on ambient coordinates"""
    matrix: np.ndarray
    domain: Algebra
    codomain: Optional[Algebra] = None

    def __post_init__(self):
        if self.codomain is None:
            object.__setattr__(self, "codomain", self.domain)
        m = np.asarray(self.matrix, dtype=float)
        if m.shape != (self.codomain.dim, self.domain.dim):
            raise AlgebraMismatchError(
                f"Matrix shape {m.shape} does not match {self.codomain.dim}x{self.domain.dim}"
            )
        m = m.copy()
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    def apply(self, x: Element) -> Element:
        if x.algebra != self.domain:
            raise AlgebraMismatchError(f"{x.algebra.signature} is not {self.domain.signature}")
        return Element(self.codomain, self.matrix @ x.coords)

    __call__ = apply

    def __matmul__(self, other: "LinearMap") -> "LinearMap":
        if other.codomain != self.domain:
            raise AlgebraMismatchError("Cannot compose maps with mismatched algebras")
        return LinearMap(self.matrix @ other.matrix, other.domain, self.codomain)

    def symmetry_residual(self) -> float:
        return float(np.max(np.abs(self.matrix - self.matrix.T), initial=0.0))


_ALGEBRAS: Dict[str, Algebra] = {}


def make_algebra(descriptor: Union[AlgebraDescriptor, str]) -> Algebra:
    """
    Construct (or fetch the cached) algebra for a descriptor

    Args:
        descriptor: AlgebraDescriptor or descriptor string such as "sym:3 x spin:4"

    Returns:
        Algebra with cached unit, factor units, dimension and rank

    Raises:
        InvalidDescriptorError: On grammar or size violations
    """
    if isinstance(descriptor, str):
        descriptor = parse_descriptor(descriptor)
    signature = descriptor.signature
    if signature not in _ALGEBRAS:
        algebra = Algebra(descriptor)
        logger.debug(f"Created algebra {signature}: dim={algebra.dim} rank={algebra.rank}")
        _ALGEBRAS[signature] = algebra
    return _ALGEBRAS[signature]


def _check_same(*elements: Element) -> Algebra:
    algebra = elements[0].algebra
    for other in elements[1:]:
        if other.algebra != algebra:
            raise AlgebraMismatchError(
                f"Elements belong to different algebras: {algebra.signature} vs {other.algebra.signature}"
            )
    return algebra


def jordan_product(x: Element, y: Element) -> Element:
    """Jordan product x∘y, computed factor by factor"""
    algebra = _check_same(x, y)
    coords = np.concatenate([
        f.product(x.coords[s], y.coords[s]) for f, s in zip(algebra.factors, algebra.slices)
    ])
    return Element(algebra, coords)


def jordan_square(x: Element) -> Element:
    return jordan_product(x, x)


def _block_diag(blocks: List[np.ndarray], dim: int) -> np.ndarray:
    out = np.zeros((dim, dim))
    offset = 0
    for block in blocks:
        n = block.shape[0]
        out[offset:offset + n, offset:offset + n] = block
        offset += n
    return out


def lmul(x: Element) -> LinearMap:
    """L(x): y -> x∘y as a symmetric matrix"""
    algebra = x.algebra
    blocks = [f.lmul_matrix(x.coords[s]) for f, s in zip(algebra.factors, algebra.slices)]
    return LinearMap(_block_diag(blocks, algebra.dim), algebra)


def quad_rep(x: Element) -> LinearMap:
    """P(x) = 2 L(x)^2 - L(x^2)"""
    lx = lmul(x).matrix
    lx2 = lmul(jordan_square(x)).matrix
    return LinearMap(2.0 * lx @ lx - lx2, x.algebra)


def trace_form(x: Element, y: Element) -> float:
    """(x, y) = Trace(x∘y)"""
    algebra = _check_same(x, y)
    return float(sum(f.inner(x.coords[s], y.coords[s]) for f, s in zip(algebra.factors, algebra.slices)))


def trace_norm(x: Element) -> float:
    return float(np.sqrt(max(trace_form(x, x), 0.0)))


def trace_angle(x: Element, y: Element) -> float:
    """Angle between x and y for the trace form, in radians"""
    denominator = trace_norm(x) * trace_norm(y)
    if denominator == 0.0:
        return 0.0
    return float(np.arccos(np.clip(trace_form(x, y) / denominator, -1.0, 1.0)))


def jordan_trace(x: Element) -> float:
    """Sum of eigenvalues"""
    return float(sum(f.trace(x.coords[s]) for f, s in zip(x.algebra.factors, x.algebra.slices)))


def jordan_det(x: Element) -> float:
    """Product of eigenvalues"""
    from spectral import eigenvalues

    return float(np.prod(eigenvalues(x)))


def split(x: Element) -> List[Element]:
    """Per-factor parts of x, each in its single-factor algebra"""
    algebra = x.algebra
    return [Element(sub, x.coords[s]) for sub, s in zip(algebra.factor_algebras, algebra.slices)]


def join(parts: Sequence[Element], algebra: Optional[Algebra] = None) -> Element:
    """
    Inverse of split

    Raises:
        AlgebraMismatchError: If the parts do not match the algebra's factor order
    """
    if algebra is None:
        algebra = make_algebra(" x ".join(p.algebra.signature for p in parts))
    expected = [f.descriptor() for f in algebra.factors]
    found = [p.algebra.signature for p in parts]
    if found != expected:
        raise AlgebraMismatchError(f"Parts {found} do not match factors {expected}")
    return Element(algebra, np.concatenate([p.coords for p in parts]))


def random_element(algebra: Algebra, seed: int) -> Element:
    """Standard Gaussian coordinates, deterministic per seed"""
    rng = np.random.default_rng(seed)
    return Element(algebra, rng.standard_normal(algebra.dim))


def random_cone_point(algebra: Algebra, seed: int, conditioning: Optional[float] = None) -> Element:
    """
    Random interior point with eigenvalues in [1/conditioning, conditioning]

    Eigenvalues are log-uniform; each factor gets a random Jordan frame.
    """
    conditioning = Config.DEFAULT_CONDITIONING if conditioning is None else float(conditioning)
    rng = np.random.default_rng(seed)
    bound = np.log(conditioning)
    coords = []
    for factor in algebra.factors:
        frame = factor.random_frame(rng)
        values = np.exp(rng.uniform(-bound, bound, factor.rank))
        coords.append(values @ frame)
    return Element(algebra, np.concatenate(coords))


def is_central(x: Element, tol: float = 1e-9) -> bool:
    """True iff L(x) commutes with L(b) for every basis element b"""
    lx = lmul(x).matrix
    scale = max(1.0, float(np.linalg.norm(lx, 2)))
    for b in x.algebra.basis():
        lb = lmul(b).matrix
        if np.linalg.norm(lx @ lb - lb @ lx, 2) > tol * scale:
            return False
    return True
