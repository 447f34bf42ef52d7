"""
Input validation and data models using Pydantic

Parses algebra descriptors, run configurations and point coordinates at the
CLI boundary and turns pydantic errors into domain exceptions.
"""
import math
import re
from typing import List, Optional

from pydantic import BaseModel, Field, ValidationError, field_validator, model_validator

from config import Config
from exceptions import ConfigurationError, InvalidDescriptorError
from factors.base import FactorKind

_FACTOR_PATTERN = re.compile(r"^(rn|spin|sym|herm):(\d+)$")
MAX_MATRIX_SIZE = 12


class FactorSpec(BaseModel):
    """One simple factor of a direct sum"""
    kind: FactorKind
    size: int = Field(..., ge=1, le=64, description="n for RN(n), SPIN(n), SYM(n), HERM(n)")

    @model_validator(mode="after")
    def validate_kind_size(self) -> "FactorSpec":
        """Spin factors need ambient dimension >= 3 to be irreducible Lorentz cones"""
        if self.kind == FactorKind.SPIN and self.size < 3:
            raise ValueError(f"spin factor size must be >= 3, got {self.size}")
        if self.kind in (FactorKind.SYM, FactorKind.HERM) and self.size > MAX_MATRIX_SIZE:
            raise ValueError(f"{self.kind.value} factor size must be <= {MAX_MATRIX_SIZE}, got {self.size}")
        return self

    @property
    def token(self) -> str:
        return f"{self.kind.value}:{self.size}"


class AlgebraDescriptor(BaseModel):
    """Ordered direct sum of simple factors"""
    factors: List[FactorSpec] = Field(..., min_length=1)

    @property
    def signature(self) -> str:
        """Canonical descriptor string, e.g. 'sym:3 x spin:4'"""
        return " x ".join(f.token for f in self.factors)


class PointInput(BaseModel):
    """Coordinate vector typed on the command line"""
    coords: List[float] = Field(..., min_length=1)

    @field_validator("coords")
    @classmethod
    def validate_finite(cls, v: List[float]) -> List[float]:
        if not all(math.isfinite(c) for c in v):
            raise ValueError("coordinates must be finite")
        return v


class RunConfig(BaseModel):
    """Verification run configuration"""
    algebra: str
    seed: int = Field(default=Config.DEFAULT_SEED, ge=0)
    trials: int = Field(default=Config.DEFAULT_TRIALS, ge=1)
    tol: float = Field(default=Config.DEFAULT_TOL, gt=0)
    suites: List[str] = Field(default_factory=Config.suite_names)
    explicit_suites: bool = False
    r_max: int = Field(default=Config.SIGMA_SWEEP_DEFAULT_RANK, ge=1, le=Config.SIGMA_SWEEP_MAX_RANK)

    @field_validator("algebra")
    @classmethod
    def validate_algebra(cls, v: str) -> str:
        return parse_descriptor(v).signature

    @field_validator("suites")
    @classmethod
    def validate_suites(cls, v: List[str]) -> List[str]:
        catalogue = Config.suite_names()
        unknown = [s for s in v if s not in catalogue]
        if unknown:
            raise ValueError(f"unknown suites {unknown}; choose from {catalogue}")
        if not v:
            raise ValueError("at least one suite is required")
        # canonical order, duplicates dropped
        return [s for s in catalogue if s in v]

    @property
    def descriptor(self) -> AlgebraDescriptor:
        return parse_descriptor(self.algebra)

    def as_report_dict(self) -> dict:
        return {
            "algebra": self.algebra,
            "seed": self.seed,
            "trials": self.trials,
            "tol": self.tol,
            "suites": list(self.suites),
            "rMax": self.r_max,
        }


def parse_descriptor(text: str) -> AlgebraDescriptor:
    """
    Parse an algebra descriptor string

    Args:
        text: Factors separated by "x", each "kind:n"; case and whitespace insensitive

    Returns:
        AlgebraDescriptor

    Raises:
        InvalidDescriptorError: If the grammar or a size rule is violated

    Example:
        >>> parse_descriptor("SYM:3 x spin:4").signature
        'sym:3 x spin:4'
    """
    if not isinstance(text, str) or not text.strip():
        raise InvalidDescriptorError(str(text), "descriptor cannot be empty")

    compact = re.sub(r"\s+", "", text.lower())
    factors = []
    for token in compact.split("x"):
        match = _FACTOR_PATTERN.match(token)
        if not match:
            raise InvalidDescriptorError(text, f"cannot parse factor {token!r}")
        factors.append({"kind": match.group(1), "size": int(match.group(2))})

    try:
        return AlgebraDescriptor(factors=factors)
    except ValidationError as e:
        reason = "; ".join(err["msg"] for err in e.errors())
        raise InvalidDescriptorError(text, reason) from e


def parse_point(text: str, dim: Optional[int] = None) -> List[float]:
    """
    Parse comma separated ambient coordinates

    Raises:
        ConfigurationError: On malformed numbers or wrong length
    """
    parts = [p.strip() for p in str(text).strip().strip("()[]").split(",")]
    try:
        coords = [float(p) for p in parts if p]
        point = PointInput(coords=coords)
    except (ValueError, ValidationError) as e:
        raise ConfigurationError(f"Invalid point {text!r}: {e}") from e

    if dim is not None and len(point.coords) != dim:
        raise ConfigurationError(
            f"Point {text!r} has {len(point.coords)} coordinates, algebra dimension is {dim}"
        )
    return point.coords


def parse_suites(text: Optional[str]) -> Optional[List[str]]:
    """Split a comma separated suite list; None means all applicable suites"""
    if text is None:
        return None
    return [s.strip().lower() for s in text.split(",") if s.strip()]


def validate_run_config(**kwargs) -> RunConfig:
    """
    Build a RunConfig, translating validation failures

    Raises:
        InvalidDescriptorError: If the algebra descriptor is invalid (raised
            unchanged from the algebra field validator)
        ConfigurationError: For any other invalid field
    """
    try:
        return RunConfig(**kwargs)
    except ValidationError as e:
        reason = "; ".join(f"{'.'.join(str(p) for p in err['loc'])}: {err['msg']}" for err in e.errors())
        raise ConfigurationError(f"Invalid run configuration: {reason}") from e
