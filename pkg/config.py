"""
Configuration management for ConeCheck
"""
import os
from typing import Any, Dict, List
from dotenv import load_dotenv

# Load environment variables
load_dotenv()


def _env_float(name: str, default: float) -> float:
    return float(os.getenv(name, default))


def _env_int(name: str, default: int) -> int:
    return int(os.getenv(name, default))


class Config:
    """Application configuration"""

    LOG_LEVEL = os.getenv("CONECHECK_LOG_LEVEL", "WARNING")

    # Verification run defaults
    DEFAULT_TRIALS = _env_int("CONECHECK_TRIALS", 500)
    DEFAULT_TOL = _env_float("CONECHECK_TOL", 1e-8)
    DEFAULT_SEED = _env_int("CONECHECK_SEED", 0)
    MAX_WORKERS = _env_int("CONECHECK_MAX_WORKERS", 4)

    # Numerical tolerances
    MEMBERSHIP_TOL = 1e-10
    IDEMPOTENT_TOL = 1e-8
    CLUSTER_TOL = 1e-9
    DISTANCE_ZERO_TOL = 1e-12
    DEFAULT_CONDITIONING = 10.0

    # Eigensolver
    JACOBI_THRESHOLD = _env_float("CONECHECK_JACOBI_THRESHOLD", 1e-13)
    JACOBI_MAX_SWEEPS = _env_int("CONECHECK_JACOBI_MAX_SWEEPS", 64)

    # Oracles and sampling
    BISECTION_ITERATIONS = 60
    PUSHFORWARD_SCALE = 1e-4
    BLOWUP_ANGLE = 0.1
    BLOWUP_N_MAX = 1e6
    SIGMA_SWEEP_MAX_RANK = 20
    SIGMA_SWEEP_DEFAULT_RANK = 10

    SUITES = ["metrics", "means", "isometries", "limits", "idempotents", "blowup", "products"]

    @classmethod
    def suite_names(cls) -> List[str]:
        """Get the verification suite catalogue in canonical order"""
        return list(cls.SUITES)

    @classmethod
    def as_dict(cls) -> Dict[str, Any]:
        """Numerical settings that influence report contents"""
        return {
            "membershipTol": cls.MEMBERSHIP_TOL,
            "idempotentTol": cls.IDEMPOTENT_TOL,
            "clusterTol": cls.CLUSTER_TOL,
            "jacobiThreshold": cls.JACOBI_THRESHOLD,
            "jacobiMaxSweeps": cls.JACOBI_MAX_SWEEPS,
            "pushforwardScale": cls.PUSHFORWARD_SCALE,
        }
