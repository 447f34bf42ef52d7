"""
ConeCheck - numerical verification of symmetric cone geometry

Euclidean Jordan algebras, the Thompson, Hilbert and Riemannian metrics on
their cones, isometry generators and idempotent combinatorics, with a
batch command-line verifier.
"""
from conecheck import main_sync, ConeCheck

__version__ = "1.0.0"
__all__ = ["main_sync", "ConeCheck"]
