"""
Simple Euclidean Jordan algebra factors
"""
from factors.base import Factor, FactorKind, FactorSpectrum
from factors.factory import FactorFactory

__all__ = ["Factor", "FactorKind", "FactorSpectrum", "FactorFactory"]
