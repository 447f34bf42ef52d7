"""
Factor Factory

Creates simple factors from (kind, size) pairs and caches instances, since
factors hold only immutable index tables.
"""
from typing import Dict, Tuple, Type

from factors.base import Factor, FactorKind
from factors.matrix import HermitianFactor, SymmetricFactor
from factors.real import RealFactor
from factors.spin import SpinFactor


class FactorFactory:
    """Factory for creating and caching simple factors"""

    _registry: Dict[FactorKind, Type[Factor]] = {
        FactorKind.RN: RealFactor,
        FactorKind.SPIN: SpinFactor,
        FactorKind.SYM: SymmetricFactor,
        FactorKind.HERM: HermitianFactor,
    }

    _instances: Dict[Tuple[FactorKind, int], Factor] = {}

    @classmethod
    def create_factor(cls, kind: FactorKind, size: int) -> Factor:
        """
        Create a simple factor

        Args:
            kind: Factor kind
            size: n for RN(n), SPIN(n), SYM(n), HERM(n)

        Returns:
            Factor instance

        Example:
            >>> factor = FactorFactory.create_factor(FactorKind.SPIN, 3)
            >>> factor.rank
            2
        """
        cache_key = (kind, size)
        if cache_key in cls._instances:
            return cls._instances[cache_key]

        if kind not in cls._registry:
            raise ValueError(f"Unknown factor kind: {kind}")

        factor = cls._registry[kind](size)
        cls._instances[cache_key] = factor
        return factor

    @classmethod
    def clear_cache(cls):
        """Clear cached factor instances"""
        cls._instances.clear()
