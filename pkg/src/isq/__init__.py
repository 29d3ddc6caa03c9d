"""Finite inverse semigroups, normal inverse subsemigroups and quotient ordered groupoids."""

from .core import FiniteInvSemigroup, Homomorphism, PartialBijection
from .errors import IsqError
from .normal import SubsemigroupHandle, enumerate_normal
from .ogroupoid import OrderedGroupoid
from .quotient import NQuotient, build_quotient

__all__ = [
    "FiniteInvSemigroup",
    "Homomorphism",
    "IsqError",
    "NQuotient",
    "OrderedGroupoid",
    "PartialBijection",
    "SubsemigroupHandle",
    "build_quotient",
    "enumerate_normal",
]
