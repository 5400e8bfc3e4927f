"""Set and fuzzy-set distances, betweenness, and hyperbolic-valued membership functions."""

from .core import (
    LEBESGUE,
    FiniteUniverse,
    KernelMatrix,
    LevelMeasure,
    WeightedMeasure,
    check_psd,
    intersection_kernel,
    kernel_metric,
    measure_of,
)
from .crisp import CrispSet
from .errors import (
    DegenerateLevelMeasureWarning,
    FuzzBetweenError,
    GuardExceededError,
    NullConeError,
    UniverseMismatchError,
    ValidationError,
)
from .fuzzy import MembershipFn
from .hfuzzy import HLevel, HMembershipFn
from .hyperbolic import HInterval, Hyperbolic, Ordering

__version__ = "0.1.0"

__all__ = [
    "LEBESGUE",
    "CrispSet",
    "DegenerateLevelMeasureWarning",
    "FiniteUniverse",
    "FuzzBetweenError",
    "GuardExceededError",
    "HInterval",
    "HLevel",
    "HMembershipFn",
    "Hyperbolic",
    "KernelMatrix",
    "LevelMeasure",
    "MembershipFn",
    "NullConeError",
    "Ordering",
    "UniverseMismatchError",
    "ValidationError",
    "WeightedMeasure",
    "check_psd",
    "intersection_kernel",
    "kernel_metric",
    "measure_of",
]
