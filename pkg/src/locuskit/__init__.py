"""Even-power distance sums to regular polygon vertices and their loci."""
from .errors import DomainError, LocusKitError, NoRootError, NumericOverflowError, ParseError
from .locus import (
    LocusKind,
    LocusResult,
    WeightedPointSet,
    classify_power_locus,
    classify_weighted_locus,
    solve_radius,
)
from .polygon import PlanarPoint, ProbePoint, RegularPolygon, squared_distance, vertex_angle
from .power_sums import (
    AlphaScanReport,
    ClosedFormTerm,
    PowerSumSpec,
    alpha_scan,
    closed_form_terms,
    power_sum_closed,
    power_sum_direct,
)
from .trig import (
    PowerReductionExpansion,
    cosine_multiple_sum,
    cosine_multiple_sum_direct,
    cosine_power_sum,
    cosine_power_sum_direct,
    cosine_power_sum_exact,
    power_reduction,
)

__version__ = "0.1.0"

__all__ = [
    "AlphaScanReport",
    "ClosedFormTerm",
    "DomainError",
    "LocusKind",
    "LocusKitError",
    "LocusResult",
    "NoRootError",
    "NumericOverflowError",
    "ParseError",
    "PlanarPoint",
    "PowerReductionExpansion",
    "PowerSumSpec",
    "ProbePoint",
    "RegularPolygon",
    "WeightedPointSet",
    "alpha_scan",
    "classify_power_locus",
    "classify_weighted_locus",
    "closed_form_terms",
    "cosine_multiple_sum",
    "cosine_multiple_sum_direct",
    "cosine_power_sum",
    "cosine_power_sum_direct",
    "cosine_power_sum_exact",
    "power_reduction",
    "power_sum_closed",
    "power_sum_direct",
    "solve_radius",
    "squared_distance",
    "vertex_angle",
]
