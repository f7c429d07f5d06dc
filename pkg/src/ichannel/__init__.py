"""Capacity and achievable rate regions of the two-user free-space optical
interference channel with coherent-state senders."""
from .channel import (
    HETERODYNE, HOMODYNE, JOINT, MIN_ENTROPY, ChannelParams, DetectionStrategy,
    FresnelGeometry, detection_noise, fresnel_summary, heterodyne_statistics,
    homodyne_statistics, validate,
)
from .entropies import g, gamma, thermal_min_entropy
from .geometry import (
    RateConstraint, RatePoint, RatePolytope, area, contains, convex_hull_union,
    grid_oracle, region_difference_witness, vertices,
)
from .han_kobayashi import (
    HKFlavorAssignment, PowerSplit, hk_region_coherent, hk_region_minentropy,
    hk_region_minentropy_hull, hk_region_quantum_conjectured, sweep_splits,
)
from .presets import PRESETS
from .regimes import (
    FlavorAssignment, Regime, RegimeReport, check_quantum_vsi, classify_coherent,
    strong_region_coherent, strong_region_minentropy, strong_region_minentropy_hull,
    strong_region_quantum_conjectured, vsi_region,
)

__version__ = "0.1.0"
