"""Interference-regime classification and the very strong / strong regions.

Very strong interference: each receiver can decode the unwanted sender
first at no cost, so the region is a box.  Strong interference: both
receivers decode both messages, giving a pentagon with a sum-rate bound.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from itertools import product

from .channel import ChannelParams, DetectionStrategy, JOINT, detection_noise
from .entropies import g, gamma, thermal_min_entropy
from .errors import FlavorError, RegimeError, StrategyError
from .geometry import RatePolytope, convex_hull_union, polytope

CONDITION_TOL = 1e-12


class Regime(enum.Enum):
    VERY_STRONG = "VeryStrong"
    STRONG = "Strong"
    NEITHER = "Neither"


@dataclass(frozen=True)
class Margin:
    condition: str
    lhs: float
    rhs: float
    satisfied: bool

    def to_json(self) -> dict:
        return {
            "condition": self.condition,
            "lhs": _json_float(self.lhs),
            "rhs": _json_float(self.rhs),
            "satisfied": self.satisfied,
        }


def _json_float(x: float):
    return x if math.isfinite(x) else ("inf" if x > 0 else "-inf")


@dataclass(frozen=True)
class RegimeReport:
    strategy: DetectionStrategy
    regime: Regime
    margins: tuple[Margin, ...]

    def holds(self, prefix: str) -> bool:
        """True when every margin whose name starts with ``prefix`` is satisfied."""
        return all(m.satisfied for m in self.margins if m.condition.startswith(prefix))

    def to_json(self) -> dict:
        return {
            "strategy": self.strategy.value,
            "regime": self.regime.value,
            "margins": [m.to_json() for m in self.margins],
        }


def _ratio_margin(name, num, den, rhs_num, rhs_den) -> Margin:
    """Condition num/den >= rhs_num/rhs_den, checked cross-multiplied."""
    lhs = num / den if den > 0 else math.inf
    rhs = rhs_num / rhs_den
    ok = num * rhs_den >= den * rhs_num - CONDITION_TOL * max(1.0, den * rhs_num)
    return Margin(name, lhs, rhs, ok)


def _regime(margins) -> Regime:
    if all(m.satisfied for m in margins if m.condition.startswith("very-strong")):
        return Regime.VERY_STRONG
    if all(m.satisfied for m in margins if m.condition.startswith("strong")):
        return Regime.STRONG
    return Regime.NEITHER


def classify_coherent(params: ChannelParams, det: DetectionStrategy) -> RegimeReport:
    if not det.is_coherent:
        raise StrategyError(f"coherent classification needs homodyne/heterodyne, got {det.value}")
    i = det.detection_index
    floor1 = 2**i * params.noise1 + 1.0
    floor2 = 2**i * params.noise2 + 1.0
    margins = (
        _ratio_margin("very-strong-1", params.eta21, params.eta22,
                      4**i * params.eta11 * params.NS1 + floor1, floor2),
        _ratio_margin("very-strong-2", params.eta12, params.eta11,
                      4**i * params.eta22 * params.NS2 + floor2, floor1),
        _ratio_margin("strong-1", params.eta21, params.eta22, floor1, floor2),
        _ratio_margin("strong-2", params.eta12, params.eta11, floor2, floor1),
    )
    return RegimeReport(det, _regime(margins), margins)


def _le_margin(name, lhs, rhs) -> Margin:
    return Margin(name, lhs, rhs, lhs <= rhs + CONDITION_TOL * max(1.0, abs(rhs)))


def check_quantum_vsi(params: ChannelParams) -> RegimeReport:
    """Holevo-information version of the regime conditions for coherent-state inputs."""
    p, n1, n2 = params, params.noise1, params.noise2
    own1, own2 = p.eta11 * p.NS1 + n1, p.eta22 * p.NS2 + n2
    margins = (
        _le_margin("very-strong-1", g(own2) - g(n2), g(p.eta21 * p.NS2 + own1) - g(own1)),
        _le_margin("very-strong-2", g(own1) - g(n1), g(p.eta12 * p.NS1 + own2) - g(own2)),
        _le_margin("strong-1", g(own1) - g(n1), g(p.eta12 * p.NS1 + n2) - g(n2)),
        _le_margin("strong-2", g(own2) - g(n2), g(p.eta21 * p.NS2 + n1) - g(n1)),
    )
    return RegimeReport(JOINT, _regime(margins), margins)


def _out_of_regime(report: RegimeReport, wanted: tuple[Regime, ...], force: bool) -> tuple[str, ...]:
    if report.regime in wanted:
        return ()
    if not force:
        raise RegimeError(
            f"{report.strategy.value}: channel is {report.regime.value}, "
            f"formula needs {' or '.join(r.value for r in wanted)}"
        )
    return ("achievable-only",)


def _coherent_boxes(params: ChannelParams, det: DetectionStrategy) -> tuple[float, float]:
    noise = detection_noise(params, det)
    return (
        gamma(params.eta11 * params.NS1 / noise.N1, det),
        gamma(params.eta22 * params.NS2 / noise.N2, det),
    )


def _holevo_boxes(params: ChannelParams) -> tuple[float, float]:
    n1, n2 = params.noise1, params.noise2
    return (
        g(params.eta11 * params.NS1 + n1) - g(n1),
        g(params.eta22 * params.NS2 + n2) - g(n2),
    )


def vsi_region(params: ChannelParams, det: DetectionStrategy, force: bool = False) -> RatePolytope:
    if det.is_coherent:
        notes = _out_of_regime(classify_coherent(params, det), (Regime.VERY_STRONG,), force)
        c1, c2 = _coherent_boxes(params, det)
        notes = notes or ("capacity",)
    elif det is JOINT:
        notes = _out_of_regime(check_quantum_vsi(params), (Regime.VERY_STRONG,), force)
        c1, c2 = _holevo_boxes(params)
        notes = notes or ("achievable",)
    else:
        raise StrategyError(f"no very-strong-interference region for {det.value}")
    return polytope([(1, 0, c1), (0, 1, c2)], f"vsi-{det.value}", notes)


def strong_region_coherent(
    params: ChannelParams, det: DetectionStrategy, force: bool = False
) -> RatePolytope:
    if not det.is_coherent:
        raise StrategyError(f"coherent strong region needs homodyne/heterodyne, got {det.value}")
    report = classify_coherent(params, det)
    notes = _out_of_regime(report, (Regime.STRONG, Regime.VERY_STRONG), force) or ("capacity",)
    c1, c2 = _coherent_boxes(params, det)
    noise = detection_noise(params, det)
    p = params
    s = min(
        gamma((p.eta11 * p.NS1 + p.eta21 * p.NS2) / noise.N1, det),
        gamma((p.eta22 * p.NS2 + p.eta12 * p.NS1) / noise.N2, det),
    )
    return polytope([(1, 0, c1), (0, 1, c2), (1, 1, s)], f"strong-{det.value}", notes)


def strong_region_quantum_conjectured(params: ChannelParams) -> RatePolytope:
    """Holevo-rate pentagon; achievable only if a quantum simultaneous decoder exists."""
    n1, n2 = params.noise1, params.noise2
    p = params
    c1, c2 = _holevo_boxes(params)
    s = min(
        g(p.eta11 * p.NS1 + p.eta21 * p.NS2 + n1) - g(n1),
        g(p.eta22 * p.NS2 + p.eta12 * p.NS1 + n2) - g(n2),
    )
    return polytope([(1, 0, c1), (0, 1, c2), (1, 1, s)], "strong-quantum", ("conjectured",))


# -- min-entropy simultaneous decoding -------------------------------------

class Flavor(enum.Enum):
    MIN_ENTROPY = "min"
    VON_NEUMANN = "vn"


ME = Flavor.MIN_ENTROPY
VN = Flavor.VON_NEUMANN


def leading_entropy(flavor: Flavor, total: float) -> float:
    return g(total) if flavor is VN else thermal_min_entropy(total)


# bound order at each receiver: own sender's rate, other sender's rate, sum
BOUND_ROLES = ("own", "cross", "sum")


@dataclass(frozen=True)
class FlavorAssignment:
    """Entropy flavour of each (own, cross, sum) bound at the two receivers."""
    rx1: tuple[Flavor, Flavor, Flavor] = (ME, ME, ME)
    rx2: tuple[Flavor, Flavor, Flavor] = (ME, ME, ME)

    def __post_init__(self):
        for name in ("rx1", "rx2"):
            tags = getattr(self, name)
            if len(tags) != 3:
                raise FlavorError(f"{name} needs three flavour tags, got {len(tags)}")
            if sum(t is VN for t in tags) > 1:
                raise FlavorError(f"{name} has more than one von Neumann bound")

    @classmethod
    def with_von_neumann(cls, role1: str | None, role2: str | None) -> "FlavorAssignment":
        def tags(role):
            return tuple(VN if r == role else ME for r in BOUND_ROLES)
        return cls(tags(role1), tags(role2))

    @classmethod
    def individual_min_sum_vn(cls) -> "FlavorAssignment":
        return cls.with_von_neumann("sum", "sum")

    def name(self) -> str:
        def part(tags):
            return next((r for r, t in zip(BOUND_ROLES, tags) if t is VN), "none")
        return f"vn[{part(self.rx1)},{part(self.rx2)}]"


def all_flavor_assignments(family: str = "matched") -> list[FlavorAssignment]:
    """Decoder variations to hull over.

    ``matched`` puts the von Neumann bound on the same role at both receivers
    (4 variations); ``independent`` lets each receiver choose separately (16).
    """
    roles = (None,) + BOUND_ROLES
    if family == "matched":
        return [FlavorAssignment.with_von_neumann(r, r) for r in roles]
    if family == "independent":
        return [FlavorAssignment.with_von_neumann(a, b) for a, b in product(roles, roles)]
    raise ValueError(f"unknown flavour family {family!r}")


def _simultaneous_bounds(params: ChannelParams, rx1, rx2) -> list[tuple[int, int, float]]:
    p, n1, n2 = params, params.noise1, params.noise2
    # each receiver decodes both messages: own rate, cross rate, sum rate
    totals1 = (p.eta11 * p.NS1 + n1, p.eta21 * p.NS2 + n1, p.eta11 * p.NS1 + p.eta21 * p.NS2 + n1)
    totals2 = (p.eta22 * p.NS2 + n2, p.eta12 * p.NS1 + n2, p.eta22 * p.NS2 + p.eta12 * p.NS1 + n2)
    own1, cross1, sum1 = (leading_entropy(f, t) - g(n1) for f, t in zip(rx1, totals1))
    own2, cross2, sum2 = (leading_entropy(f, t) - g(n2) for f, t in zip(rx2, totals2))
    return [
        (1, 0, own1), (0, 1, cross1), (1, 1, sum1),
        (0, 1, own2), (1, 0, cross2), (1, 1, sum2),
    ]


def strong_region_minentropy(params: ChannelParams, flavor: FlavorAssignment) -> RatePolytope:
    return polytope(
        _simultaneous_bounds(params, flavor.rx1, flavor.rx2),
        f"strong-minentropy-{flavor.name()}",
        ("achievable",),
    )


def strong_region_von_neumann(params: ChannelParams) -> RatePolytope:
    """Simultaneous-decoder region with every bound in von Neumann form."""
    return polytope(
        _simultaneous_bounds(params, (VN,) * 3, (VN,) * 3),
        "strong-simultaneous-vn",
        ("conjectured",),
    )


def strong_region_minentropy_hull(params: ChannelParams, family: str = "matched") -> RatePolytope:
    regions = [strong_region_minentropy(params, f) for f in all_flavor_assignments(family)]
    hull = convex_hull_union(regions, "strong-minentropy-hull")
    return hull.with_label("strong-minentropy-hull", "achievable")
