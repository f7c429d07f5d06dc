"""Han-Kobayashi rate splitting for coherent-state senders.

Sender m splits its photon budget into a personal message (fraction
lambda_m, decoded only by its partner) and a common message (the rest,
decoded by both receivers).  Receiver m therefore faces a three-sender
multiple-access channel over {personal-own, common-own, common-other} and
treats the other sender's personal message as noise.

Power accounting: all messages are independent Gaussian codebooks, so
conditioning on a message removes exactly its received power from the
interference total.  Every mutual information term I(S; B_m | C) in the
region is then a function of three photon numbers at receiver m:

    signal   = received power of the messages in S
    residual = received power of the other sender's personal message
    noise    = thermal background photons reaching receiver m

(S and C always exhaust the three decoded messages.)
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from typing import Callable

import numpy as np

from .channel import ChannelParams, DetectionStrategy, detection_noise
from .entropies import g, gamma
from .errors import FlavorError, StrategyError
from .geometry import RatePolytope, convex_hull_union, from_vertices, polytope
from .regimes import ME, VN, Flavor, leading_entropy

PERSONAL, COMMON, OTHER = "personal", "common", "other"

# the seven nonempty subsets of decoded messages at one receiver
MAC_SUBSETS: tuple[frozenset, ...] = (
    frozenset({PERSONAL}),
    frozenset({COMMON}),
    frozenset({OTHER}),
    frozenset({PERSONAL, COMMON}),
    frozenset({PERSONAL, OTHER}),
    frozenset({COMMON, OTHER}),
    frozenset({PERSONAL, COMMON, OTHER}),
)
P, C, O = (frozenset({PERSONAL}), frozenset({COMMON}), frozenset({OTHER}))
PC, PO, PCO = MAC_SUBSETS[3], MAC_SUBSETS[4], MAC_SUBSETS[6]


@dataclass(frozen=True)
class PowerSplit:
    lambda1: float
    lambda2: float

    def __post_init__(self):
        for name in ("lambda1", "lambda2"):
            value = getattr(self, name)
            if not (0.0 <= value <= 1.0):
                raise ValueError(f"{name}={value!r} is not in [0, 1]")

    @property
    def lambda_bar1(self) -> float:
        return 1.0 - self.lambda1

    @property
    def lambda_bar2(self) -> float:
        return 1.0 - self.lambda2


@dataclass(frozen=True)
class ReceiverPowers:
    signal: dict  # role -> received photons
    residual: float
    noise: float


def receiver_powers(params: ChannelParams, split: PowerSplit, m: int) -> ReceiverPowers:
    p, s = params, split
    if m == 1:
        return ReceiverPowers(
            {PERSONAL: p.eta11 * s.lambda1 * p.NS1,
             COMMON: p.eta11 * s.lambda_bar1 * p.NS1,
             OTHER: p.eta21 * s.lambda_bar2 * p.NS2},
            residual=p.eta21 * s.lambda2 * p.NS2,
            noise=p.noise1,
        )
    if m == 2:
        return ReceiverPowers(
            {PERSONAL: p.eta22 * s.lambda2 * p.NS2,
             COMMON: p.eta22 * s.lambda_bar2 * p.NS2,
             OTHER: p.eta12 * s.lambda_bar1 * p.NS1},
            residual=p.eta12 * s.lambda1 * p.NS1,
            noise=p.noise2,
        )
    raise ValueError(f"receiver index must be 1 or 2, got {m}")


# A term maps (receiver index, signal photons, residual photons, noise photons,
# subset) to an information rate in nats.
Term = Callable[[int, float, float, float, frozenset], float]


def coherent_term(params: ChannelParams, det: DetectionStrategy) -> Term:
    floors = detection_noise(params, det)

    def term(m, signal, residual, noise, subset):
        floor = floors.N1 if m == 1 else floors.N2
        return gamma(signal / (residual + floor), det)
    return term


def holevo_term(m, signal, residual, noise, subset) -> float:
    return g(signal + residual + noise) - g(residual + noise)


def flavored_term(rx1: tuple[Flavor, ...], rx2: tuple[Flavor, ...]) -> Term:
    flavors = {1: dict(zip(MAC_SUBSETS, rx1)), 2: dict(zip(MAC_SUBSETS, rx2))}

    def term(m, signal, residual, noise, subset):
        lead = leading_entropy(flavors[m][subset], signal + residual + noise)
        return lead - g(residual + noise)
    return term


def mac_bounds(params: ChannelParams, split: PowerSplit, m: int, term: Term) -> dict:
    """The seven multiple-access bounds at receiver m, keyed by message subset."""
    rp = receiver_powers(params, split, m)
    return {
        subset: term(m, sum(rp.signal[r] for r in subset), rp.residual, rp.noise, subset)
        for subset in MAC_SUBSETS
    }


def compact_region(b1: dict, b2: dict, label: str = "", annotations=()) -> RatePolytope:
    """The Fourier-Motzkin reduced Han-Kobayashi inequalities.

    ``b1`` and ``b2`` hold the per-receiver bounds; at receiver 1 the
    ``other`` role is sender 2's common message, at receiver 2 it is sender 1's.
    """
    bounds = [
        (1, 0, b1[PC]),
        (1, 0, b1[P] + b2[O]),
        (1, 1, b1[P] + b2[PCO]),
        (1, 1, b1[PO] + b2[PO]),
        (2, 1, b1[P] + b1[PCO] + b2[PO]),
        # the same with indices 1 and 2 exchanged; the symmetric sum appears once
        (0, 1, b2[PC]),
        (0, 1, b2[P] + b1[O]),
        (1, 1, b2[P] + b1[PCO]),
        (1, 2, b2[P] + b2[PCO] + b1[PO]),
    ]
    return polytope(bounds, label, annotations)


def hk_region_coherent(
    params: ChannelParams, split: PowerSplit, det: DetectionStrategy
) -> RatePolytope:
    if not det.is_coherent:
        raise StrategyError(f"coherent HK region needs homodyne/heterodyne, got {det.value}")
    term = coherent_term(params, det)
    return compact_region(
        mac_bounds(params, split, 1, term),
        mac_bounds(params, split, 2, term),
        f"hk-{det.value}",
        ("achievable",),
    )


def hk_region_quantum_conjectured(params: ChannelParams, split: PowerSplit) -> RatePolytope:
    return compact_region(
        mac_bounds(params, split, 1, holevo_term),
        mac_bounds(params, split, 2, holevo_term),
        "hk-quantum",
        ("conjectured",),
    )


# -- projection of the 14-inequality system ----------------------------------
# Variables x = (S1, T1, S2, T2): personal and common rates of each sender.
# Receiver 1 decodes (S1, T1, T2); receiver 2 decodes (S2, T2, T1).

_ROLE_INDEX = {1: {PERSONAL: 0, COMMON: 1, OTHER: 3}, 2: {PERSONAL: 2, COMMON: 3, OTHER: 1}}


def _mac_matrix() -> np.ndarray:
    rows = []
    for m in (1, 2):
        for subset in MAC_SUBSETS:
            row = np.zeros(4)
            for role in subset:
                row[_ROLE_INDEX[m][role]] = 1.0
            rows.append(row)
    rows.extend(-np.eye(4))  # nonnegativity
    return np.array(rows)


@lru_cache(maxsize=1)
def _vertex_systems():
    A = _mac_matrix()
    combos = np.array(list(combinations(range(len(A)), 4)))
    mats = A[combos]
    keep = np.abs(np.linalg.det(mats)) > 1e-9
    return A, combos[keep], np.linalg.inv(mats[keep])


def project_mac_system(b1: dict, b2: dict, label: str = "", annotations=()) -> RatePolytope:
    """Exact (R1, R2) shadow of the 4-D personal/common rate polytope.

    Enumerates vertices of {x >= 0 : A x <= b} by solving every 4x4 subsystem
    of tight constraints, then hulls their images R1 = S1+T1, R2 = S2+T2.
    """
    clamped = False
    b = []
    for bounds in (b1, b2):
        for subset in MAC_SUBSETS:
            value = bounds[subset]
            if value < 0:
                value, clamped = 0.0, True
            b.append(value)
    b = np.array(b + [0.0] * 4)
    A, combos, invs = _vertex_systems()
    xs = np.einsum("kij,kj->ki", invs, b[combos])
    scale = 1.0 + np.abs(b).max()
    feasible = np.all(xs @ A.T <= b + 1e-12 * scale, axis=1)
    xs = xs[feasible]
    pts = np.column_stack([xs[:, 0] + xs[:, 1], xs[:, 2] + xs[:, 3]])
    region = from_vertices(pts.tolist(), label, annotations)
    if clamped:
        region = RatePolytope(region.constraints, region.label, region.annotations, True)
    return region


@dataclass(frozen=True)
class HKFlavorAssignment:
    """Flavour of each of the seven MAC bounds at receivers 1 and 2."""
    rx1: tuple[Flavor, ...]
    rx2: tuple[Flavor, ...]

    def __post_init__(self):
        for name in ("rx1", "rx2"):
            tags = getattr(self, name)
            if len(tags) != len(MAC_SUBSETS):
                raise FlavorError(f"{name} needs {len(MAC_SUBSETS)} tags, got {len(tags)}")
            if sum(t is VN for t in tags) != 1:
                raise FlavorError(f"{name} must carry exactly one von Neumann bound")

    @classmethod
    def single(cls, k1: int, k2: int) -> "HKFlavorAssignment":
        def tags(k):
            return tuple(VN if j == k else ME for j in range(len(MAC_SUBSETS)))
        return cls(tags(k1), tags(k2))

    def indices(self) -> tuple[int, int]:
        return self.rx1.index(VN), self.rx2.index(VN)


def all_hk_assignments() -> list[HKFlavorAssignment]:
    n = len(MAC_SUBSETS)
    return [HKFlavorAssignment.single(i, j) for i, j in product(range(n), range(n))]


def hk_region_minentropy(
    params: ChannelParams, split: PowerSplit, flavor: HKFlavorAssignment
) -> RatePolytope:
    if not isinstance(flavor, HKFlavorAssignment):
        raise FlavorError(f"expected an HKFlavorAssignment, got {type(flavor).__name__}")
    term = flavored_term(flavor.rx1, flavor.rx2)
    i, j = flavor.indices()
    return project_mac_system(
        mac_bounds(params, split, 1, term),
        mac_bounds(params, split, 2, term),
        f"hk-minentropy-{i}{j}",
        ("achievable",),
    )


def hk_region_minentropy_hull(params: ChannelParams, split: PowerSplit) -> RatePolytope:
    regions = [hk_region_minentropy(params, split, f) for f in all_hk_assignments()]
    return convex_hull_union(regions).with_label("hk-minentropy-hull", "achievable")


HK_BUILDERS: dict[str, Callable[[ChannelParams, PowerSplit], RatePolytope]] = {
    "hk-homodyne": lambda p, s: hk_region_coherent(p, s, DetectionStrategy.HOMODYNE),
    "hk-heterodyne": lambda p, s: hk_region_coherent(p, s, DetectionStrategy.HETERODYNE),
    "hk-quantum": hk_region_quantum_conjectured,
    "hk-minentropy-hull": hk_region_minentropy_hull,
}


def split_grid(grid: int) -> list[PowerSplit]:
    if grid < 2:
        raise ValueError("grid must be at least 2")
    levels = [k / (grid - 1) for k in range(grid)]
    return [PowerSplit(l1, l2) for l1 in levels for l2 in levels]


def sweep_splits(
    params: ChannelParams,
    strategy: str | Callable[[ChannelParams, PowerSplit], RatePolytope],
    grid: int = 11,
) -> RatePolytope:
    """Hull of a region builder over a uniform (lambda1, lambda2) grid."""
    builder = HK_BUILDERS[strategy] if isinstance(strategy, str) else strategy
    regions = [builder(params, split) for split in split_grid(grid)]
    name = strategy if isinstance(strategy, str) else getattr(builder, "__name__", "hk")
    return convex_hull_union(regions).with_label(f"{name}-sweep{grid}")
