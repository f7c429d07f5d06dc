"""Physical description of the two-sender two-receiver optical interference channel.

The receiver modes mix the two transmitter modes passively,

    b1 = sqrt(eta11) a1 + sqrt(eta21) a2 + sqrt(1 - eta11 - eta21) v1
    b2 = sqrt(eta12) a1 - sqrt(eta22) a2 + sqrt(1 - eta12 - eta22) v2

with v1, v2 in thermal states of NB1, NB2 photons.  Only the classical
statistics induced by coherent-state inputs are modelled here.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import PassivityError, RangeError, StrategyError, UnitarityError

UNITARITY_TOL = 1e-12
PASSIVITY_TOL = 1e-12


class DetectionStrategy(enum.Enum):
    HOMODYNE = "homodyne"
    HETERODYNE = "heterodyne"
    JOINT = "joint"
    MIN_ENTROPY_SIMULTANEOUS = "min-entropy-simultaneous"

    @property
    def is_coherent(self) -> bool:
        return self in (DetectionStrategy.HOMODYNE, DetectionStrategy.HETERODYNE)

    @property
    def detection_index(self) -> int:
        """1 for homodyne, 0 for heterodyne."""
        if self is DetectionStrategy.HOMODYNE:
            return 1
        if self is DetectionStrategy.HETERODYNE:
            return 0
        raise StrategyError(f"{self.value} detection has no detection index")


HOMODYNE = DetectionStrategy.HOMODYNE
HETERODYNE = DetectionStrategy.HETERODYNE
JOINT = DetectionStrategy.JOINT
MIN_ENTROPY = DetectionStrategy.MIN_ENTROPY_SIMULTANEOUS


@dataclass(frozen=True)
class ChannelParams:
    eta11: float
    eta12: float
    eta21: float
    eta22: float
    NS1: float
    NS2: float
    NB1: float
    NB2: float

    @property
    def eta_bar1(self) -> float:
        return 1.0 - (self.eta11 + self.eta21)

    @property
    def eta_bar2(self) -> float:
        return 1.0 - (self.eta12 + self.eta22)

    @property
    def noise1(self) -> float:
        """Thermal photons reaching receiver 1 from its environment mode."""
        return max(self.eta_bar1, 0.0) * self.NB1

    @property
    def noise2(self) -> float:
        return max(self.eta_bar2, 0.0) * self.NB2

    def swapped(self) -> "ChannelParams":
        """Relabel sender/receiver 1 <-> 2."""
        return ChannelParams(
            eta11=self.eta22, eta12=self.eta21, eta21=self.eta12, eta22=self.eta11,
            NS1=self.NS2, NS2=self.NS1, NB1=self.NB2, NB2=self.NB1,
        )

    def replace(self, **changes) -> "ChannelParams":
        fields = {k: getattr(self, k) for k in PARAM_KEYS}
        fields.update(changes)
        return ChannelParams(**fields)

    def to_dict(self) -> dict:
        return {k: getattr(self, k) for k in PARAM_KEYS}


PARAM_KEYS = ("eta11", "eta12", "eta21", "eta22", "NS1", "NS2", "NB1", "NB2")


def validate(raw: ChannelParams) -> ChannelParams:
    for name in ("eta11", "eta12", "eta21", "eta22"):
        value = getattr(raw, name)
        if not (math.isfinite(value) and 0.0 <= value <= 1.0):
            raise RangeError(f"{name}={value!r} is not in [0, 1]")
    for name in ("NS1", "NS2", "NB1", "NB2"):
        value = getattr(raw, name)
        if not (math.isfinite(value) and value >= 0.0):
            raise RangeError(f"{name}={value!r} must be a nonnegative photon number")

    sums = {
        "eta11+eta12": raw.eta11 + raw.eta12,
        "eta11+eta21": raw.eta11 + raw.eta21,
        "eta22+eta21": raw.eta22 + raw.eta21,
        "eta22+eta12": raw.eta22 + raw.eta12,
    }
    for label, total in sums.items():
        if total > 1.0 + PASSIVITY_TOL:
            raise PassivityError(f"{label}={total:.12g} exceeds 1")

    gap = math.sqrt(raw.eta11 * raw.eta12) - math.sqrt(raw.eta21 * raw.eta22)
    if abs(gap) > UNITARITY_TOL:
        raise UnitarityError(
            f"sqrt(eta11*eta12) - sqrt(eta21*eta22) = {gap:.3g}, expected 0"
        )
    return raw


@dataclass(frozen=True)
class GaussianStat:
    mean: float
    variance: float
    per_quadrature: bool = False


def homodyne_statistics(
    params: ChannelParams, alpha1: float, alpha2: float
) -> tuple[GaussianStat, GaussianStat]:
    """Real-quadrature outputs Y1, Y2 for real coherent amplitudes."""
    y1 = GaussianStat(
        mean=math.sqrt(params.eta11) * alpha1 + math.sqrt(params.eta21) * alpha2,
        variance=(2.0 * params.noise1 + 1.0) / 4.0,
    )
    # receiver 2 sees sender 1 through eta12 and sender 2 through eta22
    y2 = GaussianStat(
        mean=math.sqrt(params.eta12) * alpha1 + math.sqrt(params.eta22) * alpha2,
        variance=(2.0 * params.noise2 + 1.0) / 4.0,
    )
    return y1, y2


def heterodyne_statistics(
    params: ChannelParams, alpha1: complex, alpha2: complex
) -> tuple[tuple[GaussianStat, GaussianStat], tuple[GaussianStat, GaussianStat]]:
    """Per receiver, the (real part, imaginary part) statistics of Z_m."""
    alpha1, alpha2 = complex(alpha1), complex(alpha2)
    gains = (
        (math.sqrt(params.eta11), math.sqrt(params.eta21), params.noise1),
        (math.sqrt(params.eta12), math.sqrt(params.eta22), params.noise2),
    )
    out = []
    for from1, from2, noise in gains:
        variance = (noise + 1.0) / 2.0
        mu = from1 * alpha1 + from2 * alpha2
        out.append((
            GaussianStat(mu.real, variance, per_quadrature=True),
            GaussianStat(mu.imag, variance, per_quadrature=True),
        ))
    return out[0], out[1]


@dataclass(frozen=True)
class DetectionNoise:
    N1: float
    N2: float


def detection_noise(params: ChannelParams, det: DetectionStrategy) -> DetectionNoise:
    """Effective noise floors N_m = (2^i noise_m + 1) / 4^i in photon units."""
    i = det.detection_index
    return DetectionNoise(
        N1=(2**i * params.noise1 + 1.0) / 4**i,
        N2=(2**i * params.noise2 + 1.0) / 4**i,
    )


@dataclass(frozen=True)
class FresnelGeometry:
    At: float
    Ar: float
    wavelength: float
    range: float

    def __post_init__(self):
        for name in ("At", "Ar", "wavelength", "range"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0):
                raise RangeError(f"geometry field {name}={value!r} must be positive")


@dataclass(frozen=True)
class FresnelSummary:
    Df: float
    regime: str  # "NearField" or "FarField"
    mode_count_or_eta: float


def fresnel_summary(geom: FresnelGeometry) -> FresnelSummary:
    Df = geom.At * geom.Ar / (geom.wavelength * geom.range) ** 2
    if Df > 1.0:
        # Df spatial modes, two polarizations each
        return FresnelSummary(Df, "NearField", 2.0 * Df)
    return FresnelSummary(Df, "FarField", Df)
