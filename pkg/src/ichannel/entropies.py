"""Scalar entropy functions, all in nats."""
from __future__ import annotations

import math

from .channel import DetectionStrategy
from .errors import DomainError, StrategyError

_SMALL_N = 1e-12


def g(N: float) -> float:
    """Von Neumann entropy of a thermal state with mean photon number N."""
    if N < 0:
        raise DomainError(f"photon number must be >= 0, got {N!r}")
    if N == 0:
        return 0.0
    if N < _SMALL_N:
        return N * (1.0 - math.log(N))
    # (N+1) ln(N+1) - N ln N, rearranged to avoid cancellation at large N
    return math.log1p(N) + N * math.log1p(1.0 / N)


def thermal_min_entropy(N: float) -> float:
    """-ln of the largest eigenvalue of a thermal state, ln(N + 1)."""
    if N < 0:
        raise DomainError(f"photon number must be >= 0, got {N!r}")
    return math.log1p(N)


def gamma(x: float, det: DetectionStrategy) -> float:
    """Coherent-detection capacity ln(1 + x) / 2^i at signal-to-noise ratio x."""
    if not det.is_coherent:
        raise StrategyError(f"gamma is defined for coherent detection only, got {det.value}")
    if x < 0:
        raise DomainError(f"SNR must be >= 0, got {x!r}")
    return math.log1p(x) / 2**det.detection_index
