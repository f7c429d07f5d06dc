"""Channel parameter sets for the three published figures."""
from __future__ import annotations

from .channel import ChannelParams

_FIG1 = dict(eta11=1 / 16, eta12=1 / 2, eta21=1 / 2, eta22=1 / 16, NB1=1.0, NB2=1.0)
_FIG2 = dict(eta11=0.3, eta12=0.6, eta21=0.6, eta22=0.3, NB1=1.0, NB2=1.0)
_FIG3 = dict(eta11=0.8, eta12=0.1, eta21=0.1, eta22=0.8, NB1=1.0, NB2=1.0)

PRESETS: dict[str, ChannelParams] = {
    "fig1-low": ChannelParams(NS1=1.0, NS2=1.0, **_FIG1),
    "fig1-high": ChannelParams(NS1=100.0, NS2=100.0, **_FIG1),
    "fig2-low": ChannelParams(NS1=2.0, NS2=2.0, **_FIG2),
    "fig2-high": ChannelParams(NS1=100.0, NS2=100.0, **_FIG2),
    "fig3": ChannelParams(NS1=100.0, NS2=100.0, **_FIG3),
}

# 10% personal, 90% common
FIG3_SPLIT = (0.1, 0.1)

FIGURE_SERIES: dict[int, tuple[str, ...]] = {
    1: ("vsi-homodyne", "vsi-heterodyne", "vsi-joint"),
    2: ("strong-homodyne", "strong-heterodyne", "strong-quantum", "strong-minentropy-hull"),
    3: ("hk-homodyne", "hk-heterodyne", "hk-quantum", "hk-minentropy-hull"),
}


def figure_of(preset: str) -> int | None:
    if preset.startswith("fig") and preset[3:4].isdigit():
        return int(preset[3])
    return None
