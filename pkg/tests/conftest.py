import numpy as np
import pytest
from hypothesis import strategies as st

from ichannel.channel import ChannelParams
from ichannel.presets import PRESETS


def params_from(e11, e22, t, ns1, ns2, nb1, nb2):
    # cross couplings scale with the same factor t, so sqrt(e11*e12) == sqrt(e21*e22)
    return ChannelParams(
        eta11=e11, eta12=t * e22, eta21=t * e11, eta22=e22,
        NS1=ns1, NS2=ns2, NB1=nb1, NB2=nb2,
    )


def is_passive(p):
    return (
        p.eta11 + p.eta12 <= 1 and p.eta11 + p.eta21 <= 1
        and p.eta22 + p.eta21 <= 1 and p.eta22 + p.eta12 <= 1
    )


@st.composite
def valid_params(draw, symmetric=False, max_ns=200.0):
    e11 = draw(st.floats(0.01, 0.95))
    e22 = e11 if symmetric else draw(st.floats(0.01, 0.95))
    t = draw(st.floats(0.0, 12.0))
    ns1 = draw(st.floats(0.0, max_ns))
    ns2 = ns1 if symmetric else draw(st.floats(0.0, max_ns))
    nb1 = draw(st.floats(0.0, 5.0))
    nb2 = nb1 if symmetric else draw(st.floats(0.0, 5.0))
    p = params_from(e11, e22, t, ns1, ns2, nb1, nb2)
    if not is_passive(p):
        # shrink the cross coupling onto the passivity boundary
        t = min(t, (1 - e11) / e11, (1 - e22) / e22, (1 - e11) / e22, (1 - e22) / e11)
        p = params_from(e11, e22, max(t, 0.0), ns1, ns2, nb1, nb2)
    return p


def random_valid_params(rng: np.random.Generator, n: int, symmetric_every: int = 0):
    """Rejection sampling over the passivity region, unitarity by construction."""
    out = []
    while len(out) < n:
        e11, e22 = rng.uniform(0.01, 0.95, size=2)
        t = rng.exponential(2.0)
        ns1, ns2 = rng.uniform(0, 1, size=2) ** 2 * 200
        nb1, nb2 = rng.uniform(0, 5, size=2)
        if symmetric_every and len(out) % symmetric_every == 0:
            e22, ns2, nb2 = e11, ns1, nb1
        p = params_from(e11, e22, t, ns1, ns2, nb1, nb2)
        if is_passive(p):
            out.append(p)
    return out


@pytest.fixture(params=sorted(PRESETS))
def preset(request):
    return request.param, PRESETS[request.param]


@pytest.fixture
def fig1_low():
    return PRESETS["fig1-low"]


@pytest.fixture
def fig2_low():
    return PRESETS["fig2-low"]


@pytest.fixture
def fig2_high():
    return PRESETS["fig2-high"]


@pytest.fixture
def fig3():
    return PRESETS["fig3"]
