"""Hypothesis strategies for engine setups."""

from hypothesis import strategies as st

from tls_heat_engine import BathPair, EngineSetup


@st.composite
def setups(draw, min_ratio=1.2, max_ratio=20.0, max_x1=3.0):
    """Valid engine setups with moderate gap/temperature ratios."""
    t2 = draw(st.floats(min_value=0.1, max_value=10.0))
    ratio = draw(st.floats(min_value=min_ratio, max_value=max_ratio))
    nu = draw(st.floats(min_value=1e-3, max_value=0.999))
    x1 = draw(st.floats(min_value=0.05, max_value=max_x1))
    t1 = t2 * ratio
    a1 = x1 * t1
    return EngineSetup(a1, nu * a1, BathPair(t1, t2))


@st.composite
def extracting_setups(draw, min_ratio=1.2, max_ratio=20.0, max_x1=3.0):
    """Setups with nu strictly above theta, so net work is extracted."""
    t2 = draw(st.floats(min_value=0.1, max_value=10.0))
    ratio = draw(st.floats(min_value=min_ratio, max_value=max_ratio))
    frac = draw(st.floats(min_value=1e-3, max_value=0.999))
    x1 = draw(st.floats(min_value=0.05, max_value=max_x1))
    t1 = t2 * ratio
    theta = t2 / t1
    nu = theta + (1.0 - theta) * frac
    a1 = x1 * t1
    return EngineSetup(a1, nu * a1, BathPair(t1, t2))
