import hypothesis.strategies as st
import pytest
from hypothesis import settings

from fqcarlitz import Poly, field_from_q, parse_poly

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def polys(F, max_deg=6, nonzero=False, monic=False):
    """Strategy for polynomials over F with degree <= max_deg."""
    coeff = st.integers(0, F.q - 1)

    def build(cs):
        f = Poly(F, cs)
        if monic and f:
            f = f.monic()
        return f

    strat = st.lists(coeff, min_size=0, max_size=max_deg + 1).map(build)
    if nonzero or monic:
        strat = strat.filter(bool)
    return strat


@pytest.fixture
def P():
    """P(text, q) parses a polynomial over F_q."""
    return lambda text, q=3: parse_poly(text, field_from_q(q))
