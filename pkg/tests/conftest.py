from __future__ import annotations

import sys
from fractions import Fraction
from pathlib import Path

from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from compass_grid.exact import Constructible  # noqa: E402

CORPUS = Path(__file__).parent / "corpus"

small_rationals = st.fractions(min_value=-20, max_value=20, max_denominator=20)
nonneg_rationals = st.fractions(min_value=0, max_value=20, max_denominator=20)


@st.composite
def constructibles(draw, max_sqrts: int = 2):
    """a + b*sqrt(r1) + c*sqrt(r2)... built with field operations only."""
    x = Constructible(draw(small_rationals))
    for _ in range(draw(st.integers(0, max_sqrts))):
        r = Constructible(draw(nonneg_rationals)) + draw(st.sampled_from([0, 1, 2]))
        if draw(st.booleans()):
            r = r + x * x  # nest
        x = x + Constructible(draw(small_rationals)) * r.sqrt()
    return x


def rat(v) -> Fraction:
    return Fraction(v)
