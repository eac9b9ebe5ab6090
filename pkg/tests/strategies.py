"""Hypothesis strategies for tropical and signed values."""

from fractions import Fraction

from hypothesis import strategies as st

from troposign.core import NEG_INF, ZERO, Bal, Neg, Pos

magnitudes = st.fractions(min_value=-6, max_value=6, max_denominator=4)
small_magnitudes = st.integers(min_value=-3, max_value=3).map(Fraction)

trop = st.one_of(st.just(NEG_INF), magnitudes)

signed = st.one_of(
    st.just(ZERO),
    magnitudes.map(Pos),
    magnitudes.map(Neg),
)

sym = st.one_of(signed, magnitudes.map(Bal))


def trop_vecs(n, elements=trop):
    return st.lists(elements, min_size=n, max_size=n).map(tuple)


def signed_vecs(n):
    return st.lists(signed, min_size=n, max_size=n).map(tuple)


@st.composite
def signed_pairs(draw, n):
    """Signed pairs: each coordinate is on the plus side, the minus side, or neither."""
    plus, minus = [], []
    for _ in range(n):
        side = draw(st.sampled_from("+-0"))
        m = draw(small_magnitudes)
        plus.append(m if side == "+" else NEG_INF)
        minus.append(m if side == "-" else NEG_INF)
    return tuple(plus), tuple(minus)


@st.composite
def symmetric_trop(draw, max_n=4):
    n = draw(st.integers(1, max_n))
    a = [[NEG_INF] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            a[i][j] = a[j][i] = draw(st.one_of(st.just(NEG_INF), small_magnitudes))
    return tuple(tuple(r) for r in a)
