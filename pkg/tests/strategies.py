"""Hypothesis strategies and an independent high-precision oracle.

Every generated Scalar travels with an mpmath value computed from the same
expression tree using mpmath's own arithmetic, so exact results can be
checked against something that does not share code with the package.
"""
from fractions import Fraction

import mpmath
from hypothesis import strategies as st

from tarski_models.cartesian import Vec
from tarski_models.scalar import Scalar, sqrt_nonneg

mpmath.mp.dps = 60
TOL = mpmath.mpf(10) ** -40

SMALL_SQUAREFREE = (2, 3, 5, 6, 7, 10, 11, 13, 14, 15)

# Nested radicands are kept to a fixed pool: every genuinely new nested
# square root deepens the shared tower and slows later square tests.
NESTED_RADICANDS = (
    ((1, 1, 2), "1+sqrt(2)"),
    ((2, 1, 2), "2+sqrt(2)"),
    ((2, 1, 3), "2+sqrt(3)"),
    ((5, 2, 5), "5+2*sqrt(5)"),
    ((3, -1, 5), "3-sqrt(5)"),
)


def mp_of_fraction(q: Fraction):
    return mpmath.mpf(q.numerator) / q.denominator


def close(a, b) -> bool:
    return abs(a - b) <= TOL * (1 + abs(a) + abs(b))


fractions = st.builds(
    Fraction, st.integers(-60, 60), st.integers(1, 60)
)
nonzero_fractions = fractions.filter(lambda q: q != 0)


@st.composite
def rational_pairs(draw):
    q = draw(fractions)
    return Scalar(q), mp_of_fraction(q)


@st.composite
def quadratic_pairs(draw):
    """q0 + q1*sqrt(m) for a small squarefree m."""
    q0, q1 = draw(fractions), draw(fractions)
    m = draw(st.sampled_from(SMALL_SQUAREFREE))
    x = Scalar(q0) + Scalar(q1) * sqrt_nonneg(Scalar(m))
    return x, mp_of_fraction(q0) + mp_of_fraction(q1) * mpmath.sqrt(m)


@st.composite
def nested_pairs(draw):
    """q0 + q1*sqrt(a + b*sqrt(m)) from the fixed nested pool."""
    (a, b, m), _ = draw(st.sampled_from(NESTED_RADICANDS))
    q0, q1 = draw(fractions), draw(fractions)
    inner = Scalar(a) + Scalar(b) * sqrt_nonneg(Scalar(m))
    x = Scalar(q0) + Scalar(q1) * sqrt_nonneg(inner)
    ref = mp_of_fraction(q0) + mp_of_fraction(q1) * mpmath.sqrt(a + b * mpmath.sqrt(m))
    return x, ref


atom_pairs = st.one_of(rational_pairs(), quadratic_pairs(), nested_pairs())


@st.composite
def scalar_pairs(draw):
    """A Scalar built by a few ring operations on atoms, with its oracle value."""
    x, rx = draw(atom_pairs)
    for _ in range(draw(st.integers(0, 2))):
        y, ry = draw(atom_pairs)
        op = draw(st.sampled_from("+-*"))
        if op == "+":
            x, rx = x + y, rx + ry
        elif op == "-":
            x, rx = x - y, rx - ry
        else:
            x, rx = x * y, rx * ry
    return x, rx


scalars = scalar_pairs().map(lambda pair: pair[0])
rational_scalars = fractions.map(Scalar)


def vecs(dim: int = 2, elements=None):
    elements = elements if elements is not None else rational_scalars
    return st.lists(elements, min_size=dim, max_size=dim).map(Vec)


def disk_points():
    """Rational points strictly inside the unit disk."""
    from tarski_models.klein import KPoint, in_disk

    coord = st.builds(Fraction, st.integers(-40, 40), st.integers(41, 60))
    return st.tuples(coord, coord).map(lambda xy: Vec(xy)).filter(in_disk).map(KPoint)


open_ratios = st.builds(
    lambda num, extra: Fraction(num, num + extra), st.integers(1, 50), st.integers(1, 50)
)
