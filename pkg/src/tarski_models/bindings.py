"""Model bindings: predicates, witness oracles and instance generators.

Uniformly random tuples almost never satisfy premises such as congruence or
collinearity, so each generator builds an instance that satisfies its
axiom's premise by construction: isometric copies for congruence, ratio
chains for betweenness, perpendicular bisectors for the upper dimension
axiom, translated lines for parallelism.
"""
from __future__ import annotations

import random
from fractions import Fraction

from . import cartesian as cart
from . import klein
from .axioms import ModelBinding, Refutation
from .cartesian import Vec
from .errors import InputError
from .finite import FiniteModel
from .klein import KPoint
from .scalar import ONE, ZERO, Scalar

DEFAULT_BOUND = 100


class Sampler:
    """Random exact rationals: numerators in [-B, B], denominators in [1, B]."""

    def __init__(self, rng: random.Random, bound: int = DEFAULT_BOUND):
        if bound < 2:
            raise InputError("rational bound must be at least 2")
        self.rng = rng
        self.bound = bound

    def rational(self) -> Scalar:
        b = self.bound
        return Scalar(Fraction(self.rng.randint(-b, b), self.rng.randint(1, b)))

    def open_ratio(self) -> Scalar:
        den = self.rng.randint(2, self.bound)
        return Scalar(Fraction(self.rng.randint(1, den - 1), den))

    def closed_ratio(self) -> Scalar:
        roll = self.rng.random()
        if roll < 0.05:
            return ZERO
        if roll < 0.10:
            return ONE
        return self.open_ratio()

    def unit_ratio(self) -> Scalar:
        """A ratio in (0, 1], hitting 1 now and then."""
        return ONE if self.rng.random() < 0.05 else self.open_ratio()

    def coin(self, p: float) -> bool:
        return self.rng.random() < p

    def vec(self, dim: int) -> Vec:
        return Vec(self.rational() for _ in range(dim))

    def distinct_vec(self, dim: int, *avoid: Vec) -> Vec:
        while True:
            v = self.vec(dim)
            if v not in avoid:
                return v

    def rotation(self):
        t = self.rational()
        return cart.reflection(t) if self.coin(0.3) else cart.rational_rotation(t)


def _on_segment(a: Vec, b: Vec, k: Scalar) -> Vec:
    return a + k * (b - a)


def _rot90(v: Vec) -> Vec:
    return Vec((-v[1], v[0]) + v.coords[2:])


# ---------------------------------------------------------------------------
# Cartesian model


def _cartesian_generators(dim: int, bound: int) -> dict:
    def sampler(rng):
        return Sampler(rng, bound)

    def isometry(s: Sampler):
        if dim == 1:
            flip, shift = (-ONE if s.coin(0.5) else ONE), s.vec(1)
            return lambda p: flip * p + shift
        rot, shift = s.rotation(), s.vec(dim)
        return lambda p: cart.apply_isometry(rot, shift, p)

    def g_a0(rng):
        s = sampler(rng)
        x = s.vec(dim)
        return x, (x if s.coin(0.5) else s.vec(dim))

    def g_a1(rng):
        s = sampler(rng)
        return s.vec(dim), s.vec(dim)

    def g_a2(rng):
        s = sampler(rng)
        a, b = s.vec(dim), s.vec(dim)
        f, g = isometry(s), isometry(s)
        return a, b, f(a), f(b), g(a), g(b)

    def g_a2p(rng):
        s = sampler(rng)
        e = s.vec(dim)
        f_ = e if s.coin(0.05) else s.vec(dim)
        g, h = isometry(s), isometry(s)
        return g(e), g(f_), h(e), h(f_), e, f_

    def g_a3(rng):
        s = sampler(rng)
        a = s.vec(dim)
        return a, a, s.vec(dim)

    def g_a4(rng):
        s = sampler(rng)
        a = s.vec(dim)
        b = a if s.coin(0.05) else s.vec(dim)
        c = s.vec(dim)
        d = c if s.coin(0.05) else s.vec(dim)
        return a, b, c, d

    def g_a5(rng):
        s = sampler(rng)
        a = s.vec(dim)
        c = s.distinct_vec(dim, a)
        b = _on_segment(a, c, s.unit_ratio())
        d = s.vec(dim)
        f = isometry(s)
        return a, b, c, d, f(a), f(b), f(c), f(d)

    def g_a6(rng):
        s = sampler(rng)
        a = s.vec(dim)
        return a, a

    def g_a7(rng):
        s = sampler(rng)
        a, b = s.vec(dim), s.vec(dim)
        c = _on_segment(a, b, s.rational()) if s.coin(0.1) else s.vec(dim)
        return a, b, c, _on_segment(a, c, s.closed_ratio()), _on_segment(b, c, s.closed_ratio())

    def g_a7p(rng):
        s = sampler(rng)
        while True:
            a, b, c = s.vec(dim), s.vec(dim), s.vec(dim)
            # on a line every triple is collinear; emit it and let the premise fail
            if dim == 1 or not cart.col(a, b, c):
                break
        return a, b, c, _on_segment(a, c, s.open_ratio()), _on_segment(b, c, s.open_ratio())

    def g_a10(rng):
        s = sampler(rng)
        a = s.vec(dim)
        t = s.distinct_vec(dim, a)
        d = _on_segment(a, t, s.unit_ratio())
        b = s.vec(dim)
        if b == d:
            c = s.vec(dim)
        else:
            c = b + (d - b) * (ONE / s.unit_ratio())
        return a, b, c, d, t

    def g_a14(rng):
        s = sampler(rng)
        a, c = s.vec(dim), s.vec(dim)
        return a, _on_segment(a, c, s.closed_ratio()), c

    def g_a15(rng):
        s = sampler(rng)
        a, d = s.vec(dim), s.vec(dim)
        b = _on_segment(a, d, s.closed_ratio())
        c = _on_segment(b, d, s.closed_ratio())
        return a, b, c, d

    gens = {
        "A0": g_a0, "A1": g_a1, "A2": g_a2, "A2p": g_a2p, "A3": g_a3, "A4": g_a4,
        "A5": g_a5, "A6": g_a6, "A7": g_a7, "A7p": g_a7p, "A10": g_a10, "A14": g_a14,
        "A15": g_a15, "A8": lambda rng: (),
    }

    if dim == 2:

        def upper_dim(distinct: bool):
            def gen(rng):
                s = sampler(rng)
                p = s.vec(2)
                q = s.distinct_vec(2, p)
                m, w = cart.midpoint(p, q), _rot90(q - p)
                if distinct:
                    ks: list = []
                    while len(ks) < 3:
                        k = s.rational()
                        if k not in ks:
                            ks.append(k)
                else:
                    ks = [s.rational() for _ in range(3)]
                a, b, c = (m + k * w for k in ks)
                return a, b, c, p, q

            return gen

        def g_a10p(rng):
            s = sampler(rng)
            a = s.vec(2)
            b = s.distinct_vec(2, a)
            u = b - a
            shift = ZERO * u if s.coin(0.05) else s.vec(2)
            k1 = s.rational()
            k2 = k1
            while k2 == k1:
                k2 = s.rational()
            c, d = a + shift + k1 * u, a + shift + k2 * u
            p = a + s.rational() * u
            while True:
                q = s.vec(2)
                if not cart.col_2d(a, b, q):
                    break
            return a, b, c, d, p, q

        gens["A9"] = upper_dim(False)
        gens["A9p"] = upper_dim(True)
        gens["A10p"] = g_a10p
    return gens


def _cartesian_par(a, b, c, d):
    if a == b or c == d:
        return False
    return cart.par_2d(a, b, c, d)


def _cartesian_proclus(a, b, c, d, p, q):
    y = cart.line_intersection_2d(c, d, p, q)
    if y is None:
        return Refutation({"reason": "lines CD and PQ are parallel"})
    return (y,)


def cartesian_binding(dim: int = 2, bound: int = DEFAULT_BOUND, name: str = "") -> ModelBinding:
    if dim < 1:
        raise InputError("dimension must be at least 1")

    def decode(text):
        return Vec.parse(text, dim=dim)

    witnesses = {
        "A4": lambda a, b, c, d: (cart.seg_construct_witness(a, b, c, d),),
        "A7": lambda a, b, c, p, q: (cart.pasch_point(a, b, c, p, q),),
        "A7p": lambda a, b, c, p, q: (cart.pasch_witness(a, b, c, p, q)[0],),
        "A10": lambda a, b, c, d, t: cart.euclid_point_pair(a, b, c, d, t),
    }
    if dim >= 2:
        witnesses["A8"] = lambda: cart.lower_dim_witness(dim)
    if dim == 2:
        witnesses["A10p"] = _cartesian_proclus
    return ModelBinding(
        name=name or f"cartesian:{dim}",
        eq=lambda x, y: x == y,
        bet=cart.bet,
        cong=cart.cong,
        par=_cartesian_par if dim == 2 else None,
        witnesses=witnesses,
        generators=_cartesian_generators(dim, bound),
        encode=str,
        decode=decode,
    )


# ---------------------------------------------------------------------------
# Klein model


def _klein_generators(bound: int) -> dict:
    def sampler(rng):
        return Sampler(rng, bound)

    def point(s: Sampler) -> KPoint:
        while True:
            v = s.vec(2)
            if klein.in_disk(v):
                return KPoint(v)

    def isometry(s: Sampler):
        # a boost conjugated by rotations reaches translations in every direction
        t1, t2 = s.rational(), s.rational()
        t = s.open_ratio() * (ONE if s.coin(0.5) else -ONE)
        return lambda p: klein.rotate(t2, klein.boost(t, klein.rotate(t1, p)))

    def between(a: KPoint, c: KPoint, k: Scalar) -> KPoint:
        return KPoint(_on_segment(a.v, c.v, k))

    def g_a0(rng):
        s = sampler(rng)
        x = point(s)
        return x, (x if s.coin(0.5) else point(s))

    def g_a1(rng):
        s = sampler(rng)
        return point(s), point(s)

    def g_a2(rng):
        s = sampler(rng)
        a, b = point(s), point(s)
        f, g = isometry(s), isometry(s)
        return a, b, f(a), f(b), g(a), g(b)

    def g_a2p(rng):
        s = sampler(rng)
        e = point(s)
        f_ = e if s.coin(0.05) else point(s)
        g, h = isometry(s), isometry(s)
        return g(e), g(f_), h(e), h(f_), e, f_

    def g_a3(rng):
        s = sampler(rng)
        a = point(s)
        return a, a, point(s)

    def g_a6(rng):
        s = sampler(rng)
        a = point(s)
        return a, a

    def g_a7(rng):
        s = sampler(rng)
        a, b, c = point(s), point(s), point(s)
        return a, b, c, between(a, c, s.closed_ratio()), between(b, c, s.closed_ratio())

    def g_a7p(rng):
        s = sampler(rng)
        while True:
            a, b, c = point(s), point(s), point(s)
            if not klein.col_k(a, b, c):
                break
        return a, b, c, between(a, c, s.open_ratio()), between(b, c, s.open_ratio())

    def g_a14(rng):
        s = sampler(rng)
        a, c = point(s), point(s)
        return a, between(a, c, s.closed_ratio()), c

    def g_a15(rng):
        s = sampler(rng)
        a, d = point(s), point(s)
        b = between(a, d, s.closed_ratio())
        return a, b, between(b, d, s.closed_ratio()), d

    def g_a10p(rng):
        # x = (0, y) strictly between b = (0, 1/2) and the unit circle
        s = sampler(rng)
        den = s.rng.randint(3, s.bound)
        lo, hi = den // 2 + 1, den - 1
        if lo > hi:
            den, lo, hi = 4, 3, 3
        x = klein.kp(0, Fraction(s.rng.randint(lo, hi), den))
        return klein.proclus_instance(x)

    return {
        "A0": g_a0, "A1": g_a1, "A2": g_a2, "A2p": g_a2p, "A3": g_a3, "A6": g_a6,
        "A7": g_a7, "A7p": g_a7p, "A14": g_a14, "A15": g_a15, "A10p": g_a10p,
        "A8": lambda rng: (),
    }


def _klein_proclus(a, b, c, d, p, q):
    meet = klein.chord_meet(c, d, p, q)
    if meet is None:
        return Refutation({"reason": "lines CD and PQ are parallel"})
    if klein.in_disk(meet):
        return (KPoint(meet),)
    evidence = {
        "reason": "lines CD and PQ meet only outside the unit disk",
        "meet": str(meet),
        "meet_norm2": str(meet.norm2()),
    }
    config = klein.euclid_counterexample_config()
    ca, cb, cc, _, ct = config
    if (a, b, c, d, p) == (cb, ct, ca, cc, ct):
        forced = klein.euclid_forced_y(q)
        evidence["config"] = dict(zip("abcdt", map(str, config)))
        if forced.y != meet:
            raise AssertionError("forced point disagrees with the line intersection")
        evidence["forced_y"] = forced.as_dict()
    return Refutation(evidence)


def _klein_decode(text):
    return KPoint.parse(text)


def klein_binding(bound: int = DEFAULT_BOUND, name: str = "klein") -> ModelBinding:
    half = Fraction(1, 2)
    return ModelBinding(
        name=name,
        eq=lambda x, y: x == y,
        bet=klein.bet_k,
        cong=klein.cong_k,
        par=klein.par_k,
        witnesses={
            "A7": lambda a, b, c, p, q: (KPoint(cart.pasch_point(a.v, b.v, c.v, p.v, q.v)),),
            "A7p": lambda a, b, c, p, q: (KPoint(cart.pasch_witness(a.v, b.v, c.v, p.v, q.v)[0]),),
            "A8": lambda: (klein.kp(0, 0), klein.kp(0, half), klein.kp(half, 0)),
            "A10p": _klein_proclus,
        },
        generators=_klein_generators(bound),
        encode=str,
        decode=_klein_decode,
    )


# ---------------------------------------------------------------------------
# finite models


def finite_binding(m: FiniteModel, name: str = "") -> ModelBinding:
    def decode(value):
        if isinstance(value, bool) or not isinstance(value, int) or not 0 <= value < m.size:
            raise InputError(f"{value!r} is not a point of the model")
        return value

    return ModelBinding(
        name=name or f"finite:{m.name or 'model'}",
        eq=lambda x, y: x == y,
        bet=m.bet,
        cong=m.cong,
        universe=tuple(m.points),
        encode=lambda p: p,
        decode=decode,
    )
