"""Klein's disk model: the open unit disk with chords as lines.

Betweenness is the Cartesian one on coordinates.  Two segments are congruent
when ``(1 - a.b)^2 / ((1 - a.a)(1 - b.b))`` agrees for both, which is the
squared hyperbolic cosine of their length.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import cartesian as cart
from .cartesian import Vec
from .errors import InputError, OutsideDiskError
from .scalar import ONE, ZERO, Scalar, as_scalar


class KPoint:
    """A planar point strictly inside the unit disk."""

    __slots__ = ("v",)

    def __init__(self, v):
        if not isinstance(v, Vec):
            v = Vec(v)
        if v.dim != 2:
            raise InputError(f"Klein points are planar, got dimension {v.dim}")
        n2 = v.norm2()
        if n2 >= ONE:
            raise OutsideDiskError(str(v), str(n2))
        object.__setattr__(self, "v", v)

    def __setattr__(self, name, value):
        raise AttributeError("KPoint is immutable")

    @classmethod
    def parse(cls, text: str) -> "KPoint":
        return cls(Vec.parse(text, dim=2))

    def __eq__(self, other):
        if not isinstance(other, KPoint):
            return NotImplemented
        return self.v == other.v

    def __hash__(self):
        return hash(self.v)

    def __str__(self):
        return str(self.v)

    def __repr__(self):
        return f"KPoint({str(self.v)!r})"


def mk_kpoint(v) -> KPoint:
    return KPoint(v)


def kp(x, y) -> KPoint:
    return KPoint(Vec((x, y)))


def in_disk(v: Vec) -> bool:
    return v.norm2() < ONE


def bet_k(a: KPoint, b: KPoint, c: KPoint) -> bool:
    return cart.bet(a.v, b.v, c.v)


def col_k(a: KPoint, b: KPoint, c: KPoint) -> bool:
    return cart.col(a.v, b.v, c.v)


def omd(v: Vec, w: Vec) -> Scalar:
    return ONE - v.dot(w)


def cong_k(a: KPoint, b: KPoint, c: KPoint, d: KPoint) -> bool:
    # cross-multiplied; every omd(p, p) is positive inside the disk
    lhs = omd(a.v, b.v) ** 2 * omd(c.v, c.v) * omd(d.v, d.v)
    rhs = omd(c.v, d.v) ** 2 * omd(a.v, a.v) * omd(b.v, b.v)
    return lhs == rhs


def cosh2_distance(a: KPoint, b: KPoint) -> Scalar:
    return omd(a.v, b.v) ** 2 / (omd(a.v, a.v) * omd(b.v, b.v))


def chord_meet(a: KPoint, b: KPoint, c: KPoint, d: KPoint) -> Optional[Vec]:
    """Euclidean meeting point of lines AB and CD (``c`` if they coincide)."""
    return cart.line_intersection_2d(a.v, b.v, c.v, d.v)


def par_k(a: KPoint, b: KPoint, c: KPoint, d: KPoint) -> bool:
    """Lines AB and CD coincide or share no point of the disk."""
    if a == b or c == d:
        return False
    if col_k(a, c, d) and col_k(b, c, d):
        return True
    meet = chord_meet(a, b, c, d)
    return meet is None or not in_disk(meet)


# ---------------------------------------------------------------------------
# isometries with rational coefficients


def rotate(t, p: KPoint) -> KPoint:
    return KPoint(cart.apply_isometry(cart.rational_rotation(t), Vec.zero(2), p.v))


def boost(t, p: KPoint) -> KPoint:
    """Hyperbolic translation along the x-axis; requires -1 < t < 1."""
    t = as_scalar(t)
    if not (-ONE < t < ONE):
        raise InputError("boost parameter must lie in (-1, 1)")
    den = ONE - t * t
    ch, sh = (ONE + t * t) / den, (t + t) / den
    x, y = p.v
    w = sh * x + ch
    return KPoint(Vec(((ch * x + sh) / w, y / w)))


# ---------------------------------------------------------------------------
# refutation of the parallel postulate


def euclid_counterexample_config():
    """Points a, b, c, d, t with d inside both AT and BC."""
    h, q = Fraction(1, 2), Fraction(1, 4)
    return kp(0, 0), kp(0, h), kp(h, 0), kp(q, q), kp(h, h)


@dataclass(frozen=True)
class ForcedY:
    x: KPoint
    b_prime: Vec
    k1: Scalar
    y: Vec
    norm2: Scalar
    on_ray_ac: bool
    t_between: bool

    @property
    def outside(self) -> bool:
        return self.norm2 >= ONE

    def as_dict(self) -> dict:
        return {
            "x": str(self.x),
            "b_prime": str(self.b_prime),
            "k1": str(self.k1),
            "y": str(self.y),
            "y_norm2": str(self.norm2),
        }


def euclid_forced_y(x: KPoint) -> ForcedY:
    """Follow the refutation for a point x beyond b on ray ab.

    With b' = x + a - b the ratio k1 of b' on ax is at most 1/2, and the only
    candidate y on ray ac with t between x and y sits at ratio 1/k1 from a,
    hence on or outside the unit circle.
    """
    a, b, c, _, t = euclid_counterexample_config()
    if x == b:
        raise InputError("x = b is degenerate")
    if not bet_k(a, b, x):
        raise InputError("x must lie on ray ab beyond b")
    b_prime = x.v + a.v - b.v
    k1 = cart.bet_ratio(a.v, b_prime, x.v)
    if not cart.bet(a.v, b_prime, x.v) or k1 > Scalar(Fraction(1, 2)):
        raise AssertionError(f"ratio bound violated for x={x}")
    d_prime = a.v + k1 * (t.v - a.v)
    x_back, y = cart.euclid_witnesses(a.v, b_prime, c.v, d_prime, t.v)
    if x_back != x.v:
        raise AssertionError("reconstructed x differs")
    return ForcedY(
        x=x,
        b_prime=b_prime,
        k1=k1,
        y=y,
        norm2=y.norm2(),
        on_ray_ac=cart.bet(a.v, c.v, y),
        t_between=cart.bet(x.v, t.v, y),
    )


def proclus_instance(x: KPoint):
    """Proclus tuple (A, B, C, D, P, Q) built from the configuration and x.

    AB is the chord through b and t, CD the chord through a and c; both are
    parallel to the x-axis.  P = t lies on AB and Q = x does not; line PQ can
    only meet CD at the forced point y of :func:`euclid_forced_y`.
    """
    a, b, c, _, t = euclid_counterexample_config()
    return b, t, a, c, t, x
