"""Cartesian model of Tarski geometry over the exact scalar field.

Points are coordinate vectors.  Congruence compares squared Euclidean norms,
betweenness asks for a ratio ``k`` in ``[0, 1]`` with ``b - a = k (c - a)``.
The witness constructions return the existential points of the axioms
together with the ratios that certify them.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .errors import InputError
from .scalar import ONE, ZERO, Scalar, as_scalar, sqrt_nonneg

Ratio = Scalar
HALF = Scalar(Fraction(1, 2))


class Vec:
    """Immutable coordinate vector of Scalars."""

    __slots__ = ("coords",)

    def __init__(self, coords: Iterable):
        cs = tuple(as_scalar(c) for c in coords)
        if not cs:
            raise InputError("a vector needs at least one coordinate")
        object.__setattr__(self, "coords", cs)

    def __setattr__(self, name, value):
        raise AttributeError("Vec is immutable")

    @classmethod
    def parse(cls, text: str, dim: Optional[int] = None) -> "Vec":
        """Parse a comma-separated literal such as ``"1/2,3/4"``."""
        parts = [p for p in text.split(",")]
        if any(not p.strip() for p in parts):
            raise InputError(f"malformed point literal {text!r}")
        v = cls(parts)
        if dim is not None and v.dim != dim:
            raise InputError(f"point {text!r} has dimension {v.dim}, expected {dim}")
        return v

    @classmethod
    def zero(cls, dim: int) -> "Vec":
        return cls([ZERO] * dim)

    @classmethod
    def basis(cls, dim: int, i: int) -> "Vec":
        return cls([ONE if j == i else ZERO for j in range(dim)])

    @property
    def dim(self) -> int:
        return len(self.coords)

    def __len__(self):
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def _same_dim(self, other: "Vec"):
        if not isinstance(other, Vec):
            raise TypeError(f"expected Vec, got {type(other).__name__}")
        if other.dim != self.dim:
            raise InputError(f"dimension mismatch: {self.dim} vs {other.dim}")

    def __add__(self, other: "Vec") -> "Vec":
        self._same_dim(other)
        return Vec(a + b for a, b in zip(self.coords, other.coords))

    def __sub__(self, other: "Vec") -> "Vec":
        self._same_dim(other)
        return Vec(a - b for a, b in zip(self.coords, other.coords))

    def __neg__(self) -> "Vec":
        return Vec(-a for a in self.coords)

    def __mul__(self, k) -> "Vec":
        if isinstance(k, Vec):
            return NotImplemented
        k = as_scalar(k)
        return Vec(k * a for a in self.coords)

    __rmul__ = __mul__

    def dot(self, other: "Vec") -> Scalar:
        self._same_dim(other)
        total = ZERO
        for a, b in zip(self.coords, other.coords):
            total = total + a * b
        return total

    def norm2(self) -> Scalar:
        return self.dot(self)

    def is_zero(self) -> bool:
        return all(not c for c in self.coords)

    def __eq__(self, other):
        if not isinstance(other, Vec):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __str__(self):
        return ",".join(str(c) for c in self.coords)

    def __repr__(self):
        return f"Vec({str(self)!r})"


def vec(*coords) -> Vec:
    return Vec(coords)


def _check_dims(*vs: Vec):
    d = vs[0].dim
    for v in vs[1:]:
        if v.dim != d:
            raise InputError(f"dimension mismatch: {d} vs {v.dim}")


def _require_2d(*vs: Vec):
    for v in vs:
        if v.dim != 2:
            raise InputError(f"expected a planar point, got dimension {v.dim}")


# ---------------------------------------------------------------------------
# predicates


def cong(a: Vec, b: Vec, c: Vec, d: Vec) -> bool:
    _check_dims(a, b, c, d)
    return (b - a).norm2() == (d - c).norm2()


def ratio(v1: Vec, v2: Vec) -> Ratio:
    """``v1[i] / v2[i]`` for the first index with ``v2[i] != 0``, else 0."""
    _check_dims(v1, v2)
    for x, y in zip(v1.coords, v2.coords):
        if y:
            return x / y
    return ZERO


def bet_ratio(a: Vec, b: Vec, c: Vec) -> Ratio:
    return ratio(b - a, c - a)


def bet_strict(a: Vec, b: Vec, c: Vec) -> bool:
    r = bet_ratio(a, b, c)
    return ZERO < r < ONE and b - a == r * (c - a)


def bet_degenerate(a: Vec, b: Vec, c: Vec) -> bool:
    _check_dims(a, b, c)
    return a == b or b == c


def bet(a: Vec, b: Vec, c: Vec) -> bool:
    return bet_degenerate(a, b, c) or bet_strict(a, b, c)


def col(a: Vec, b: Vec, c: Vec) -> bool:
    return bet(a, b, c) or bet(b, c, a) or bet(c, a, b)


def col_2d(a: Vec, b: Vec, c: Vec) -> bool:
    _require_2d(a, b, c)
    return (a[0] - b[0]) * (b[1] - c[1]) == (a[1] - b[1]) * (b[0] - c[0])


def _cross(u: Vec, v: Vec) -> Scalar:
    return u[0] * v[1] - u[1] * v[0]


def par_2d(a: Vec, b: Vec, c: Vec, d: Vec) -> bool:
    """Lines AB and CD are parallel or coincide."""
    _require_2d(a, b, c, d)
    if a == b or c == d:
        raise InputError("a line needs two distinct points")
    return not _cross(b - a, d - c)


def line_intersection_2d(a: Vec, b: Vec, c: Vec, d: Vec) -> Optional[Vec]:
    """Common point of lines AB and CD.

    Returns None for distinct parallel lines and ``c`` when the lines coincide.
    """
    _require_2d(a, b, c, d)
    if a == b or c == d:
        raise InputError("a line needs two distinct points")
    u, w = b - a, d - c
    den = _cross(u, w)
    if not den:
        if not _cross(u, c - a):
            return c
        return None
    s = _cross(c - a, w) / den
    return a + s * u


def midpoint(p: Vec, q: Vec) -> Vec:
    _check_dims(p, q)
    return HALF * (p + q)


def cong_perp_check(a: Vec, p: Vec, q: Vec) -> bool:
    """P, the midpoint M of PQ and A form a right angle at M."""
    _require_2d(a, p, q)
    m = midpoint(p, q)
    return (p[0] - m[0]) * (m[0] - a[0]) + (p[1] - m[1]) * (m[1] - a[1]) == 0


# ---------------------------------------------------------------------------
# witness constructions


def seg_construct_witness(a: Vec, b: Vec, c: Vec, d: Vec) -> Vec:
    """Point E with bet(a, b, E) and cong(b, E, c, d)."""
    _check_dims(a, b, c, d)
    target = (d - c).norm2()
    if a == b:
        return b + sqrt_nonneg(target) * Vec.basis(a.dim, 0)
    u = b - a
    return b + sqrt_nonneg(target / u.norm2()) * u


def transitivity_ratio(k1, k2) -> Ratio:
    """Ratio of B on AC given ``B - A = k1 (D - A)`` and ``C - B = k2 (D - B)``."""
    k1, k2 = as_scalar(k1), as_scalar(k2)
    if not (ZERO < k1 < ONE and ZERO < k2 < ONE):
        raise InputError("ratios must lie strictly between 0 and 1")
    return k1 / (k1 + k2 - k1 * k2)


def _pasch_ratios(k1: Scalar, k2: Scalar):
    den = k1 + k2 - k1 * k2
    return k1 * (ONE - k2) / den, k2 * (ONE - k1) / den


def pasch_witness(a: Vec, b: Vec, c: Vec, p: Vec, q: Vec):
    """Inner Pasch point for a proper triangle.

    Requires P strictly inside AC, Q strictly inside BC and A, B, C not
    collinear.  Returns ``(X, k3, k4)`` with ``X = P + k3 (B - P)`` and
    ``X = Q + k4 (A - Q)``.
    """
    _check_dims(a, b, c, p, q)
    if not (bet_strict(a, p, c) and bet_strict(b, q, c)):
        raise InputError("P and Q must lie strictly inside AC and BC")
    if col(a, b, c):
        raise InputError("A, B, C must not be collinear")
    k3, k4 = _pasch_ratios(bet_ratio(a, p, c), bet_ratio(b, q, c))
    x = p + k3 * (b - p)
    if x != q + k4 * (a - q):
        raise AssertionError("Pasch construction is inconsistent")
    return x, k3, k4


def pasch_point(a: Vec, b: Vec, c: Vec, p: Vec, q: Vec) -> Vec:
    """Pasch point allowing every degenerate configuration of bet(A,P,C), bet(B,Q,C)."""
    _check_dims(a, b, c, p, q)
    if not (bet(a, p, c) and bet(b, q, c)):
        raise InputError("expected bet(A, P, C) and bet(B, Q, C)")
    k1, k2 = bet_ratio(a, p, c), bet_ratio(b, q, c)
    if not (k1 or k2):
        # P = A and Q = B
        return a
    k3, _ = _pasch_ratios(k1, k2)
    return p + k3 * (b - p)


def euclid_witnesses(a: Vec, b: Vec, c: Vec, d: Vec, t: Vec):
    """Points X on ray AB and Y on ray AC with T between them.

    Requires D strictly between A and T and bet(B, D, C).
    """
    _check_dims(a, b, c, d, t)
    if not bet_strict(a, d, t):
        raise InputError("D must lie strictly between A and T")
    if not bet(b, d, c):
        raise InputError("D must lie between B and C")
    scale = ONE / bet_ratio(a, d, t)
    return a + scale * (b - a), a + scale * (c - a)


def euclid_point_pair(a: Vec, b: Vec, c: Vec, d: Vec, t: Vec):
    """Witnesses for Euclid's axiom including the case D = T."""
    if d == t:
        return b, c
    return euclid_witnesses(a, b, c, d, t)


def lower_dim_witness(dim: int = 2):
    if dim < 2:
        raise InputError("no three non-collinear points exist below dimension 2")
    return Vec.zero(dim), Vec.basis(dim, 1), Vec.basis(dim, 0)


# ---------------------------------------------------------------------------
# isometries


def rational_rotation(t):
    """Rotation matrix with rational entries from the half-angle tangent t."""
    t = as_scalar(t)
    den = ONE + t * t
    cos, sin = (ONE - t * t) / den, (t + t) / den
    return ((cos, -sin), (sin, cos))


def reflection(t):
    """Reflection matrix across the line through the origin at half-angle tangent t."""
    (cos, _), (sin, _) = rational_rotation(t)
    return ((cos, sin), (sin, -cos))


def apply_isometry(rot, shift: Vec, p: Vec) -> Vec:
    """``rot @ p + shift``; rot acts on the first two coordinates only."""
    _check_dims(shift, p)
    if p.dim < 2:
        raise InputError("rotations need at least two coordinates")
    (m00, m01), (m10, m11) = rot
    x, y = p[0], p[1]
    moved = Vec((m00 * x + m01 * y, m10 * x + m11 * y) + p.coords[2:])
    return moved + shift


# ---------------------------------------------------------------------------
# the upper-dimension counterexample family

# exact (cos, sin) of 2*pi/n for the n handled below
def _root_of_unity(n: int):
    s5 = sqrt_nonneg(5)
    table = {
        4: (ZERO, ONE),
        5: ((s5 - 1) / 4, sqrt_nonneg(10 + 2 * s5) / 4),
        6: (HALF, sqrt_nonneg(3) / 2),
        8: (sqrt_nonneg(2) / 2, sqrt_nonneg(2) / 2),
    }
    return table[n]


A9N_SUPPORTED = (4, 5, 6, 8)


def a9n_counterexample(n: int):
    """Points P_1..P_n on a unit circle and A, B, C off its plane in dimension n.

    Every P_i is equidistant from each of A, B, C, yet A, B, C are not
    collinear, so the n-dimensional upper-dimension statement fails.
    Returns ``(points, A, B, C)``.
    """
    if n not in A9N_SUPPORTED:
        raise InputError(f"unsupported n={n}; choose one of {A9N_SUPPORTED}")
    cos, sin = _root_of_unity(n)
    rot = ((cos, -sin), (sin, cos))
    start = Vec.basis(n, 0)
    points = []
    cur = start
    for _ in range(n):
        cur = apply_isometry(rot, Vec.zero(n), cur)
        points.append(cur)
    if points[-1] != start:
        raise AssertionError("rotation does not close up")
    a = Vec.zero(n)
    return points, a, Vec.basis(n, 2), Vec.basis(n, 3)


def a9n_premises_hold(points: Sequence[Vec], a: Vec, b: Vec, c: Vec) -> bool:
    distinct = len(set(points)) == len(points)
    first = points[0]
    return distinct and all(
        cong(x, first, x, p) for x in (a, b, c) for p in points[1:]
    )
