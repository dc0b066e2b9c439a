"""Exact arithmetic in an ordered field closed under square roots.

Every value lives in ``L(G_1, ..., G_k)`` where ``L`` is the field generated
over Q by the square roots of all primes and each ``G_i = sqrt(e_i)`` is a
nested radical whose radicand ``e_i`` is not a square in
``L(G_1, ..., G_{i-1})``.  Generators are appended lazily by
:func:`sqrt_nonneg` and never removed, so the internal form of a value is
canonical and equality is a structural comparison.

Internal ("raw") forms:

* ``Fraction`` for rationals;
* :class:`_MQ`, a sorted tuple of ``(m, c)`` pairs meaning ``sum c*sqrt(m)``
  over squarefree ``m`` with at least one ``m > 1``;
* :class:`_Ext` ``(level, u, v)`` meaning ``u + v*G_level`` with ``v != 0``
  and ``u``, ``v`` of strictly lower level.

Signs are decided exactly by repeated squaring.  A floating point interval
evaluation is tried first and only trusted when it excludes zero.
"""
from __future__ import annotations

import ast
import math
import threading
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

from sympy import factorint

from .errors import DomainError, InputError, ParseError

__all__ = [
    "Scalar",
    "from_rational",
    "inv",
    "sqrt_nonneg",
    "sign",
    "cmp",
    "parse_scalar",
    "as_scalar",
    "ZERO",
    "ONE",
]


class _MQ(tuple):
    __slots__ = ()


class _Ext(NamedTuple):
    level: int
    u: object
    v: object


_ZERO = Fraction(0)
_ONE = Fraction(1)
_TWO = Fraction(2)
_HALF = Fraction(1, 2)

# generator i (1-based) has radicand _RADICANDS[i - 1]
_RADICANDS: list = []
_RADICAND_LEVEL: dict = {}
_LOCK = threading.RLock()


def _level(x) -> int:
    return x.level if type(x) is _Ext else 0


def _is_zero(x) -> bool:
    return type(x) is Fraction and x == 0


def _ext(level, u, v):
    if _is_zero(v):
        return u
    return _Ext(level, u, v)


# ---------------------------------------------------------------------------
# base field L: sums of rational multiples of sqrt(m), m squarefree


@lru_cache(maxsize=None)
def _primes_of(m: int) -> tuple:
    return tuple(sorted(factorint(m)))


@lru_cache(maxsize=65536)
def _squarefree_split(n: int) -> tuple:
    """Return ``(s, m)`` with ``n == s*s*m`` and ``m`` squarefree."""
    r = math.isqrt(n)
    if r * r == n:
        return r, 1
    s, m = 1, 1
    for p, e in factorint(n).items():
        s *= p ** (e // 2)
        if e % 2:
            m *= p
    return s, m


def _terms(x) -> dict:
    if type(x) is Fraction:
        return {1: x} if x else {}
    return dict(x)


def _from_terms(d: dict):
    items = sorted((m, c) for m, c in d.items() if c)
    if not items:
        return _ZERO
    if len(items) == 1 and items[0][0] == 1:
        return items[0][1]
    return _MQ(items)


def _support(x) -> tuple:
    if type(x) is Fraction:
        return ()
    ps = set()
    for m, _ in x:
        ps.update(_primes_of(m))
    return tuple(sorted(ps))


def _split(x, p: int):
    """Write a base element as ``u + v*sqrt(p)`` with u, v free of p."""
    u, v = {}, {}
    for m, c in _terms(x).items():
        if m % p == 0:
            v[m // p] = c
        else:
            u[m] = c
    return _from_terms(u), _from_terms(v)


def _rat_sqrt(q: Fraction):
    """Square root of a positive rational as a base element."""
    s, m = _squarefree_split(q.numerator * q.denominator)
    c = Fraction(s, q.denominator)
    return c if m == 1 else _MQ(((m, c),))


# ---------------------------------------------------------------------------
# field operations on raw forms


def _scale(x, q: Fraction):
    if not q:
        return _ZERO
    t = type(x)
    if t is Fraction:
        return x * q
    if t is _MQ:
        return _MQ((m, c * q) for m, c in x)
    return _Ext(x.level, _scale(x.u, q), _scale(x.v, q))


def _neg(x):
    t = type(x)
    if t is Fraction:
        return -x
    if t is _MQ:
        return _MQ((m, -c) for m, c in x)
    return _Ext(x.level, _neg(x.u), _neg(x.v))


def _add(x, y):
    if type(x) is Fraction and type(y) is Fraction:
        return x + y
    lx, ly = _level(x), _level(y)
    if lx == ly == 0:
        d = _terms(x)
        for m, c in _terms(y).items():
            d[m] = d.get(m, _ZERO) + c
        return _from_terms(d)
    if lx == ly:
        return _ext(lx, _add(x.u, y.u), _add(x.v, y.v))
    if lx > ly:
        return _Ext(lx, _add(x.u, y), x.v)
    return _Ext(ly, _add(x, y.u), y.v)


def _sub(x, y):
    return _add(x, _neg(y))


def _mul(x, y):
    tx, ty = type(x), type(y)
    if tx is Fraction:
        return x * y if ty is Fraction else _scale(y, x)
    if ty is Fraction:
        return _scale(x, y)
    lx, ly = _level(x), _level(y)
    if lx == ly == 0:
        d: dict = {}
        for m1, c1 in x:
            for m2, c2 in y:
                g = math.gcd(m1, m2)
                key = (m1 // g) * (m2 // g)
                d[key] = d.get(key, _ZERO) + c1 * c2 * g
        return _from_terms(d)
    if lx == ly:
        e = _RADICANDS[lx - 1]
        u = _add(_mul(x.u, y.u), _mul(_mul(x.v, y.v), e))
        v = _add(_mul(x.u, y.v), _mul(x.v, y.u))
        return _ext(lx, u, v)
    if lx > ly:
        return _ext(lx, _mul(x.u, y), _mul(x.v, y))
    return _ext(ly, _mul(x, y.u), _mul(x, y.v))


def _inv(x):
    t = type(x)
    if t is Fraction:
        if not x:
            raise ZeroDivisionError("inverse of zero")
        return 1 / x
    if t is _Ext:
        e = _RADICANDS[x.level - 1]
        norm = _sub(_mul(x.u, x.u), _mul(_mul(x.v, x.v), e))
        k = _inv(norm)
        return _ext(x.level, _mul(x.u, k), _neg(_mul(x.v, k)))
    p = _support(x)[-1]
    u, v = _split(x, p)
    norm = _sub(_mul(u, u), _scale(_mul(v, v), Fraction(p)))
    k = _inv(norm)
    conj = _sub(u, _mul(v, _MQ(((p, _ONE),))))
    return _mul(conj, k)


# ---------------------------------------------------------------------------
# sign determination


def _widen(lo: float, hi: float):
    return math.nextafter(lo, -math.inf), math.nextafter(hi, math.inf)


def _imul(a, b):
    ps = (a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1])
    return _widen(min(ps), max(ps))


def _isqrt(a):
    lo = max(a[0], 0.0)
    return _widen(math.sqrt(lo), math.sqrt(a[1]))


@lru_cache(maxsize=65536)
def _interval(x):
    """Float interval guaranteed to contain the value, or None on overflow."""
    try:
        t = type(x)
        if t is Fraction:
            f = float(x)
            return _widen(f, f)
        if t is _MQ:
            lo = hi = 0.0
            for m, c in x:
                f = float(c)
                term = _widen(f, f)
                if m != 1:
                    fm = float(m)
                    term = _imul(term, _isqrt(_widen(fm, fm)))
                lo, hi = _widen(lo + term[0], hi + term[1])
        else:
            g = _isqrt(_interval(_RADICANDS[x.level - 1]))
            a, b = _interval(x.u), _imul(_interval(x.v), g)
            lo, hi = _widen(a[0] + b[0], a[1] + b[1])
    except (OverflowError, TypeError):
        return None
    if not (math.isfinite(lo) and math.isfinite(hi)):
        return None
    return lo, hi


def _sign_pair(u, v, e) -> int:
    # sign of u + v*sqrt(e) for e > 0
    su, sv = _sign(u), _sign(v)
    if sv == 0 or su == sv:
        return su
    if su == 0:
        return sv
    t = _sign(_sub(_mul(u, u), _mul(_mul(v, v), e)))
    if t > 0:
        return su
    if t < 0:
        return sv
    return 0


@lru_cache(maxsize=65536)
def _sign(x) -> int:
    t = type(x)
    if t is Fraction:
        return (x > 0) - (x < 0)
    box = _interval(x)
    if box is not None:
        if box[0] > 0:
            return 1
        if box[1] < 0:
            return -1
    if t is _Ext:
        return _sign_pair(x.u, x.v, _RADICANDS[x.level - 1])
    p = _support(x)[-1]
    u, v = _split(x, p)
    return _sign_pair(u, v, Fraction(p))


def _abs(x):
    return _neg(x) if _sign(x) < 0 else x


# ---------------------------------------------------------------------------
# square roots


def _uptorat(x, primes: tuple):
    """Find ``(z, r)`` with z in Q(sqrt primes), rational r > 0, z*z == r*x."""
    if type(x) is Fraction:
        return (_ONE, 1 / x) if x > 0 else None
    if not primes:
        return None
    p, rest = primes[-1], primes[:-1]
    u, v = _split(x, p)
    if _is_zero(v):
        return _uptorat(u, rest)
    fp = Fraction(p)
    n = _genuine_sqrt(_sub(_mul(u, u), _scale(_mul(v, v), fp)), rest)
    if n is None:
        return None
    for cand in (_add(u, n), _sub(u, n)):
        cand = _scale(cand, _HALF)
        if _is_zero(cand):
            continue
        found = _uptorat(cand, rest)
        if found is not None:
            a, r = found
            b = _mul(_scale(v, r / 2), _inv(a))
            return _add(a, _mul(b, _MQ(((p, _ONE),)))), r
    return None


def _genuine_sqrt(x, primes: tuple):
    if _is_zero(x):
        return _ZERO
    if _sign(x) < 0:
        return None
    found = _uptorat(x, primes)
    if found is None:
        return None
    z, r = found
    _, m = _squarefree_split(r.numerator * r.denominator)
    if not set(_primes_of(m)) <= set(primes):
        return None
    return _mul(z, _scale(_rat_sqrt(r), 1 / r))


def _sqrt_base(x):
    if type(x) is Fraction:
        return _rat_sqrt(x)
    found = _uptorat(x, _support(x))
    if found is None:
        return None
    z, r = found
    return _mul(z, _scale(_rat_sqrt(r), 1 / r))


@lru_cache(maxsize=65536)
def _sqrt_in(x, top: int):
    """A square root of ``x`` inside L(G_1..G_top), or None if there is none."""
    if _is_zero(x):
        return _ZERO
    if _sign(x) < 0:
        return None
    if top == 0:
        return _sqrt_base(x)
    e = _RADICANDS[top - 1]
    if _level(x) == top:
        u, v = x.u, x.v
        n = _sqrt_in(_sub(_mul(u, u), _mul(_mul(v, v), e)), top - 1)
        if n is None:
            return None
        for cand in (_add(u, n), _sub(u, n)):
            cand = _scale(cand, _HALF)
            if _is_zero(cand):
                continue
            a = _sqrt_in(cand, top - 1)
            if a is not None:
                b = _mul(_scale(v, _HALF), _inv(a))
                return _ext(top, a, b)
        return None
    a = _sqrt_in(x, top - 1)
    if a is not None:
        return a
    b = _sqrt_in(_mul(x, _inv(e)), top - 1)
    if b is not None:
        return _Ext(top, _ZERO, b)
    return None


def _sqrt(x):
    if _is_zero(x):
        return _ZERO
    if _sign(x) < 0:
        raise DomainError("square root of a negative number")
    with _LOCK:
        level = _RADICAND_LEVEL.get(x)
        if level is not None:
            return _Ext(level, _ZERO, _ONE)
        y = _sqrt_in(x, len(_RADICANDS))
        if y is None:
            _RADICANDS.append(x)
            level = len(_RADICANDS)
            _RADICAND_LEVEL[x] = level
            return _Ext(level, _ZERO, _ONE)
    return _abs(y)


# ---------------------------------------------------------------------------
# rendering


def _frac_str(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _render(x) -> str:
    t = type(x)
    if t is Fraction:
        return _frac_str(x)
    if t is _MQ:
        parts = []
        for m, c in x:
            if m == 1:
                parts.append(_frac_str(c))
            elif c == 1:
                parts.append(f"sqrt({m})")
            elif c == -1:
                parts.append(f"-sqrt({m})")
            else:
                parts.append(f"{_frac_str(c)}*sqrt({m})")
        return "+".join(parts).replace("+-", "-")
    rad = f"sqrt({_render(_RADICANDS[x.level - 1])})"
    if x.v == 1:
        tail = rad
    elif x.v == -1:
        tail = "-" + rad
    elif type(x.v) is Fraction:
        tail = f"{_frac_str(x.v)}*{rad}"
    else:
        tail = f"({_render(x.v)})*{rad}"
    if _is_zero(x.u):
        return tail
    return f"{_render(x.u)}+{tail}".replace("+-", "-")


# ---------------------------------------------------------------------------
# public type


def _coerce(value):
    if isinstance(value, Scalar):
        return value._raw
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    return None


class Scalar:
    """An exact real number; immutable and hashable."""

    __slots__ = ("_raw",)

    def __init__(self, value=0):
        if isinstance(value, str):
            raw = parse_scalar(value)._raw
        else:
            raw = _coerce(value)
            if raw is None:
                raise TypeError(f"cannot make a Scalar from {type(value).__name__}")
        object.__setattr__(self, "_raw", raw)

    @classmethod
    def _wrap(cls, raw) -> "Scalar":
        obj = object.__new__(cls)
        object.__setattr__(obj, "_raw", raw)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    def __reduce__(self):
        return (parse_scalar, (str(self),))

    # arithmetic

    def __add__(self, other):
        o = _coerce(other)
        return NotImplemented if o is None else Scalar._wrap(_add(self._raw, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = _coerce(other)
        return NotImplemented if o is None else Scalar._wrap(_sub(self._raw, o))

    def __rsub__(self, other):
        o = _coerce(other)
        return NotImplemented if o is None else Scalar._wrap(_sub(o, self._raw))

    def __mul__(self, other):
        o = _coerce(other)
        return NotImplemented if o is None else Scalar._wrap(_mul(self._raw, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = _coerce(other)
        return NotImplemented if o is None else Scalar._wrap(_mul(self._raw, _inv(o)))

    def __rtruediv__(self, other):
        o = _coerce(other)
        return NotImplemented if o is None else Scalar._wrap(_mul(o, _inv(self._raw)))

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        base = self if n >= 0 else self.inv()
        out = Scalar._wrap(_ONE)
        for _ in range(abs(n)):
            out = out * base
        return out

    def __neg__(self):
        return Scalar._wrap(_neg(self._raw))

    def __pos__(self):
        return self

    def __abs__(self):
        return Scalar._wrap(_abs(self._raw))

    def inv(self) -> "Scalar":
        return Scalar._wrap(_inv(self._raw))

    def sqrt(self) -> "Scalar":
        return Scalar._wrap(_sqrt(self._raw))

    # comparison

    def sign(self) -> int:
        return _sign(self._raw)

    def _cmp(self, other):
        o = _coerce(other)
        if o is None:
            return None
        return _sign(_sub(self._raw, o))

    def __eq__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return type(o) is type(self._raw) and o == self._raw

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __lt__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is None else c < 0

    def __le__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is None else c <= 0

    def __gt__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is None else c > 0

    def __ge__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is None else c >= 0

    def __hash__(self):
        return hash(self._raw)

    def __bool__(self):
        return not _is_zero(self._raw)

    # inspection

    def is_rational(self) -> bool:
        return type(self._raw) is Fraction

    def as_fraction(self) -> Fraction:
        if type(self._raw) is not Fraction:
            raise ValueError(f"{self} is irrational")
        return self._raw

    def depth(self) -> int:
        """Number of nested generators this value is expressed over."""
        return _level(self._raw)

    def __float__(self):
        box = _interval(self._raw)
        if box is None:
            return math.inf if self.sign() > 0 else -math.inf
        return (box[0] + box[1]) / 2

    def __str__(self):
        return _render(self._raw)

    def __repr__(self):
        return f"Scalar('{self}')"


ZERO = Scalar._wrap(_ZERO)
ONE = Scalar._wrap(_ONE)


def as_scalar(value) -> Scalar:
    if isinstance(value, Scalar):
        return value
    if isinstance(value, str):
        return parse_scalar(value)
    return Scalar(value)


def from_rational(num: int, den: int = 1) -> Scalar:
    if den == 0:
        raise InputError("zero denominator")
    return Scalar._wrap(Fraction(num, den))


def inv(x) -> Scalar:
    return as_scalar(x).inv()


def sqrt_nonneg(x) -> Scalar:
    """Non-negative square root; raises DomainError for negative input."""
    return as_scalar(x).sqrt()


def sign(x) -> int:
    return as_scalar(x).sign()


def cmp(x, y) -> int:
    """-1, 0 or 1 as x is less than, equal to or greater than y."""
    return _sign(_sub(as_scalar(x)._raw, as_scalar(y)._raw))


_BINOPS = {ast.Add: _add, ast.Sub: _sub, ast.Mult: _mul}


def _eval_node(node):
    if isinstance(node, ast.Expression):
        return _eval_node(node.body)
    if isinstance(node, ast.Constant) and type(node.value) is int:
        return Fraction(node.value)
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        inner = _eval_node(node.operand)
        return _neg(inner) if isinstance(node.op, ast.USub) else inner
    if isinstance(node, ast.BinOp):
        a, b = _eval_node(node.left), _eval_node(node.right)
        if isinstance(node.op, ast.Div):
            return _mul(a, _inv(b))
        op = _BINOPS.get(type(node.op))
        if op is not None:
            return op(a, b)
    if (
        isinstance(node, ast.Call)
        and isinstance(node.func, ast.Name)
        and node.func.id == "sqrt"
        and len(node.args) == 1
        and not node.keywords
    ):
        return _sqrt(_eval_node(node.args[0]))
    raise ParseError(f"unsupported scalar syntax: {ast.dump(node)[:60]}")


def parse_scalar(text: str) -> Scalar:
    """Parse ``"p/q"``, integers, decimals, or rendered radical expressions."""
    s = text.strip()
    if not s:
        raise ParseError("empty scalar")
    try:
        return Scalar._wrap(Fraction(s))
    except (ValueError, ZeroDivisionError) as exc:
        if isinstance(exc, ZeroDivisionError):
            raise ParseError(f"zero denominator in {s!r}") from None
    try:
        tree = ast.parse(s, mode="eval")
    except SyntaxError:
        raise ParseError(f"not a scalar: {s!r}") from None
    try:
        return Scalar._wrap(_eval_node(tree))
    except ZeroDivisionError:
        raise ParseError(f"division by zero in {s!r}") from None
