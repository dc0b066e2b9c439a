"""Finite relational structures with explicit betweenness and congruence.

Text format (UTF-8, ``#`` starts a comment)::

    points <k>
    bet <i> <j> <l>
    cong <i> <j> <l> <m>

The ``points`` header comes first and appears once; the remaining lines may
come in any order.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import FrozenSet, Tuple

from .errors import InputError, ParseError

Triple = Tuple[int, int, int]
Quad = Tuple[int, int, int, int]


@dataclass(frozen=True)
class FiniteModel:
    size: int
    bet_triples: FrozenSet[Triple] = field(default_factory=frozenset)
    cong_quads: FrozenSet[Quad] = field(default_factory=frozenset)
    name: str = field(default="", compare=False)

    def __post_init__(self):
        if self.size < 1:
            raise InputError("a model needs at least one point")
        object.__setattr__(self, "bet_triples", frozenset(map(tuple, self.bet_triples)))
        object.__setattr__(self, "cong_quads", frozenset(map(tuple, self.cong_quads)))
        for t in self.bet_triples:
            self._check(t, 3)
        for q in self.cong_quads:
            self._check(q, 4)

    def _check(self, tup, arity):
        if len(tup) != arity or any(not 0 <= i < self.size for i in tup):
            raise InputError(f"tuple {tup} out of range for {self.size} points")

    @property
    def points(self) -> range:
        return range(self.size)

    def bet(self, a: int, b: int, c: int) -> bool:
        return (a, b, c) in self.bet_triples

    def cong(self, a: int, b: int, c: int, d: int) -> bool:
        return (a, b, c, d) in self.cong_quads


def parse_model(text: str, name: str = "") -> FiniteModel:
    size = None
    bets, congs = set(), set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, *rest = line.split()
        if not all(tok.isascii() and tok.isdigit() for tok in rest):
            raise ParseError(f"indices must be plain decimal numbers: {line!r}", lineno)
        nums = [int(tok) for tok in rest]
        if head == "points":
            if size is not None:
                raise ParseError("duplicate 'points' header", lineno)
            if len(nums) != 1 or nums[0] < 1:
                raise ParseError("expected 'points <k>' with k >= 1", lineno)
            size = nums[0]
            continue
        if size is None:
            raise ParseError("'points' header must come first", lineno)
        if head == "bet":
            arity, target = 3, bets
        elif head == "cong":
            arity, target = 4, congs
        else:
            raise ParseError(f"unknown directive {head!r}", lineno)
        if len(nums) != arity:
            raise ParseError(f"'{head}' expects {arity} indices, got {len(nums)}", lineno)
        bad = [i for i in nums if i >= size]
        if bad:
            raise ParseError(f"index {bad[0]} out of range for {size} points", lineno)
        target.add(tuple(nums))
    if size is None:
        raise ParseError("missing 'points' header")
    return FiniteModel(size, frozenset(bets), frozenset(congs), name=name)


def serialize_model(m: FiniteModel) -> str:
    lines = [f"points {m.size}"]
    lines += ["bet " + " ".join(map(str, t)) for t in sorted(m.bet_triples)]
    lines += ["cong " + " ".join(map(str, q)) for q in sorted(m.cong_quads)]
    return "\n".join(lines) + "\n"


def load_model(path) -> FiniteModel:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read model file {path}: {exc.strerror}") from None
    return parse_model(text, name=path.stem)


def one_point_model() -> FiniteModel:
    return FiniteModel(1, frozenset({(0, 0, 0)}), frozenset({(0, 0, 0, 0)}), name="one_point")


def two_point_model() -> FiniteModel:
    """Two points with only degenerate betweenness and congruence of equal segments."""
    bets = {(a, b, c) for a in range(2) for b in range(2) for c in range(2) if a == b or b == c}
    congs = {
        (a, b, c, d)
        for a in range(2)
        for b in range(2)
        for c in range(2)
        for d in range(2)
        if (a == b) == (c == d)
    }
    return FiniteModel(2, frozenset(bets), frozenset(congs), name="two_point")


def check_exhaustive(m: FiniteModel, axiom: str):
    """Check one axiom on every tuple of the model; see :mod:`tarski_models.axioms`."""
    from .axioms import exhaustive_check
    from .bindings import finite_binding

    return exhaustive_check(axiom, finite_binding(m))
