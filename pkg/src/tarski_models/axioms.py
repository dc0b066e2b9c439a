"""Axiom statements and the engine that checks them against a model.

An axiom is a universally quantified implication ``premise => exists W.
conclusion``.  Instances are evaluated exactly.  Existential witnesses come
from the model's witness oracles (and are re-checked against the conclusion)
or, in finite models, from exhaustive search.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Dict, Optional, Sequence

from .errors import InputError, NotCheckableError
from .report import FAIL, NOT_CHECKED, PASS, UNKNOWN, Certificate, CheckReport


class Outcome(str, Enum):
    PREMISE_FALSE = "premise_false"
    CONCLUSION_TRUE = "conclusion_true"
    CONCLUSION_FALSE = "conclusion_false"


@dataclass(frozen=True)
class Axiom:
    id: str
    title: str
    statement: str
    universals: tuple
    existentials: tuple = ()
    premise: Optional[Callable] = None
    conclusion: Optional[Callable] = None
    checkable: bool = True


@dataclass(frozen=True)
class Refutation:
    """Returned by a witness oracle that proves no witness exists."""

    evidence: dict


@dataclass
class Evaluation:
    outcome: Outcome
    witness: Optional[tuple] = None
    evidence: dict = field(default_factory=dict)


@dataclass
class ModelBinding:
    """Everything the engine needs to know about one model."""

    name: str
    eq: Callable
    bet: Callable
    cong: Callable
    par: Optional[Callable] = None
    universe: Optional[Sequence] = None
    witnesses: Dict[str, Callable] = field(default_factory=dict)
    generators: Dict[str, Callable] = field(default_factory=dict)
    encode: Callable = str
    decode: Optional[Callable] = None

    @property
    def exhaustive(self) -> bool:
        return self.universe is not None

    def col(self, a, b, c) -> bool:
        return self.bet(a, b, c) or self.bet(b, c, a) or self.bet(c, a, b)

    def parallel(self, a, b, c, d) -> bool:
        if self.par is not None:
            return self.par(a, b, c, d)
        if self.universe is None:
            raise NotCheckableError(f"{self.name} has no parallelism predicate")
        if self.eq(a, b) or self.eq(c, d):
            return False
        if self.col(a, c, d) and self.col(b, c, d):
            return True
        return not any(self.col(a, b, x) and self.col(c, d, x) for x in self.universe)


def _ne(m, x, y):
    return not m.eq(x, y)


def _not_col(m, a, b, c):
    return not m.col(a, b, c)


AXIOMS: Dict[str, Axiom] = {}


def _axiom(*args, **kwargs):
    ax = Axiom(*args, **kwargs)
    AXIOMS[ax.id] = ax


_axiom(
    "A0", "Point equality decidability", "X = Y or X != Y", ("X", "Y"),
    conclusion=lambda m, x, y: m.eq(x, y) or not m.eq(x, y),
)
_axiom(
    "A1", "Symmetry", "Cong A B B A", ("A", "B"),
    conclusion=lambda m, a, b: m.cong(a, b, b, a),
)
_axiom(
    "A2", "Pseudo-transitivity", "Cong A B C D & Cong A B E F => Cong C D E F",
    ("A", "B", "C", "D", "E", "F"),
    premise=lambda m, a, b, c, d, e, f: m.cong(a, b, c, d) and m.cong(a, b, e, f),
    conclusion=lambda m, a, b, c, d, e, f: m.cong(c, d, e, f),
)
_axiom(
    "A2p", "Pseudo-transitivity (variant)", "Cong A B E F & Cong C D E F => Cong A B C D",
    ("A", "B", "C", "D", "E", "F"),
    premise=lambda m, a, b, c, d, e, f: m.cong(a, b, e, f) and m.cong(c, d, e, f),
    conclusion=lambda m, a, b, c, d, e, f: m.cong(a, b, c, d),
)
_axiom(
    "A3", "Congruence identity", "Cong A B C C => A = B", ("A", "B", "C"),
    premise=lambda m, a, b, c: m.cong(a, b, c, c),
    conclusion=lambda m, a, b, c: m.eq(a, b),
)
_axiom(
    "A4", "Segment construction", "exists E, Bet A B E & Cong B E C D",
    ("A", "B", "C", "D"), ("E",),
    conclusion=lambda m, a, b, c, d, e: m.bet(a, b, e) and m.cong(b, e, c, d),
)
_axiom(
    "A5", "Five segment",
    "Cong A B A' B' & Cong B C B' C' & Cong A D A' D' & Cong B D B' D' & "
    "Bet A B C & Bet A' B' C' & A != B => Cong C D C' D'",
    ("A", "B", "C", "D", "A'", "B'", "C'", "D'"),
    premise=lambda m, a, b, c, d, a2, b2, c2, d2: (
        _ne(m, a, b)
        and m.bet(a, b, c)
        and m.bet(a2, b2, c2)
        and m.cong(a, b, a2, b2)
        and m.cong(b, c, b2, c2)
        and m.cong(a, d, a2, d2)
        and m.cong(b, d, b2, d2)
    ),
    conclusion=lambda m, a, b, c, d, a2, b2, c2, d2: m.cong(c, d, c2, d2),
)
_axiom(
    "A6", "Betweenness identity", "Bet A B A => A = B", ("A", "B"),
    premise=lambda m, a, b: m.bet(a, b, a),
    conclusion=lambda m, a, b: m.eq(a, b),
)
_axiom(
    "A7", "Inner Pasch", "Bet A P C & Bet B Q C => exists X, Bet P X B & Bet Q X A",
    ("A", "B", "C", "P", "Q"), ("X",),
    premise=lambda m, a, b, c, p, q: m.bet(a, p, c) and m.bet(b, q, c),
    conclusion=lambda m, a, b, c, p, q, x: m.bet(p, x, b) and m.bet(q, x, a),
)
_axiom(
    "A7p", "Inner Pasch (non-degenerate)",
    "Bet A P C & Bet B Q C & A != P & P != C & B != Q & Q != C & ~Col A B C "
    "=> exists X, Bet P X B & Bet Q X A",
    ("A", "B", "C", "P", "Q"), ("X",),
    premise=lambda m, a, b, c, p, q: (
        _ne(m, a, p) and _ne(m, p, c) and _ne(m, b, q) and _ne(m, q, c)
        and m.bet(a, p, c) and m.bet(b, q, c) and _not_col(m, a, b, c)
    ),
    conclusion=lambda m, a, b, c, p, q, x: m.bet(p, x, b) and m.bet(q, x, a),
)
_axiom(
    "A8", "Lower dimension", "exists A B C, ~Bet A B C & ~Bet B C A & ~Bet C A B",
    (), ("A", "B", "C"),
    conclusion=lambda m, a, b, c: _not_col(m, a, b, c),
)
_axiom(
    "A9", "Upper dimension",
    "Cong A P A Q & Cong B P B Q & Cong C P C Q & P != Q => Col A B C",
    ("A", "B", "C", "P", "Q"),
    premise=lambda m, a, b, c, p, q: (
        _ne(m, p, q) and m.cong(a, p, a, q) and m.cong(b, p, b, q) and m.cong(c, p, c, q)
    ),
    conclusion=lambda m, a, b, c, p, q: m.col(a, b, c),
)
_axiom(
    "A9p", "Upper dimension (variant)",
    "Cong A P A Q & Cong B P B Q & Cong C P C Q & P != Q & A != B & A != C & B != C "
    "=> Col A B C",
    ("A", "B", "C", "P", "Q"),
    premise=lambda m, a, b, c, p, q: (
        _ne(m, p, q) and _ne(m, a, b) and _ne(m, a, c) and _ne(m, b, c)
        and m.cong(a, p, a, q) and m.cong(b, p, b, q) and m.cong(c, p, c, q)
    ),
    conclusion=lambda m, a, b, c, p, q: m.col(a, b, c),
)
_axiom(
    "A10", "Euclid",
    "Bet A D T & Bet B D C & A != D => exists X Y, Bet A B X & Bet A C Y & Bet X T Y",
    ("A", "B", "C", "D", "T"), ("X", "Y"),
    premise=lambda m, a, b, c, d, t: _ne(m, a, d) and m.bet(a, d, t) and m.bet(b, d, c),
    conclusion=lambda m, a, b, c, d, t, x, y: (
        m.bet(a, b, x) and m.bet(a, c, y) and m.bet(x, t, y)
    ),
)
_axiom(
    "A10p", "Proclus",
    "Par A B C D & Col A B P & ~Col A B Q => exists Y, Col C D Y & Col P Q Y",
    ("A", "B", "C", "D", "P", "Q"), ("Y",),
    premise=lambda m, a, b, c, d, p, q: (
        m.col(a, b, p) and _not_col(m, a, b, q) and m.parallel(a, b, c, d)
    ),
    conclusion=lambda m, a, b, c, d, p, q, y: m.col(c, d, y) and m.col(p, q, y),
)
_axiom(
    "A11", "Continuity", "first-order continuity schema", (), checkable=False,
)
_axiom(
    "A11p", "Continuity (variant)", "first-order continuity schema", (), checkable=False,
)
_axiom(
    "A14", "Betweenness symmetry", "Bet A B C => Bet C B A", ("A", "B", "C"),
    premise=lambda m, a, b, c: m.bet(a, b, c),
    conclusion=lambda m, a, b, c: m.bet(c, b, a),
)
_axiom(
    "A15", "Betweenness inner transitivity", "Bet A B D & Bet B C D => Bet A B C",
    ("A", "B", "C", "D"),
    premise=lambda m, a, b, c, d: m.bet(a, b, d) and m.bet(b, c, d),
    conclusion=lambda m, a, b, c, d: m.bet(a, b, c),
)

AXIOM_IDS = tuple(AXIOMS)

_ALIASES = {"A2'": "A2p", "A7'": "A7p", "A9'": "A9p", "A10'": "A10p", "A11'": "A11p"}
for _prime in ("2", "7", "9", "10", "11"):
    _ALIASES[f"A{_prime}′"] = f"A{_prime}p"


def get_axiom(name) -> Axiom:
    if isinstance(name, Axiom):
        return name
    key = _ALIASES.get(name.strip(), name.strip())
    try:
        return AXIOMS[key]
    except KeyError:
        raise InputError(f"unknown axiom {name!r}; known: {', '.join(AXIOM_IDS)}") from None


def parse_axiom_list(text: str) -> list:
    names = [s for s in (t.strip() for t in text.split(",")) if s]
    if not names:
        raise InputError("empty axiom list")
    return [get_axiom(n).id for n in names]


# ---------------------------------------------------------------------------
# evaluation


def _require_checkable(ax: Axiom):
    if not ax.checkable:
        raise NotCheckableError(f"{ax.id} ({ax.title}) is not checkable")


def evaluate_instance(axiom, binding: ModelBinding, points: Sequence) -> Evaluation:
    ax = get_axiom(axiom)
    _require_checkable(ax)
    points = tuple(points)
    if len(points) != len(ax.universals):
        raise InputError(f"{ax.id} takes {len(ax.universals)} points, got {len(points)}")
    if ax.premise is not None and not ax.premise(binding, *points):
        return Evaluation(Outcome.PREMISE_FALSE)
    if not ax.existentials:
        ok = ax.conclusion(binding, *points)
        return Evaluation(Outcome.CONCLUSION_TRUE if ok else Outcome.CONCLUSION_FALSE)

    if binding.exhaustive:
        searched = 0
        for cand in itertools.product(binding.universe, repeat=len(ax.existentials)):
            searched += 1
            if ax.conclusion(binding, *points, *cand):
                return Evaluation(Outcome.CONCLUSION_TRUE, witness=cand)
        return Evaluation(
            Outcome.CONCLUSION_FALSE,
            evidence={
                "reason": "no witness in the universe",
                "witness_search": "exhaustive",
                "candidates": searched,
                "found": 0,
            },
        )

    oracle = binding.witnesses.get(ax.id)
    if oracle is None:
        raise NotCheckableError(f"{binding.name} has no witness oracle for {ax.id}")
    found = oracle(*points)
    if isinstance(found, Refutation):
        return Evaluation(Outcome.CONCLUSION_FALSE, evidence=dict(found.evidence))
    found = tuple(found)
    if ax.conclusion(binding, *points, *found):
        return Evaluation(Outcome.CONCLUSION_TRUE, witness=found)
    return Evaluation(
        Outcome.CONCLUSION_FALSE,
        witness=found,
        evidence={
            "reason": "oracle witness does not satisfy the conclusion",
            "witness": [binding.encode(p) for p in found],
        },
    )


def _certificate(ax: Axiom, binding: ModelBinding, points, ev: Evaluation) -> Certificate:
    return Certificate(ax.id, binding.name, tuple(binding.encode(p) for p in points), ev.evidence)


def trial_rng(seed: int, axiom_id: str, trial: int) -> random.Random:
    """Per-trial generator, so results do not depend on trial order."""
    return random.Random(f"{seed}:{axiom_id}:{trial}")


def sample_check(axiom, binding: ModelBinding, trials: int, seed: int) -> CheckReport:
    ax = get_axiom(axiom)
    _require_checkable(ax)
    if trials < 1:
        raise InputError("trials must be at least 1")
    gen = binding.generators.get(ax.id)
    if gen is None:
        raise NotCheckableError(f"{binding.name} has no instance generator for {ax.id}")
    hits = failures = 0
    cert = None
    for i in range(trials):
        pts = gen(trial_rng(seed, ax.id, i))
        ev = evaluate_instance(ax, binding, pts)
        if ev.outcome is Outcome.PREMISE_FALSE:
            continue
        hits += 1
        if ev.outcome is Outcome.CONCLUSION_FALSE:
            failures += 1
            if cert is None:
                cert = _certificate(ax, binding, pts, ev)
    if failures:
        status = FAIL
    elif hits == 0:
        status = UNKNOWN
    else:
        status = PASS
    note = "" if hits else "no generated instance satisfied the premise"
    return CheckReport(ax.id, "sampled", status, trials, hits, failures, seed, cert, note)


def exhaustive_check(axiom, binding: ModelBinding) -> CheckReport:
    ax = get_axiom(axiom)
    _require_checkable(ax)
    if not binding.exhaustive:
        raise NotCheckableError(f"{binding.name} is not a finite model")
    tried = hits = failures = 0
    cert = None
    for pts in itertools.product(binding.universe, repeat=len(ax.universals)):
        tried += 1
        ev = evaluate_instance(ax, binding, pts)
        if ev.outcome is Outcome.PREMISE_FALSE:
            continue
        hits += 1
        if ev.outcome is Outcome.CONCLUSION_FALSE:
            failures += 1
            if cert is None:
                cert = _certificate(ax, binding, pts, ev)
    status = FAIL if failures else PASS
    return CheckReport(ax.id, "exhaustive", status, tried, hits, failures, None, cert)


def check_axiom(axiom, binding: ModelBinding, trials: int = 1000, seed: int = 0) -> CheckReport:
    ax = get_axiom(axiom)
    mode = "exhaustive" if binding.exhaustive else "sampled"
    try:
        if binding.exhaustive:
            return exhaustive_check(ax, binding)
        return sample_check(ax, binding, trials, seed)
    except NotCheckableError as exc:
        return CheckReport(
            ax.id, mode, NOT_CHECKED, seed=None if binding.exhaustive else seed, note=str(exc)
        )


def check_suite(binding: ModelBinding, axioms, trials: int = 1000, seed: int = 0) -> list:
    return [check_axiom(a, binding, trials, seed) for a in axioms]


def verify_certificate(cert: Certificate, binding: ModelBinding) -> bool:
    """Replay a certificate; True iff the same failure and evidence reappear."""
    try:
        ax = get_axiom(cert.axiom)
        if binding.decode is None:
            raise InputError(f"{binding.name} cannot decode points")
        points = tuple(binding.decode(p) for p in cert.points)
        ev = evaluate_instance(ax, binding, points)
    except (InputError, NotCheckableError):
        return False
    if ev.outcome is not Outcome.CONCLUSION_FALSE:
        return False
    return _certificate(ax, binding, points, ev) == cert
