"""Acceptance gate: one check per criterion, each printing a PASS/FAIL line.

Run under pytest (``pytest tests/test_acceptance.py -s`` shows the lines) or
directly with ``python tests/test_acceptance.py``.
"""
import io
import json
import random
import sys
import tempfile
from fractions import Fraction as F
from pathlib import Path

import pytest

from tarski_models import cartesian as cart
from tarski_models import klein
from tarski_models.axioms import check_suite, exhaustive_check
from tarski_models.bindings import cartesian_binding, finite_binding, klein_binding
from tarski_models.cartesian import Vec, vec
from tarski_models.cli import main as cli_main
from tarski_models.finite import FiniteModel, load_model, one_point_model, parse_model, serialize_model
from tarski_models.scalar import ZERO, Scalar, sqrt_nonneg

ROOT = Path(__file__).resolve().parent.parent
ONE_POINT = ROOT / "models" / "one_point.txt"
SEED = 20240601

CARTESIAN_SUITE = ["A0", "A1", "A2p", "A3", "A4", "A5", "A7p", "A8", "A9p", "A10p", "A14", "A15"]
KLEIN_SUITE = ["A1", "A2p", "A3", "A14", "A15"]


def _cli(*argv):
    out = io.StringIO()
    code = cli_main(list(argv), out=out)
    return code, out.getvalue()


# ------------------------------------------------------------------ 1


def _random_scalar(rng: random.Random, pool) -> Scalar:
    def q():
        return Scalar(F(rng.randint(-50, 50), rng.randint(1, 50)))

    def atom():
        roll = rng.random()
        if roll < 0.25:
            return q()
        if roll < 0.6:
            return q() + q() * sqrt_nonneg(Scalar(rng.choice((2, 3, 5, 6, 7, 10, 11))))
        return q() + q() * rng.choice(pool)

    x = atom()
    if rng.random() < 0.35:
        x = x * atom() + atom()
    return x


def table_three_failures(x: Scalar, y: Scalar) -> list:
    checks = {
        "triangle": abs(x + y) <= abs(x) + abs(y),
        "positive sum": not (ZERO < x and ZERO < y) or ZERO < x + y,
        "abs zero": abs(x) != ZERO or x == ZERO,
        "totality": not (ZERO <= x and ZERO <= y) or (x <= y or y <= x),
        "abs product": abs(x * y) == abs(x) * abs(y),
        "le via abs": (x <= y) == (abs(y - x) == y - x),
        "lt via le": (x < y) == (y != x and x <= y),
    }
    return [name for name, ok in checks.items() if not ok]


def criterion_1(n: int = 10_000):
    rng = random.Random(SEED)
    two, three, five = (sqrt_nonneg(Scalar(k)) for k in (2, 3, 5))
    pool = [sqrt_nonneg(1 + two), sqrt_nonneg(2 + two), sqrt_nonneg(5 + 2 * five),
            sqrt_nonneg(2 + three)]
    xs = [_random_scalar(rng, pool) for _ in range(n)]
    nested = sum(1 for x in xs if x.depth() > 0)
    failures = 0
    for i, x in enumerate(xs):
        failures += bool(table_three_failures(x, xs[(i * 7919 + 1) % n]))
    ok = failures == 0 and nested > 0
    return ok, f"{n} scalars ({nested} with nested radicals), {failures} failing pairs"


# ------------------------------------------------------------------ 2


def criterion_2(trials: int = 1000):
    reports = check_suite(cartesian_binding(2), CARTESIAN_SUITE, trials, SEED)
    bad = [r.axiom for r in reports
           if r.status != "PASS" or r.failures or r.premise_hits != trials]
    hits = min(r.premise_hits for r in reports)
    return not bad, f"{len(reports)} axioms x {trials} trials, min premise hits {hits}, bad {bad}"


# ------------------------------------------------------------------ 3


def criterion_3():
    V = lambda *xs: vec(*(F(x) for x in xs))
    x, k3, k4 = cart.pasch_witness(V(0, 0), V(0, 2), V(2, 0), V(1, 0), V(1, 1))
    pasch = x == V(F(2, 3), F(2, 3)) and k3 == Scalar(F(1, 3)) and k4 == Scalar(F(1, 3))
    trans = cart.transitivity_ratio(F(1, 2), F(1, 2)) == Scalar(F(2, 3))
    a, b, c, d, t = V(0, 0), V(0, 1), V(1, 0), V(F(1, 2), F(1, 2)), V(1, 1)
    ex, ey = cart.euclid_witnesses(a, b, c, d, t)
    k2 = cart.bet_ratio(b, d, c)
    euclid = t - ex == k2 * (ey - ex) and (ex, ey) == (V(0, 2), V(2, 0))
    return pasch and trans and euclid, f"pasch={pasch} transitivity={trans} euclid={euclid}"


# ------------------------------------------------------------------ 4


def criterion_4(n: int = 10_000):
    rng = random.Random(SEED + 4)

    def rv(dim):
        return Vec(Scalar(F(rng.randint(-1000, 1000), rng.randint(1, 1000))) for _ in range(dim))

    failures = 0
    for _ in range(n):
        dim = rng.choice((2, 3, 4))
        a, b, c = rv(dim), rv(dim), rv(dim)
        if (c - b).norm2() != (c - a).norm2() + (b - a).norm2() - 2 * (b - a).dot(c - a):
            failures += 1
    return failures == 0, f"{n} triples, {failures} failures"


# ------------------------------------------------------------------ 5


def criterion_5(samples: int = 200):
    with tempfile.TemporaryDirectory() as tmp:
        cert_path = Path(tmp) / "klein.json"
        code, _ = _cli("refute", "--model", "klein", "--axiom", "A10p", "--out", str(cert_path))
        rec = json.loads(cert_path.read_text())
        vcode, _ = _cli("verify", str(cert_path))
    ev = rec["evidence"]
    config_ok = ev["config"] == {"a": "0,0", "b": "0,1/2", "c": "1/2,0", "d": "1/4,1/4", "t": "1/2,1/2"}
    forced_ok = (
        rec["points"][-1] == "0,3/4"
        and ev["forced_y"]["y"] == "3/2,0"
        and ev["forced_y"]["y_norm2"] == "9/4"
    )
    rng = random.Random(SEED + 5)
    outside = 0
    for _ in range(samples):
        den = rng.randint(3, 2000)
        num = rng.randint(den // 2 + 1, den - 1)
        r = klein.euclid_forced_y(klein.kp(0, F(num, den)))
        outside += r.norm2 >= 1
    ok = code == 1 and vcode == 0 and config_ok and forced_ok and outside == samples
    detail = (f"refute exit {code}, verify exit {vcode}, config {config_ok}, "
              f"y'=(3/2,0) {forced_ok}, sampled outside {outside}/{samples}")
    return ok, detail


# ------------------------------------------------------------------ 6


def criterion_6(trials: int = 1000):
    reports = check_suite(klein_binding(), KLEIN_SUITE, trials, SEED)
    bad = [r.axiom for r in reports
           if r.status != "PASS" or r.failures or r.premise_hits != trials]
    return not bad, f"{len(reports)} axioms x {trials} trials, bad {bad}"


# ------------------------------------------------------------------ 7


def criterion_7():
    points, a, b, c = cart.a9n_counterexample(4)
    premises = cart.a9n_premises_hold(points, a, b, c)
    noncol = not (cart.bet(a, b, c) or cart.bet(b, c, a) or cart.bet(c, a, b))
    return premises and noncol, f"premises hold {premises}, A B C non-collinear {noncol}"


# ------------------------------------------------------------------ 8


def criterion_8():
    m = load_model(ONE_POINT)
    binding = finite_binding(m)
    passing = all(exhaustive_check(ax, binding).status == "PASS"
                  for ax in ("A1", "A2p", "A3", "A14", "A15"))
    r1, r2 = exhaustive_check("A8", binding), exhaustive_check("A8", binding)
    a8 = r1.status == "FAIL" and r1.certificate is not None and r1.to_record() == r2.to_record()
    text = serialize_model(m)
    rng = random.Random(SEED + 8)
    round_trip = text == serialize_model(parse_model(text)) and m == one_point_model()
    for _ in range(200):
        k = rng.randint(1, 4)
        bets = {tuple(rng.randrange(k) for _ in range(3)) for _ in range(rng.randint(0, 10))}
        congs = {tuple(rng.randrange(k) for _ in range(4)) for _ in range(rng.randint(0, 10))}
        rand = FiniteModel(k, frozenset(bets), frozenset(congs))
        text = serialize_model(rand)
        round_trip &= parse_model(text) == rand and serialize_model(parse_model(text)) == text
    ok = passing and a8 and round_trip
    return ok, f"positive suite {passing}, A8 fails deterministically {a8}, round trip {round_trip}"


# ------------------------------------------------------------------ 9


def criterion_9():
    runs = [
        ("check", "--model", "cartesian:2", "--axioms", ",".join(CARTESIAN_SUITE),
         "--trials", "100", "--seed", str(SEED), "--format", "json"),
        ("check", "--model", "klein", "--axioms", "A1,A2p,A7p,A10p",
         "--trials", "100", "--seed", str(SEED), "--format", "json"),
    ]
    same = all(_cli(*argv) == _cli(*argv) for argv in runs)
    return same, f"{len(runs)} structured reports compared byte for byte: identical={same}"


CRITERIA = [
    (1, "scalar field properties on randomized scalars", criterion_1),
    (2, "Cartesian dim-2 suite", criterion_2),
    (3, "witness exactness", criterion_3),
    (4, "cosine rule identity", criterion_4),
    (5, "Klein refutation certificate", criterion_5),
    (6, "Klein positive suite", criterion_6),
    (7, "A9(4) counterexample", criterion_7),
    (8, "finite checker", criterion_8),
    (9, "determinism", criterion_9),
]


def _line(num, title, ok, detail):
    return f"criterion {num} {'PASS' if ok else 'FAIL'}: {title} -- {detail}"


@pytest.mark.parametrize("num,title,fn", CRITERIA, ids=[f"criterion_{n}" for n, _, _ in CRITERIA])
def test_criterion(num, title, fn, capsys):
    ok, detail = fn()
    with capsys.disabled():
        print("\n" + _line(num, title, ok, detail))
    assert ok, detail


if __name__ == "__main__":
    results = []
    for num, title, fn in CRITERIA:
        ok, detail = fn()
        print(_line(num, title, ok, detail), flush=True)
        results.append(ok)
    sys.exit(0 if all(results) else 1)
