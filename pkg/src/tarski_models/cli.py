"""Command-line front end.

Exit codes: 0 when everything checked passes (or cannot be checked), 1 when
a counterexample is found or a certificate fails to replay, 2 on usage and
input errors.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Optional

from . import cartesian as cart
from . import klein
from .axioms import (
    AXIOM_IDS,
    ModelBinding,
    Outcome,
    evaluate_instance,
    check_suite,
    exhaustive_check,
    get_axiom,
    parse_axiom_list,
    verify_certificate,
)
from .bindings import DEFAULT_BOUND, cartesian_binding, finite_binding, klein_binding
from .cartesian import Vec
from .errors import TarskiError
from .finite import load_model, serialize_model
from .report import FAIL, Certificate, render_certificate, render_json_lines, render_table

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_ERROR = 0, 1, 2
SEED_ENV = "TARSKI_SEED"


class UsageError(TarskiError):
    pass


@dataclass
class RunConfig:
    model: str
    axioms: List[str] = field(default_factory=lambda: list(AXIOM_IDS))
    trials: int = 1000
    seed: int = 0
    fmt: str = "text"
    bound: int = DEFAULT_BOUND

    def __post_init__(self):
        if self.trials < 1:
            raise UsageError("--trials must be at least 1")
        if self.fmt not in ("text", "json"):
            raise UsageError(f"unknown format {self.fmt!r}")


def make_binding(selector: str, bound: int = DEFAULT_BOUND) -> ModelBinding:
    kind, _, arg = selector.partition(":")
    if kind == "cartesian":
        try:
            dim = int(arg) if arg else 2
        except ValueError:
            raise UsageError(f"bad dimension in {selector!r}") from None
        if dim < 1:
            raise UsageError("dimension must be at least 1")
        return cartesian_binding(dim, bound, name=f"cartesian:{dim}")
    if kind == "klein" and not arg:
        return klein_binding(bound)
    if kind == "finite" and arg:
        return finite_binding(load_model(arg), name=selector)
    raise UsageError(f"unknown model {selector!r}; use cartesian:<dim>, klein or finite:<path>")


def _default_seed() -> int:
    raw = os.environ.get(SEED_ENV)
    if raw is None:
        return 0
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{SEED_ENV} must be an integer, got {raw!r}") from None


# ---------------------------------------------------------------------------
# commands


def cmd_check(cfg: RunConfig, out) -> int:
    binding = make_binding(cfg.model, cfg.bound)
    reports = check_suite(binding, cfg.axioms, cfg.trials, cfg.seed)
    if cfg.fmt == "json":
        out.write(render_json_lines(reports))
    else:
        out.write(render_table(reports, binding.name))
    return EXIT_COUNTEREXAMPLE if any(r.status == FAIL for r in reports) else EXIT_OK


def klein_refutation(x_text: str = "0,3/4") -> Certificate:
    """Certificate that Proclus fails in the Klein model, for a point x on ray ab."""
    binding = klein_binding()
    x = klein.KPoint.parse(x_text)
    a, b, _, _, _ = klein.euclid_counterexample_config()
    if x == b or not klein.bet_k(a, b, x):
        raise UsageError("x must lie on the chord through a and b, beyond b")
    points = klein.proclus_instance(x)
    ev = evaluate_instance("A10p", binding, points)
    if ev.outcome is not Outcome.CONCLUSION_FALSE:
        raise AssertionError("refutation instance did not fail")
    return Certificate("A10p", binding.name, tuple(map(str, points)), ev.evidence)


def cmd_refute(model: str, axiom: str, x: Optional[str], fmt: str, out_path: Optional[str], out) -> int:
    ax = get_axiom(axiom)
    if model == "klein":
        if ax.id != "A10p":
            raise UsageError("the Klein model refutes only A10p")
        binding = klein_binding()
        cert = klein_refutation(x or "0,3/4")
    elif model.startswith("finite:"):
        if x is not None:
            raise UsageError("--x applies to the Klein model only")
        binding = make_binding(model)
        report = exhaustive_check(ax, binding)
        if report.certificate is None:
            out.write(f"{ax.id} holds in {binding.name}; nothing to refute\n")
            return EXIT_OK
        cert = report.certificate
    else:
        raise UsageError(f"refute supports klein (A10p) and finite models, not {model!r}")
    if not verify_certificate(cert, binding):
        raise AssertionError("certificate does not replay")
    if out_path:
        Path(out_path).write_text(cert.to_json(), encoding="utf-8")
    out.write(cert.to_json() if fmt == "json" else render_certificate(cert) + "\n")
    return EXIT_COUNTEREXAMPLE


def cmd_verify(cert_path: str, model: Optional[str], out) -> int:
    cert = Certificate.load(cert_path)
    binding = make_binding(model or cert.model)
    ok = verify_certificate(cert, binding)
    out.write(f"{cert.axiom} in {binding.name}: {'reproduced' if ok else 'NOT reproduced'}\n")
    return EXIT_OK if ok else EXIT_COUNTEREXAMPLE


def _vec(args, name, dim=None) -> Vec:
    text = getattr(args, name)
    if text is None:
        raise UsageError(f"--{name} is required")
    return Vec.parse(text, dim=dim)


def cmd_witness(args, out) -> int:
    kind = args.kind
    if kind == "a9n":
        points, a, b, c = cart.a9n_counterexample(args.n)
        for i, p in enumerate(points, start=1):
            out.write(f"P{i}={p}\n")
        out.write(f"A={a}\nB={b}\nC={c}\n")
        out.write(f"premises={cart.a9n_premises_hold(points, a, b, c)}\n")
        out.write(f"col={cart.col(a, b, c)}\n")
        return EXIT_OK
    a, b, c = _vec(args, "a"), _vec(args, "b"), _vec(args, "c")
    if kind == "pasch":
        p, q = _vec(args, "p"), _vec(args, "q")
        x, k3, k4 = cart.pasch_witness(a, b, c, p, q)
        out.write(f"X={x}\nk3={k3}\nk4={k4}\n")
    elif kind == "euclid":
        d, t = _vec(args, "d"), _vec(args, "t")
        x, y = cart.euclid_witnesses(a, b, c, d, t)
        out.write(f"X={x}\nY={y}\nk1={cart.bet_ratio(a, d, t)}\nk2={cart.bet_ratio(b, d, c)}\n")
    elif kind == "segment":
        d = _vec(args, "d")
        e = cart.seg_construct_witness(a, b, c, d)
        out.write(f"E={e}\n")
        if a != b:
            out.write(f"scale={cart.ratio(e - b, b - a)}\n")
    else:
        raise UsageError(f"unknown witness kind {kind!r}")
    return EXIT_OK


def cmd_model(path: str, out) -> int:
    out.write(serialize_model(load_model(path)))
    return EXIT_OK


# ---------------------------------------------------------------------------
# argument parsing


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="tarski", description="Exact model checking of Tarski's geometry axioms.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("check", help="run an axiom suite against a model")
    p.add_argument("--model", required=True, help="cartesian:<dim>, klein or finite:<path>")
    p.add_argument("--axioms", help="comma-separated ids, e.g. A1,A2p,A10p (default: all)")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=None, help=f"default: ${SEED_ENV} or 0")
    p.add_argument("--format", dest="fmt", choices=("text", "json"), default="text")
    p.add_argument("--bound", type=int, default=DEFAULT_BOUND, help="rational sampling bound B")

    p = sub.add_parser("refute", help="print a verified counterexample certificate")
    p.add_argument("--model", required=True)
    p.add_argument("--axiom", required=True)
    p.add_argument("--x", help="Klein only: the point x on ray ab (default 0,3/4)")
    p.add_argument("--format", dest="fmt", choices=("text", "json"), default="text")
    p.add_argument("--out", help="also write the certificate as JSON to this file")

    p = sub.add_parser("witness", help="construct existential witnesses exactly")
    p.add_argument("kind", choices=("pasch", "euclid", "segment", "a9n"))
    for name in "abcdpqt":
        p.add_argument(f"--{name}", help="point as comma-separated coordinates")
    p.add_argument("--n", type=int, default=4, help="a9n: dimension")

    p = sub.add_parser("verify", help="replay a certificate file")
    p.add_argument("certificate")
    p.add_argument("--model", help="model selector (default: the one recorded)")

    p = sub.add_parser("model", help="parse a finite model file and print it normalized")
    p.add_argument("path")
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        if args.command == "check":
            cfg = RunConfig(
                model=args.model,
                axioms=parse_axiom_list(args.axioms) if args.axioms else list(AXIOM_IDS),
                trials=args.trials,
                seed=_default_seed() if args.seed is None else args.seed,
                fmt=args.fmt,
                bound=args.bound,
            )
            return cmd_check(cfg, out)
        if args.command == "refute":
            return cmd_refute(args.model, args.axiom, args.x, args.fmt, args.out, out)
        if args.command == "witness":
            return cmd_witness(args, out)
        if args.command == "verify":
            return cmd_verify(args.certificate, args.model, out)
        return cmd_model(args.path, out)
    except TarskiError as exc:
        print(f"tarski: error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except (json.JSONDecodeError, OSError) as exc:
        print(f"tarski: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
