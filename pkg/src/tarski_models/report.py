"""Check reports and counterexample certificates, with text and JSON output."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from .errors import InputError

PASS, FAIL, UNKNOWN, NOT_CHECKED = "PASS", "FAIL", "UNKNOWN", "NOT-CHECKED"


@dataclass(frozen=True)
class Certificate:
    axiom: str
    model: str
    points: tuple
    evidence: dict = field(default_factory=dict)

    def to_record(self) -> dict:
        return {
            "axiom": self.axiom,
            "model": self.model,
            "points": list(self.points),
            "evidence": self.evidence,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_record(), indent=2) + "\n"

    @classmethod
    def from_record(cls, rec: dict) -> "Certificate":
        try:
            return cls(rec["axiom"], rec["model"], tuple(rec["points"]), dict(rec.get("evidence", {})))
        except (KeyError, TypeError) as exc:
            raise InputError(f"malformed certificate: {exc}") from None

    @classmethod
    def load(cls, path) -> "Certificate":
        try:
            rec = json.loads(Path(path).read_text(encoding="utf-8"))
        except OSError as exc:
            raise InputError(f"cannot read certificate {path}: {exc.strerror}") from None
        except json.JSONDecodeError as exc:
            raise InputError(f"certificate {path} is not JSON: {exc}") from None
        return cls.from_record(rec)


@dataclass
class CheckReport:
    axiom: str
    mode: str
    status: str
    trials: int = 0
    premise_hits: int = 0
    failures: int = 0
    seed: Optional[int] = None
    certificate: Optional[Certificate] = None
    note: str = ""

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_record(self) -> dict:
        return {
            "axiom": self.axiom,
            "mode": self.mode,
            "status": self.status,
            "trials": self.trials,
            "premise_hits": self.premise_hits,
            "failures": self.failures,
            "seed": self.seed,
            "certificate": self.certificate.to_record() if self.certificate else None,
            "note": self.note,
        }


def render_json_lines(reports) -> str:
    return "".join(json.dumps(r.to_record()) + "\n" for r in reports)


def render_table(reports, model: str = "") -> str:
    header = ("axiom", "mode", "status", "trials", "premise-hits", "failures", "seed")
    rows = [
        (r.axiom, r.mode, r.status, str(r.trials), str(r.premise_hits), str(r.failures),
         "-" if r.seed is None else str(r.seed))
        for r in reports
    ]
    widths = [max(len(h), *(len(row[i]) for row in rows)) if rows else len(h)
              for i, h in enumerate(header)]
    fmt = "  ".join(f"{{:<{w}}}" for w in widths)
    out = []
    if model:
        out.append(f"model: {model}")
    out.append(fmt.format(*header).rstrip())
    out.append("  ".join("-" * w for w in widths))
    out.extend(fmt.format(*row).rstrip() for row in rows)
    for r in reports:
        if r.note:
            out.append(f"note {r.axiom}: {r.note}")
        if r.certificate is not None:
            out.append("")
            out.append(render_certificate(r.certificate))
    return "\n".join(out) + "\n"


def render_certificate(cert: Certificate) -> str:
    lines = [f"certificate: {cert.axiom} fails in {cert.model}"]
    lines.append("  points: " + (" | ".join(str(p) for p in cert.points) or "(none)"))
    for key, value in cert.evidence.items():
        if isinstance(value, dict):
            lines.append(f"  {key}:")
            lines.extend(f"    {k}: {v}" for k, v in value.items())
        else:
            lines.append(f"  {key}: {value}")
    return "\n".join(lines)
