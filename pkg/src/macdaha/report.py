"""Check results, suite reports and the zero-test used by every suite."""
from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterable

from .coeff import NVARS, Rat, Resample, evaluate, render

SCHEMA = 1
STATUSES = ("pass", "fail", "error")


@dataclass
class Check:
    name: str
    status: str
    witness: str | None = None

    def to_dict(self) -> dict:
        return {"name": self.name, "status": self.status, "witness": self.witness}


@dataclass
class Report:
    suite: str
    params: dict = field(default_factory=dict)
    checks: list[Check] = field(default_factory=list)
    timing: float = 0.0

    @property
    def passed(self) -> bool:
        return bool(self.checks) and all(c.status == "pass" for c in self.checks)

    def add(self, check: Check) -> Check:
        self.checks.append(check)
        return check

    def sorted(self) -> "Report":
        return Report(self.suite, dict(self.params),
                      sorted(self.checks, key=lambda c: c.name), self.timing)

    def to_dict(self) -> dict:
        return {
            "schema": SCHEMA,
            "suite": self.suite,
            "params": self.params,
            "checks": [c.to_dict() for c in self.checks],
            "timing": round(self.timing, 3),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, d: dict) -> "Report":
        if d.get("schema") != SCHEMA:
            raise ValueError(f"unsupported report schema {d.get('schema')!r}")
        checks = [Check(c["name"], c["status"], c.get("witness")) for c in d["checks"]]
        return cls(d["suite"], d["params"], checks, d.get("timing", 0.0))

    def summary_lines(self) -> list[str]:
        lines = [f"[{self.suite}] {'PASS' if self.passed else 'FAIL'} "
                 f"({sum(c.status == 'pass' for c in self.checks)}/{len(self.checks)}, {self.timing:.1f}s)"]
        for c in self.checks:
            if c.status != "pass":
                lines.append(f"  {c.status.upper()} {c.name}: {c.witness}")
        return lines


def coefficients(obj: Any) -> Iterable[tuple[Any, Rat]]:
    """(label, coefficient) pairs of a Rat, an operator, or a mapping."""
    if isinstance(obj, Rat):
        return [((), obj)]
    if hasattr(obj, "terms"):
        return list(obj.terms.items())
    if isinstance(obj, dict):
        return list(obj.items())
    raise TypeError(f"cannot test {type(obj).__name__} for zero")


class Verifier:
    """Zero test in exact or probabilistic mode.

    Exact: the canonical form is compared with zero.  Probabilistic: every
    coefficient is evaluated at ``samples`` seeded random rational points
    (values for q^(1/2), t^(1/2), x and auxiliaries); a nonzero value is a
    certificate of failure, while vanishing at every point is accepted.
    """

    def __init__(self, mode: str = "exact", seed: int = 0, samples: int = 3):
        if mode not in ("exact", "probabilistic"):
            raise ValueError(f"unknown mode {mode!r}")
        self.mode = mode
        self.seed = seed
        self.samples = samples
        self.rng = random.Random(seed)
        self._points: list[dict] = []

    def _point(self, k: int) -> dict:
        while len(self._points) <= k:
            pt = {}
            for idx in range(NVARS):
                num = self.rng.randint(2, 97) * self.rng.choice((1, -1))
                den = self.rng.randint(1, 13)
                pt[idx] = Fraction(num, den)
            self._points.append(pt)
        return self._points[k]

    def _eval_nonzero(self, c: Rat) -> bool:
        used = 0
        k = 0
        while used < self.samples:
            try:
                v = evaluate(c, self._point(k))
            except Resample:
                k += 1
                if k > 50 * self.samples:
                    raise
                continue
            if v != 0:
                return True
            used += 1
            k += 1
        return False

    def nonzero_witness(self, obj: Any) -> str | None:
        """None if obj is (accepted as) zero, else a rendered witness."""
        for label, c in coefficients(obj):
            bad = (not c.is_zero()) if self.mode == "exact" else self._eval_nonzero(c)
            if bad:
                s = render(c)
                if len(s) > 400:
                    s = s[:400] + "..."
                return f"{label}: {s}" if label != () else s
        return None

    def check_zero(self, name: str, obj: Any) -> Check:
        try:
            w = self.nonzero_witness(obj)
        except Exception as exc:  # divergences and internal errors surface as "error"
            return Check(name, "error", f"{type(exc).__name__}: {exc}")
        return Check(name, "pass" if w is None else "fail", w)

    def check_equal(self, name: str, a: Any, b: Any) -> Check:
        try:
            diff = a - b
        except Exception as exc:
            return Check(name, "error", f"{type(exc).__name__}: {exc}")
        return self.check_zero(name, diff)

    def check_true(self, name: str, ok: bool, witness: str | None = None) -> Check:
        return Check(name, "pass" if ok else "fail", None if ok else witness)


def timed_report(suite: str, params: dict):
    """Context helper: ``with timed_report(...) as rep:`` fills in timing."""
    class _Ctx:
        def __enter__(self_inner):
            self_inner.rep = Report(suite, params)
            self_inner.t0 = time.perf_counter()
            return self_inner.rep

        def __exit__(self_inner, *exc):
            self_inner.rep.timing = time.perf_counter() - self_inner.t0
            return False
    return _Ctx()
