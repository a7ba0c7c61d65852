"""Shared helpers: an independent sympy oracle and a point-evaluation bridge."""
from __future__ import annotations

import random
from fractions import Fraction

import pytest
import sympy as sp

from macdaha.coeff import INDEX, QH, TH, X0, Rat, evaluate, render

QS, TS = sp.symbols("q t")
XS = sp.symbols("x1:7")


def to_sympy(c: Rat) -> sp.Expr:
    """Parse the canonical rendering back into sympy; half powers become sqrt."""
    s = render(c).replace("^", "**")
    loc = {"q": QS, "t": TS, "qh": sp.sqrt(QS), "th": sp.sqrt(TS)}
    loc.update({f"x{i}": XS[i - 1] for i in range(1, 7)})
    for name in ("z", "w", "u1", "u2", "u3", "u4", "v1", "v2", "v3", "v4"):
        loc[name] = sp.Symbol(name)
    return sp.sympify(s, locals=loc)


def random_point(rng: random.Random, nx: int = 6) -> dict:
    """Values for q^(1/2), t^(1/2) and x1.. as exact fractions."""
    pt = {QH: Fraction(rng.randint(2, 9), rng.randint(11, 19)),
          TH: Fraction(rng.randint(2, 9), rng.randint(11, 19))}
    for i in range(nx):
        pt[X0 + i] = Fraction(rng.randint(2, 40), rng.randint(2, 40)) * rng.choice((1, -1))
    return pt


def sympy_at(expr: sp.Expr, pt: dict) -> sp.Rational:
    subs = {QS: sp.Rational(pt[QH]) ** 2, TS: sp.Rational(pt[TH]) ** 2}
    subs.update({XS[i]: sp.Rational(pt[X0 + i]) for i in range(6) if X0 + i in pt})
    return sp.Rational(sp.cancel(expr.subs(subs)))


def agree(c: Rat, expr: sp.Expr, seed: int = 0, points: int = 3) -> bool:
    rng = random.Random(seed)
    for _ in range(points):
        pt = random_point(rng)
        if Fraction(str(sympy_at(expr, pt))) != evaluate(c, pt):
            return False
    return True


@pytest.fixture
def rng():
    return random.Random(20241019)


# one line per acceptance criterion, printed at the end of the run
CRITERIA: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(CRITERIA):
        terminalreporter.write_line(CRITERIA[k])
