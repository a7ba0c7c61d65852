"""Exact rational functions over Q(q^(1/2), t^(1/2)) and the x variables.

Every scalar, Laurent polynomial and rational function in this package is a
:class:`Rat`: a reduced quotient of two integer polynomials in one global
flint context.  The generators are

    qh = q^(1/2), th = t^(1/2) (written theta below), x1..x6,
    z, w, u1..u4, v1..v4   (auxiliary variables for series and kernels).

Canonical form: gcd(num, den) = 1 and the leading coefficient of ``den``
(lexicographic order, generators in the order above) is positive.  Two values
are equal iff their (num, den) pairs are equal.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

import flint

MAX_X = 6
N_AUX = 4
NAMES = (
    ("qh", "th")
    + tuple(f"x{i}" for i in range(1, MAX_X + 1))
    + ("z", "w")
    + tuple(f"u{i}" for i in range(1, N_AUX + 1))
    + tuple(f"v{i}" for i in range(1, N_AUX + 1))
)
CTX = flint.fmpz_mpoly_ctx.get(NAMES, "lex")
NVARS = len(NAMES)
QH, TH = 0, 1
X0 = 2  # index of x1
INDEX = {name: k for k, name in enumerate(NAMES)}
_GENS = CTX.gens()
_ONE = CTX.from_dict({(0,) * NVARS: 1})
_ZERO = CTX.from_dict({})


class Resample(ArithmeticError):
    """A denominator vanished at an evaluation point; pick another point."""


def _positive_lead(num, den):
    if den.leading_coefficient() < 0:
        return -num, -den
    return num, den


class Rat:
    """Reduced quotient num/den of flint polynomials."""

    __slots__ = ("num", "den", "_key")

    def __init__(self, num, den=None, reduced: bool = False):
        if isinstance(num, int):
            num = CTX.from_dict({(0,) * NVARS: num}) if num else _ZERO
        if den is None:
            den = _ONE
            reduced = True
        elif isinstance(den, int):
            if den == 0:
                raise ZeroDivisionError("zero denominator")
            den = CTX.from_dict({(0,) * NVARS: den})
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            num, den = _ZERO, _ONE
        elif not reduced:
            g = num.gcd(den)
            if not g.is_one():
                num = num / g
                den = den / g
        self.num, self.den = _positive_lead(num, den)
        self._key = None

    # -- basic protocol ---------------------------------------------------
    def key(self) -> tuple[str, str]:
        if self._key is None:
            self._key = (str(self.num), str(self.den))
        return self._key

    def __hash__(self):
        return hash(self.key())

    def __eq__(self, other):
        if isinstance(other, int):
            other = Rat(other)
        if not isinstance(other, Rat):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def is_one(self) -> bool:
        return self.num.is_one() and self.den.is_one()

    def __repr__(self):
        return f"Rat({render(self)})"

    __str__ = __repr__

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.den == other.den:
            return Rat(self.num + other.num, self.den)
        g = self.den.gcd(other.den)
        if g.is_one():
            return Rat(self.num * other.den + other.num * self.den,
                       self.den * other.den, reduced=True)
        d1 = self.den / g
        d2 = other.den / g
        n = self.num * d2 + other.num * d1
        if n.is_zero():
            return ZERO
        h = n.gcd(g)
        if not h.is_one():
            n = n / h
            g = g / h
        return Rat(n, d1 * d2 * g, reduced=True)

    __radd__ = __add__

    def __neg__(self):
        return Rat(-self.num, self.den, reduced=True)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if self.is_zero() or other.is_zero():
            return ZERO
        if self.den.is_one() and other.den.is_one():
            return Rat(self.num * other.num, _ONE, reduced=True)
        g1 = self.num.gcd(other.den)
        g2 = other.num.gcd(self.den)
        n1, d2 = (self.num, other.den) if g1.is_one() else (self.num / g1, other.den / g1)
        n2, d1 = (other.num, self.den) if g2.is_one() else (other.num / g2, self.den / g2)
        return Rat(n1 * n2, d1 * d2, reduced=True)

    __rmul__ = __mul__

    def inverse(self) -> "Rat":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return Rat(self.den, self.num, reduced=True)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return _coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        if k == 0:
            return ONE
        return Rat(self.num ** k, self.den ** k, reduced=True)

    # -- structure --------------------------------------------------------
    def degrees(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        return self.num.degrees(), self.den.degrees()

    def depends_on(self, idx: int) -> bool:
        dn, dd = self.degrees()
        return dn[idx] > 0 or dd[idx] > 0

    def is_qt(self) -> bool:
        """True when free of x and auxiliary variables."""
        dn, dd = self.degrees()
        return not any(dn[2:]) and not any(dd[2:])

    def is_laurent_x(self) -> bool:
        """True when the denominator is a (q,t)-scalar times a monomial."""
        d = self.den.to_dict()
        if len(d) == 1:
            return True
        xs = {e[2:] for e in d}
        return len(xs) == 1

    def __reduce__(self):
        return (_from_dicts, (self.num.to_dict(), self.den.to_dict()))


def _from_dicts(n, d):
    return Rat(CTX.from_dict(n), CTX.from_dict(d), reduced=True)


def _coerce(v):
    if isinstance(v, Rat):
        return v
    if isinstance(v, int):
        return Rat(v)
    if isinstance(v, Fraction):
        return Rat(v.numerator) / Rat(v.denominator)
    return NotImplemented


ZERO = Rat(0)
ONE = Rat(1)


def const(v) -> Rat:
    return _coerce(v)


def gen(name: str) -> Rat:
    return Rat(_GENS[INDEX[name]])


def qh() -> Rat:
    return gen("qh")


def th() -> Rat:
    return gen("th")


def q() -> Rat:
    return gen("qh") ** 2


def t() -> Rat:
    return gen("th") ** 2


def x(i: int) -> Rat:
    """The variable x_i, 1-based."""
    if not 1 <= i <= MAX_X:
        raise IndexError(f"x{i} outside x1..x{MAX_X}")
    return Rat(_GENS[X0 + i - 1])


def q_pow(k: Fraction | int) -> Rat:
    """q^k for k in (1/2)Z."""
    k2 = Fraction(k) * 2
    if k2.denominator != 1:
        raise ValueError("only half-integer powers of q are representable")
    return qh() ** int(k2)


def t_pow(k: Fraction | int) -> Rat:
    k2 = Fraction(k) * 2
    if k2.denominator != 1:
        raise ValueError("only half-integer powers of t are representable")
    return th() ** int(k2)


def monomial(exps: Mapping[int, int], coeff: Rat | int = 1) -> Rat:
    """coeff * prod var^e with var given by context index, e may be negative."""
    pos = [0] * NVARS
    neg = [0] * NVARS
    for k, e in exps.items():
        if e > 0:
            pos[k] = e
        elif e < 0:
            neg[k] = -e
    m = Rat(CTX.from_dict({tuple(pos): 1}), CTX.from_dict({tuple(neg): 1}), reduced=True)
    return m * coeff if not (isinstance(coeff, int) and coeff == 1) else m


def x_monomial(exps: Sequence[int], coeff: Rat | int = 1) -> Rat:
    return monomial({X0 + k: e for k, e in enumerate(exps)}, coeff)


# -- substitutions -------------------------------------------------------

def _reverse_vars(poly, idxs: Sequence[int], degs: Sequence[int]):
    out = {}
    for e, c in poly.to_dict().items():
        e = list(e)
        for k, d in zip(idxs, degs):
            e[k] = d - e[k]
        out[tuple(e)] = c
    return CTX.from_dict(out)


def invert_vars(c: Rat, idxs: Sequence[int]) -> Rat:
    """Substitute v -> 1/v for every context index in idxs."""
    if not idxs:
        return c
    dn, dd = c.degrees()
    degs = [max(dn[k], dd[k]) for k in idxs]
    n = _reverse_vars(c.num, idxs, degs)
    d = _reverse_vars(c.den, idxs, degs)
    # an automorphism keeps num/den coprime; only the sign may need fixing
    return Rat(n, d, reduced=True)


def subst_inverse(c: Rat) -> Rat:
    """(q^(1/2), t^(1/2)) -> (q^(-1/2), t^(-1/2))."""
    return invert_vars(c, (QH, TH))


def invert_x(c: Rat, n: int) -> Rat:
    """x_i -> 1/x_i for i = 1..n."""
    return invert_vars(c, tuple(range(X0, X0 + n)))


def _perm_shift_poly(poly, perm: Sequence[int], shift: Sequence[int], n: int):
    out = {}
    lo = None
    for e, c in poly.to_dict().items():
        e2 = list(e)
        dq = 0
        for k in range(n):
            ek = e[X0 + k]
            e2[X0 + perm[k]] = ek
            if ek:
                dq += 2 * shift[k] * ek
        e2[QH] += dq
        if lo is None or e2[QH] < lo:
            lo = e2[QH]
        out[tuple(e2)] = out.get(tuple(e2), 0) + c
    if lo is not None and lo < 0:
        out2 = {}
        for e, c in out.items():
            e = list(e)
            e[QH] -= lo
            out2[tuple(e)] = c
        out = out2
    else:
        lo = 0
    return CTX.from_dict(out), lo


@lru_cache(maxsize=1 << 18)
def _perm_shift_cached(nd, dd, perm, shift):
    num = CTX.from_dict(dict(nd))
    den = CTX.from_dict(dict(dd))
    n = len(perm)
    pn, ln = _perm_shift_poly(num, perm, shift, n)
    pd, ld = _perm_shift_poly(den, perm, shift, n)
    # result = pn * qh^ln / (pd * qh^ld)
    k = ln - ld
    if k > 0:
        pn = pn * _GENS[QH] ** k
    elif k < 0:
        pd = pd * _GENS[QH] ** (-k)
    return Rat(pn, pd, reduced=True)


def perm_shift(c: Rat, perm: Sequence[int], shift: Sequence[int]) -> Rat:
    """Substitute x_{k+1} -> q^{shift[k]} x_{perm[k]+1}, k = 0..n-1 (0-based perm).

    Variables beyond n are untouched.  Since this is a field automorphism the
    image of a reduced fraction is reduced; no gcd is needed.
    """
    perm = tuple(perm)
    shift = tuple(shift)
    if all(p == k for k, p in enumerate(perm)) and not any(shift):
        return c
    dn, dd = c.degrees()
    n = len(perm)
    if not any(dn[X0:X0 + n]) and not any(dd[X0:X0 + n]):
        return c
    return _perm_shift_cached(tuple(c.num.to_dict().items()),
                              tuple(c.den.to_dict().items()), perm, shift)


def substitute(c: Rat, images: Mapping[int, Rat]) -> Rat:
    """Substitute context variable k -> images[k] (arbitrary Rat values)."""
    if not images:
        return c
    dn, dd = c.degrees()
    images = {k: v for k, v in images.items() if dn[k] or dd[k]}
    if not images:
        return c
    if all(v.den.is_one() for v in images.values()):
        gens = list(_GENS)
        for k, v in images.items():
            gens[k] = v.num
        return Rat(c.num.compose(*gens), c.den.compose(*gens))
    degs = {k: max(dn[k], dd[k]) for k in images}
    return _hom(c.num, images, degs) / _hom(c.den, images, degs)


def _hom(poly, images, degs) -> Rat:
    """poly(images) * prod den(image_k)^deg_k, returned as a Rat polynomial."""
    pw_cache: dict = {}

    def pw(k, which, e):
        key = (k, which, e)
        if key not in pw_cache:
            base = images[k].num if which == 0 else images[k].den
            pw_cache[key] = base ** e
        return pw_cache[key]

    total = _ZERO
    for e, c in poly.to_dict().items():
        term = CTX.from_dict({tuple(0 if k in images else ek for k, ek in enumerate(e)): c})
        for k in images:
            ek = e[k]
            term = term * pw(k, 0, ek) * pw(k, 1, degs[k] - ek)
        total = total + term
    return Rat(total)


# -- evaluation ------------------------------------------------------------

def _eval_poly(poly, point: Mapping[int, Fraction]) -> Fraction:
    acc = Fraction(0)
    pw: dict = {}
    for e, c in poly.to_dict().items():
        term = Fraction(int(c))
        for k, ek in enumerate(e):
            if ek:
                if k not in point:
                    raise KeyError(f"no value for {NAMES[k]}")
                key = (k, ek)
                if key not in pw:
                    pw[key] = Fraction(point[k]) ** int(ek)
                term *= pw[key]
        acc += term
    return acc


def evaluate(c: Rat, point: Mapping[int, Fraction]) -> Fraction:
    """Exact value at a rational point (context index -> value).

    Raises Resample when the denominator vanishes there.
    """
    d = _eval_poly(c.den, point)
    if d == 0:
        raise Resample("denominator vanishes at sample point")
    return _eval_poly(c.num, point) / d


def eval_rational(c: Rat, qh0, th0) -> Fraction:
    """Evaluate a (q,t)-scalar; the inputs are the values of q^(1/2), t^(1/2)."""
    return evaluate(c, {QH: Fraction(qh0), TH: Fraction(th0)})


# -- t -> infinity ------------------------------------------------------------

NEG_INF = float("-inf")


def _lead_in(poly, idx: int):
    d = poly.to_dict()
    top = max(e[idx] for e in d)
    out = {}
    for e, c in d.items():
        if e[idx] == top:
            e = list(e)
            e[idx] = 0
            out[tuple(e)] = c
    return top, CTX.from_dict(out)


def t_leading(c: Rat) -> tuple[float | int, Rat]:
    """(halfdeg, lead) with c ~ lead * theta^halfdeg as t -> infinity."""
    if c.is_zero():
        return NEG_INF, ZERO
    a, ln = _lead_in(c.num, TH)
    b, ld = _lead_in(c.den, TH)
    return a - b, Rat(ln, ld)


# -- rendering ----------------------------------------------------------------

def _render_mono(e: Sequence[int]) -> list[str]:
    parts = []
    for k, ek in enumerate(e):
        if not ek:
            continue
        name = NAMES[k]
        if k in (QH, TH) and ek % 2 == 0:
            name = "q" if k == QH else "t"
            ek //= 2
        parts.append(name if ek == 1 else f"{name}^{ek}")
    return parts


def render_poly(poly) -> str:
    d = poly.to_dict()
    if not d:
        return "0"
    out = []
    for e, c in sorted(d.items(), reverse=True):
        c = int(c)
        parts = _render_mono(e)
        mag = abs(c)
        body = "*".join(([str(mag)] if mag != 1 or not parts else []) + parts)
        out.append(("-" if c < 0 else "+", body))
    s = ("-" if out[0][0] == "-" else "") + out[0][1]
    for sign, body in out[1:]:
        s += f" {sign} {body}"
    return s


def render(c: Rat) -> str:
    """Normalized expression string; half powers appear as qh, th."""
    n = render_poly(c.num)
    if c.den.is_one():
        return n
    dd = c.den.to_dict()
    ds = render_poly(c.den)
    if len(dd) > 1 or "*" in ds:
        ds = f"({ds})"
    if len(c.num.to_dict()) > 1:
        n = f"({n})"
    return f"{n}/{ds}"


def rat_sum(items: Iterable[Rat]) -> Rat:
    """Sum with a shared-denominator fast path."""
    groups: dict = {}
    for r in items:
        if r.is_zero():
            continue
        k = str(r.den)
        if k in groups:
            groups[k][1] = groups[k][1] + r.num
        else:
            groups[k] = [r.den, r.num]
    total = ZERO
    for den, num in groups.values():
        total = total + Rat(num, den)
    return total
