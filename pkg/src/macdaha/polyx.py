"""Laurent polynomials and rational functions in x_1..x_N.

These are plain :class:`~macdaha.coeff.Rat` values; the helpers here build
the standard symmetric functions, symmetrize, and expand symmetric Laurent
polynomials in the monomial or (generalized) Schur basis.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterator, Sequence

from .coeff import (
    CTX, ONE, ZERO, X0, Rat, perm_shift, render, rat_sum, th, x, x_monomial,
)


def symmetrize(f: Rat, N: int) -> Rat:
    """Plain orbit sum over S_N acting on x_1..x_N (no 1/N! factor)."""
    ident = tuple(range(N))
    zero = (0,) * N
    return rat_sum(perm_shift(f, p, zero) if p != ident else f for p in permutations(range(N)))


def is_symmetric(f: Rat, N: int) -> bool:
    zero = (0,) * N
    for i in range(N - 1):
        p = list(range(N))
        p[i], p[i + 1] = p[i + 1], p[i]
        if perm_shift(f, tuple(p), zero) != f:
            return False
    return True


@lru_cache(maxsize=None)
def elementary(j: int, N: int) -> Rat:
    if j < 0 or j > N:
        return ZERO
    return rat_sum(x_monomial([1 if k in S else 0 for k in range(N)])
                   for S in combinations(range(N), j)) if j else ONE


@lru_cache(maxsize=None)
def power_sum(k: int, N: int) -> Rat:
    return rat_sum(x(i) ** k for i in range(1, N + 1))


def distinct_perms(lam: Sequence[int]) -> set[tuple[int, ...]]:
    return set(permutations(lam))


@lru_cache(maxsize=None)
def monomial_sym(lam: tuple[int, ...], N: int) -> Rat:
    lam = tuple(lam) + (0,) * (N - len(lam))
    if len(lam) > N:
        return ZERO
    return rat_sum(x_monomial(e) for e in sorted(distinct_perms(lam)))


def vandermonde(n: int) -> Rat:
    v = ONE
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            v = v * (x(i) - x(j))
    return v


def _sign(p: Sequence[int]) -> int:
    s = 1
    p = list(p)
    for i in range(len(p)):
        while p[i] != i:
            j = p[i]
            p[i], p[j] = p[j], p[i]
            s = -s
    return s


@lru_cache(maxsize=None)
def gen_schur(a: tuple[int, ...]) -> Rat:
    """det(x_i^(a_j + n - j)) / prod_{i<j}(x_i - x_j) in n = len(a) variables.

    The determinant is cleared of negative powers first so the Vandermonde
    division is a true polynomial division; flint raises if it is inexact.
    """
    a = tuple(a)
    n = len(a)
    if n == 0:
        return ONE
    cols = [a[j] + n - 1 - j for j in range(n)]
    shift = max(0, -min(cols))
    gens = CTX.gens()
    det = CTX.from_dict({})
    for p in permutations(range(n)):
        # row i takes column p[i]
        term = CTX.from_dict({(0,) * len(gens): _sign(p)})
        for i in range(n):
            term = term * gens[X0 + i] ** (cols[p[i]] + shift)
        det = det + term
    vdm = vandermonde(n).num
    if det.is_zero():
        return ZERO
    quot = det / vdm  # exact or raises
    return Rat(quot) * x_monomial([-shift] * n)


def x_terms(f: Rat, N: int | None = None) -> dict[tuple[int, ...], Rat]:
    """Laurent coefficients {exponent vector: (q,t)-scalar} of f.

    Raises ValueError if f is not a Laurent polynomial in x.
    """
    dd = f.den.to_dict()
    xs = {tuple(int(v) for v in e[X0:]) for e in dd}
    if len(xs) != 1:
        raise ValueError("not a Laurent polynomial in x")
    (m,) = xs
    dpoly = CTX.from_dict({e[:X0] + (0,) * (len(e) - X0): c for e, c in dd.items()})
    groups: dict = {}
    for e, c in f.num.to_dict().items():
        ex = tuple(int(v) for v in e[X0:])
        key = tuple(a - b for a, b in zip(ex, m))
        groups.setdefault(key, {})[e[:X0] + (0,) * (len(e) - X0)] = c
    n = N if N is not None else len(m)
    out = {}
    for key, d in groups.items():
        if any(key[n:]):
            raise ValueError("depends on variables beyond x_N or auxiliaries")
        out[key[:n]] = Rat(CTX.from_dict(d), dpoly)
    return out


def is_laurent(f: Rat) -> bool:
    try:
        x_terms(f)
    except ValueError:
        return False
    return True


def monomial_expand(f: Rat, N: int) -> dict[tuple[int, ...], Rat]:
    """Symmetric f -> {lambda (weakly decreasing, length N): coefficient of m_lambda}."""
    return {e: c for e, c in x_terms(f, N).items()
            if all(e[i] >= e[i + 1] for i in range(N - 1))}


def schur_expand(f: Rat, N: int) -> dict[tuple[int, ...], Rat]:
    """Symmetric Laurent f -> {lambda: coefficient of s_lambda} by peeling leading terms."""
    out: dict = {}
    rest = f
    for _ in range(10_000):
        if rest.is_zero():
            return out
        terms = x_terms(rest, N)
        lam = max(terms)
        if any(lam[i] < lam[i + 1] for i in range(N - 1)):
            raise ValueError("not symmetric")
        c = terms[lam]
        out[lam] = c
        rest = rest - c * gen_schur(lam)
    raise RuntimeError("Schur expansion did not terminate")


def _basis_label(lam: Sequence[int], letter: str) -> str:
    lam = list(lam)
    if all(v >= 0 for v in lam):
        while lam and lam[-1] == 0:
            lam.pop()
    return f"{letter}[{','.join(map(str, lam))}]" if lam else ""


def _coeff_prefix(c: Rat) -> tuple[str, str]:
    """Sign and rendered magnitude of a coefficient for use in a sum."""
    s = render(c)
    simple = len(c.num.to_dict()) == 1
    if simple and s.startswith("-"):
        return "-", s[1:]
    if simple:
        return "+", s
    return "+", f"({s})"


def render_sym(f: Rat, N: int, basis: str = "s") -> str:
    """Canonical rendering of a symmetric Laurent polynomial, e.g. ``t*s[2] - s[1,1]``."""
    if f.is_zero():
        return "0"
    exp = schur_expand(f, N) if basis == "s" else monomial_expand(f, N)
    pieces = []
    for lam in sorted(exp, reverse=True):
        sign, mag = _coeff_prefix(exp[lam])
        label = _basis_label(lam, basis)
        if not label:
            body = mag
        elif mag == "1":
            body = label
        else:
            body = f"{mag}*{label}"
        pieces.append((sign, body))
    s = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
    for sign, body in pieces[1:]:
        s += f" {sign} {body}"
    return s


def decreasing_vectors(N: int, lo: int, hi: int) -> Iterator[tuple[int, ...]]:
    def rec(prefix, top):
        if len(prefix) == N:
            yield tuple(prefix)
            return
        for v in range(top, lo - 1, -1):
            yield from rec(prefix + [v], v)
    yield from rec([], hi)


def test_basis(N: int, lo: int = -2, hi: int = 2) -> list[Rat]:
    """1 together with every m_lambda, lambda a decreasing vector in [lo, hi]^N."""
    out = [ONE]
    for lam in decreasing_vectors(N, lo, hi):
        if any(lam):
            out.append(monomial_sym(lam, N))
    return out


def partitions(n: int, max_parts: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of n with at most max_parts parts, padded to length max_parts."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield (0,) * max_parts
        return
    if max_parts == 0:
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, max_parts - 1, first):
            yield (first,) + rest


def dominates(lam: Sequence[int], mu: Sequence[int]) -> bool:
    a = b = 0
    for u, v in zip(lam, mu):
        a += u
        b += v
        if a < b:
            return False
    return True


def hecke_constant_sum(N: int) -> Rat:
    """sum_i prod_{j != i} (theta x_i - x_j/theta) / (x_i - x_j)."""
    thv = th()
    terms = []
    for i in range(1, N + 1):
        c = ONE
        for j in range(1, N + 1):
            if j != i:
                c = c * (thv * x(i) - x(j) / thv) / (x(i) - x(j))
        terms.append(c)
    return rat_sum(terms)


def quantum_integer(N: int) -> Rat:
    """(theta^N - theta^-N) / (theta - theta^-1)."""
    thv = th()
    return (thv ** N - thv ** (-N)) / (thv - 1 / thv)
