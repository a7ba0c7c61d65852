"""Shuffle product on symmetric rational functions and its t -> infinity limit.

P * P' = (1/(a! b!)) Sym( P(x_1..x_a) P'(x_{a+1}..x_{a+b}) prod_{i<=a<j} zeta(x_i/x_j) )

with Sym the plain orbit sum.  Because P, P' are symmetric, the a! b!
permutations inside each coset give equal terms, so the product is computed as
a sum over the binomial(a+b, a) coset representatives.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from itertools import combinations, permutations

from .coeff import INDEX, ONE, ZERO, Rat, gen, perm_shift, q, rat_sum, substitute, t, t_leading, x
from .macops import SymShiftOp, build_D
from .polyx import gen_schur, is_symmetric, symmetrize
from .report import Check, Report, Verifier, timed_report


@dataclass(frozen=True)
class ShufElem:
    arity: int
    value: Rat

    def __mul__(self, other: "ShufElem") -> "ShufElem":
        return shuffle(self, other)

    def __matmul__(self, other: "ShufElem") -> "ShufElem":
        return star(self, other)


def one(arity: int) -> ShufElem:
    return ShufElem(arity, ONE)


def x_power_prod(arity: int, n: int) -> ShufElem:
    """(x_1 ... x_arity)^n."""
    v = ONE
    for k in range(1, arity + 1):
        v = v * x(k)
    return ShufElem(arity, v ** n)


def zeta(r: Rat) -> Rat:
    """(1 - t r)(t - q r) / ((1 - r)(1 - q r))."""
    return (1 - t() * r) * (t() - q() * r) / ((1 - r) * (1 - q() * r))


def zeta_pair(i: int, j: int) -> Rat:
    """zeta(x_i / x_j)."""
    return zeta(x(i) / x(j))


def star_pair(i: int, j: int) -> Rat:
    """1 / ((1/x_j - 1/x_i)(x_j - q x_i))."""
    return 1 / ((1 / x(j) - 1 / x(i)) * (x(j) - q() * x(i)))


def _shift_up(P: Rat, by: int, total: int) -> Rat:
    """P(x_1..x_b) -> P(x_{by+1}..x_{by+b})."""
    perm = tuple((k + by) % total for k in range(total))
    return perm_shift(P, perm, (0,) * total)


def _seed(P: ShufElem, P2: ShufElem, pair) -> Rat:
    a, b = P.arity, P2.arity
    n = a + b
    F = P.value * _shift_up(P2.value, a, n) if n else P.value * P2.value
    for i in range(1, a + 1):
        for j in range(a + 1, n + 1):
            F = F * pair(i, j)
    return F


def _coset_sum(F: Rat, a: int, n: int) -> Rat:
    terms = []
    zero = (0,) * n
    for S in combinations(range(n), a):
        rest = tuple(k for k in range(n) if k not in S)
        terms.append(perm_shift(F, tuple(S) + rest, zero))
    return rat_sum(terms)


def _product(P: ShufElem, P2: ShufElem, pair) -> ShufElem:
    n = P.arity + P2.arity
    if n > 6:
        raise ValueError("at most six variables are available")
    F = _seed(P, P2, pair)
    return ShufElem(n, _coset_sum(F, P.arity, n))


def shuffle(P: ShufElem, P2: ShufElem) -> ShufElem:
    return _product(P, P2, zeta_pair)


def star(P: ShufElem, P2: ShufElem) -> ShufElem:
    return _product(P, P2, star_pair)


def shuffle_by_full_sym(P: ShufElem, P2: ShufElem, pair=zeta_pair) -> ShufElem:
    """Oracle: normalized sum over all of S_{a+b}."""
    n = P.arity + P2.arity
    F = _seed(P, P2, pair)
    norm = math.factorial(P.arity) * math.factorial(P2.arity)
    return ShufElem(n, symmetrize(F, n) / norm)


def star_limit(P: ShufElem, P2: ShufElem) -> tuple[int | float, Rat]:
    """t_leading of P * P'; the star product is the lead when halfdeg = 4ab."""
    return t_leading(shuffle(P, P2).value)


# -- operator morphism ------------------------------------------------------

def squarefree_part(op: SymShiftOp) -> SymShiftOp:
    """Terms whose shift vector has entries in {0, 1} (no Gamma_i^2 and higher)."""
    return SymShiftOp(op.N, {k: c for k, c in op.terms.items() if max(k, default=0) <= 1})


def verify_morphism(P: ShufElem, P2: ShufElem, N: int, verifier: Verifier | None = None,
                    name: str = "morphism", part: str = "full") -> Check:
    """D_a(P) D_b(P') against D_{a+b}(P * P') as normal-form operators.

    ``part="full"`` compares the whole product.  The product always carries
    Gamma_i^2 terms with coefficient P(x_i)P'(q x_i) c_i Gamma_i(c_i) (for
    a = b = 1) that no D_{a+b} can produce, so this form fails whenever a + b
    <= N.  ``part="distinct"`` compares only the square-free shifts, where the
    identity holds exactly.
    """
    if part not in ("full", "distinct"):
        raise ValueError(f"unknown part {part!r}")
    v = verifier or Verifier()
    try:
        lhs = build_D(P.arity, P.value, N) * build_D(P2.arity, P2.value, N)
        rhs = build_D(P.arity + P2.arity, shuffle(P, P2).value, N)
    except Exception as exc:
        return Check(name, "error", f"{type(exc).__name__}: {exc}")
    if part == "distinct":
        lhs = squarefree_part(lhs)
    return v.check_equal(name, lhs, rhs)


def random_sym(arity: int, rng: random.Random, lo: int = -1, hi: int = 1) -> ShufElem:
    """A random symmetric Laurent polynomial with small integer coefficients."""
    from .polyx import decreasing_vectors, monomial_sym
    vecs = list(decreasing_vectors(arity, lo, hi))
    val = ZERO
    for lam in rng.sample(vecs, min(2, len(vecs))):
        val = val + rng.choice((1, -1, 2, 3)) * monomial_sym(lam, arity)
    if val.is_zero():
        val = ONE
    return ShufElem(arity, val)


def morphism_suite(N: int, pairs: int = 10, seed: int = 0, verifier: Verifier | None = None,
                   max_arity: int = 3) -> Report:
    v = verifier or Verifier()
    rng = random.Random(seed)
    shapes = [(a, b) for a in range(1, max_arity) for b in range(1, max_arity) if a + b <= max_arity]
    with timed_report("morphism", {"N": N, "pairs": pairs, "seed": seed, "mode": v.mode}) as rep:
        cases = [("1x1-units", one(1), one(1)),
                 ("x-by-xinv", ShufElem(1, x(1)), ShufElem(1, 1 / x(1)))]
        for k in range(pairs):
            a, b = shapes[k % len(shapes)]
            cases.append((f"random-{k:02d}-{a}x{b}", random_sym(a, rng), random_sym(b, rng)))
        for label, P, P2 in cases:
            rep.add(verify_morphism(P, P2, N, v, f"morphism-distinct-{label}", part="distinct"))
            rep.add(verify_morphism(P, P2, N, v, f"morphism-full-{label}", part="full"))
        for a in range(1, 3):
            for b in range(1, 3):
                if a + b <= N:
                    lhs = build_D(a, ONE, N) * build_D(b, ONE, N)
                    rhs = build_D(b, ONE, N) * build_D(a, ONE, N)
                    rep.add(v.check_equal(f"commuting-units-{a}x{b}", lhs, rhs))
        if N + 1 <= 4:
            a, b = 1, N
            lhs = build_D(a, ONE, N) * build_D(b, ONE, N)
            # no N+1 distinct indices exist, so only repeated shifts survive
            rep.add(v.check_zero(f"morphism-overflow-distinct-{a}+{b}", squarefree_part(lhs)))
            rep.add(v.check_true(f"morphism-overflow-rhs-{a}+{b}",
                                 build_D(a + b, shuffle(one(a), one(b)).value, N).is_zero()))
    return rep


# -- identity suite ---------------------------------------------------------

def _v(k: int) -> Rat:
    return gen(f"v{k}")


def serre_kernel(order) -> Rat:
    """prod_{i<j} (t v_j - v_i)(t v_i - q v_j)/((v_i - q v_j)(v_j - v_i)) in the variable order given."""
    vs = [_v(k) for k in order]
    out = ONE
    for i in range(3):
        for j in range(i + 1, 3):
            vi, vj = vs[i], vs[j]
            out = out * (t() * vj - vi) * (t() * vi - q() * vj) / ((vi - q() * vj) * (vj - vi))
    return out


def _sym_v(F: Rat) -> Rat:
    idx = [INDEX[f"v{k}"] for k in (1, 2, 3)]
    terms = []
    for p in permutations(range(3)):
        terms.append(substitute(F, {idx[k]: _v(p[k] + 1) for k in range(3)}))
    return rat_sum(terms)


def serre_shuffle_expr() -> Rat:
    """Sym_v( (v2/v3) (K(123) - K(132) - K(231) + K(321)) ).

    K(abc) is the kernel of delta(v_a x)*delta(v_b x)*delta(v_c x), so the
    bracket is the kernel of [d1, [d2, d3]] = d1*(d2*d3 - d3*d2) - (d2*d3 - d3*d2)*d1.
    """
    inner = serre_kernel((1, 2, 3)) - serre_kernel((1, 3, 2)) - serre_kernel((2, 3, 1)) + serre_kernel((3, 2, 1))
    return _sym_v(_v(2) / _v(3) * inner)


def _xp(n: int) -> ShufElem:
    return ShufElem(1, x(1) ** n)


def _s2(a: int, b: int) -> Rat:
    return gen_schur((a, b))


def odd_gap_form(n: int, k: int) -> Rat:
    lhs = rat_sum((shuffle(_xp(n + 2 * k - 2 * l), _xp(n + 2 * l + 1)).value
                   - q() * shuffle(_xp(n + 2 * k - 2 * l + 1), _xp(n + 2 * l)).value) for l in range(k + 1))
    return lhs - (1 - q()) * t() * _s2(n + 2 * k + 1, n)


def even_gap_form(n: int, k: int, kind: int) -> Rat:
    """kind 0: the gap 4k relation; kind 2: the gap 4k+2 relation."""
    def nu_pair(a, b):
        return shuffle(_xp(a), _xp(b)).value - q() * shuffle(_xp(a + 1), _xp(b - 1)).value
    if kind == 0:
        lhs = rat_sum(nu_pair(n + 4 * k - 1 - 2 * l, n + 2 * l + 1) + nu_pair(n + 2 * l, n + 4 * k - 2 * l)
                      for l in range(k))
        rhs = (1 - q()) * t() * (_s2(n + 4 * k, n) - _s2(n + 2 * k, n + 2 * k))
    else:
        lhs = rat_sum(nu_pair(n + 4 * k + 1 - 2 * l, n + 2 * l + 1) + nu_pair(n + 2 * l, n + 4 * k + 2 - 2 * l)
                      for l in range(k + 1))
        rhs = (1 - q()) * t() * (_s2(n + 4 * k + 2, n) + _s2(n + 2 * k + 1, n + 2 * k + 1))
    return lhs - rhs


def even_lemma_forms(n: int) -> tuple[Rat, Rat]:
    qv, tv = q(), t()
    a = (shuffle(_xp(n), _xp(n)).value - qv * shuffle(_xp(n + 1), _xp(n - 1)).value
         - (qv + tv + tv ** 2) * _s2(n, n) + qv * tv * _s2(n + 1, n - 1))
    b = (shuffle(_xp(n), _xp(n)).value - shuffle(_xp(n - 1), _xp(n + 1)).value / qv
         - (1 + tv + tv ** 2 / qv) * _s2(n, n) + tv / qv * _s2(n + 1, n - 1))
    return a, b


def comac_form(a: int, b: int) -> Rat:
    return shuffle(one(a), one(b)).value - shuffle(one(b), one(a)).value


def msystem_star_forms(alpha: int, beta: int, n: int, p: int):
    """Yield (name, expression that must vanish) for the star-algebra M-system relations."""
    X = x_power_prod
    if abs(p - n) <= abs(alpha - beta) + 1:
        yield (f"star-qcomm-a{alpha}-b{beta}-n{n}-p{p}",
               star(X(alpha, n), X(beta, p)).value
               - q() ** (min(alpha, beta) * (p - n)) * star(X(beta, p), X(alpha, n)).value)
    if alpha == beta and p == n:
        yield (f"star-msys-a{alpha}-n{n}",
               q() ** alpha * star(X(alpha, n + 1), X(alpha, n - 1)).value
               - star(X(alpha, n), X(alpha, n)).value
               + star(X(alpha + 1, n), X(alpha - 1, n)).value)


def shuffle_identity_suite(window=(-2, 2), kwin=(0, 1), verifier: Verifier | None = None) -> Report:
    v = verifier or Verifier()
    lo, hi = window
    with timed_report("shuffle", {"window": list(window), "k": list(kwin), "mode": v.mode}) as rep:
        rep.add(v.check_zero("a-serre-kernel", serre_shuffle_expr()))
        for n in range(lo, hi + 1):
            for k in range(kwin[0], kwin[1] + 1):
                rep.add(v.check_zero(f"b-odd-gap-n{n}-k{k}", odd_gap_form(n, k)))
                rep.add(v.check_zero(f"b-even-gap0-n{n}-k{k}", even_gap_form(n, k, 0)))
                rep.add(v.check_zero(f"b-even-gap2-n{n}-k{k}", even_gap_form(n, k, 2)))
            e1, e2 = even_lemma_forms(n)
            rep.add(v.check_zero(f"b-even-lemma-1-n{n}", e1))
            rep.add(v.check_zero(f"b-even-lemma-2-n{n}", e2))
        for a, b in ((1, 1), (1, 2), (2, 2)):
            rep.add(v.check_zero(f"c-units-commute-{a}-{b}", comac_form(a, b)))
        for alpha in (1, 2):
            for beta in (1, 2):
                for n in range(max(lo, -1), min(hi, 1) + 1):
                    for p in range(max(lo, -1), min(hi, 1) + 1):
                        for name, expr in msystem_star_forms(alpha, beta, n, p):
                            rep.add(v.check_zero("d-" + name, expr))
        qv, tv = q(), t()
        u, w = gen("z"), gen("w")
        g = (u - qv * w) * (u - w / tv) * (u - tv * w / qv)
        gs = (w - qv * u) * (w - u / tv) * (w - tv * u / qv)
        kern = g * (u - tv * w) * (tv * u - qv * w) / ((u - w) * (u - qv * w))
        kern_s = gs * (w - tv * u) * (tv * w - qv * u) / ((w - u) * (w - qv * u))
        rep.add(v.check_zero("exchange-kernel-skew", kern + kern_s))
    return rep
