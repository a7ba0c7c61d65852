"""Mode calculus for the currents e, f, m and the Cartan series psi^+-.

Conventions fixed here and used by every check:

* e(z) = sum_n z^n e_n, f(z) = sum_n z^n f_n, m(z) = sum_n z^n M_n;
* psi^+(z) = sum_{n>=0} z^n psi^+_n and psi^-(z) = sum_{n>=0} z^-n psi^-_n;
* ``psi_component(sign, k)`` is the coefficient of z^k in psi^sign(z), so it
  is psi^+_k for k >= 0 (else 0) and psi^-_{-k} for k <= 0 (else 0);
* delta(z/w) S(z) = sum_{m,k} z^(m+k) w^-m S_k, so its z^a w^b coefficient is
  S_{a+b}.  With S = psi^+ - psi^- this gives
  [e_a, f_b] = (psi^+_{a+b} - psi^-_{-(a+b)}) / g(1,1);
* g(z,w) = sum_{i+j=3} g_ij z^i w^j, and a relation
  g(z,w) A(z) B(w) + g(w,z) B(w) A(z) = 0 has z^K w^L component
  sum_ij g_ij (A_{K-i} B_{L-j} + B_{L-i} A_{K-j}) = 0.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product

from .coeff import ONE, ZERO, Rat, gen, invert_x, q, q_pow, t, th, x
from .macops import SymShiftOp, build_Dnorm, build_M, build_M_schur, dual_D, dual_M
from .opbase import commutator
from .polyx import is_symmetric, monomial_expand, partitions, power_sum
from .report import Report, Verifier, timed_report


def z() -> Rat:
    return gen("z")


def g_coeffs() -> dict[tuple[int, int], Rat]:
    """g(z,w) = (z - q w)(z - w/t)(z - t w/q) as {(i, j): coefficient of z^i w^j}."""
    qv, tv = q(), t()
    return {
        (3, 0): ONE,
        (2, 1): -(qv + 1 / tv + tv / qv),
        (1, 2): qv / tv + tv + 1 / qv,
        (0, 3): -ONE,
    }


def g_value(zz: Rat, ww: Rat) -> Rat:
    qv, tv = q(), t()
    return (zz - qv * ww) * (zz - ww / tv) * (zz - tv * ww / qv)


def g11() -> Rat:
    return g_value(ONE, ONE)


# -- mode families ---------------------------------------------------------

@lru_cache(maxsize=None)
def e_mode(n: int, N: int) -> SymShiftOp:
    return (q_pow(_half(n + 1)) / (1 - q())) * build_Dnorm(1, n, N)


@lru_cache(maxsize=None)
def f_mode(n: int, N: int) -> SymShiftOp:
    return (q_pow(_half(-(n + 1))) / (1 - 1 / q())) * dual_D(1, n, N)


def m_mode(n: int, N: int) -> SymShiftOp:
    return build_M(1, n, N)


def _half(k: int) -> Fraction:
    return Fraction(k, 2)


class ModeFamily:
    """Lazily built modes of one current on a window [lo, hi]."""

    KINDS = {"e": e_mode, "f": f_mode, "m": m_mode, "m_dual": lambda n, N: dual_M(1, n, N)}

    def __init__(self, kind: str, N: int, window: tuple[int, int]):
        if kind not in self.KINDS:
            raise ValueError(f"unknown current {kind!r}")
        self.kind, self.N, self.window = kind, N, tuple(window)

    def __getitem__(self, n: int) -> SymShiftOp:
        lo, hi = self.window
        if not lo <= n <= hi:
            raise IndexError(f"mode {n} outside window {self.window}")
        return self.KINDS[self.kind](n, self.N)

    def __contains__(self, n: int) -> bool:
        return self.window[0] <= n <= self.window[1]


# -- Cartan series ---------------------------------------------------------

def _factor_series(K: int) -> list[Rat]:
    """Taylor coefficients in y of (1 - q^-1/2 t y)(1 - q^1/2 t^-1 y)/((1 - q^-1/2 y)(1 - q^1/2 y))."""
    a, b = q_pow(_half(-1)) * t(), q_pow(_half(1)) / t()
    c, d = q_pow(_half(-1)), q_pow(_half(1))
    # complete homogeneous h_m(c, d)
    h = [sum((c ** i * d ** (m - i) for i in range(m + 1)), ZERO) for m in range(K + 1)]
    out = []
    for m in range(K + 1):
        v = h[m]
        if m >= 1:
            v = v - (a + b) * h[m - 1]
        if m >= 2:
            v = v + a * b * h[m - 2]
        out.append(v)
    return out


@lru_cache(maxsize=None)
def psi_coeffs(sign: str, K: int, N: int) -> tuple[Rat, ...]:
    """psi^sign_0..psi^sign_K as symmetric Laurent polynomials in x."""
    if sign not in "+-" or len(sign) != 1:
        raise ValueError("sign must be '+' or '-'")
    if K < 0:
        raise ValueError("K must be nonnegative")
    h = _factor_series(K)
    series = [ONE] + [ZERO] * K
    for i in range(1, N + 1):
        xi = x(i) if sign == "+" else 1 / x(i)
        fac = [h[m] * xi ** m for m in range(K + 1)]
        series = [sum((series[j] * fac[m - j] for j in range(m + 1)), ZERO) for m in range(K + 1)]
    return tuple(series)


class PsiSeries:
    def __init__(self, sign: str, K: int, N: int):
        self.sign, self.K, self.N = sign, K, N
        self.coeffs = psi_coeffs(sign, K, N)

    def component(self, k: int) -> Rat:
        """Coefficient of z^k in psi^sign(z)."""
        n = k if self.sign == "+" else -k
        if n < 0:
            return ZERO
        if n > self.K:
            raise IndexError(f"psi^{self.sign}_{n} beyond truncation {self.K}")
        return self.coeffs[n]

    def op(self, k: int) -> SymShiftOp:
        return SymShiftOp.mult(self.N, self.component(k))


def psi_rational(sign: str, N: int) -> Rat:
    """The product defining psi^sign(z) as a rational function of z."""
    a, b = q_pow(_half(-1)) * t(), q_pow(_half(1)) / t()
    c, d = q_pow(_half(-1)), q_pow(_half(1))
    out = ONE
    for i in range(1, N + 1):
        y = z() * x(i) if sign == "+" else 1 / (z() * x(i))
        out = out * (1 - a * y) * (1 - b * y) / ((1 - c * y) * (1 - d * y))
    return out


def _pf_weights(i: int, N: int) -> tuple[Rat, Rat]:
    """The two residue weights attached to x_i in the partial-fraction form."""
    qv, tt = q(), th()
    xi = x(i)
    w_plus, w_minus = ONE, ONE
    for k in range(1, N + 1):
        if k == i:
            continue
        xk = x(k)
        w_plus = w_plus * (tt * xi - xk / tt) / (xi - xk) * (qv * xi / tt - tt * xk) / (qv * xi - xk)
        w_minus = w_minus * (xi * tt / qv - xk / tt) / (xi / qv - xk) * (xi / tt - tt * xk) / (xi - xk)
    return w_plus, w_minus


def psi_partial_fraction(sign: str, N: int) -> Rat:
    const = g11() / ((1 - q()) * (1 - 1 / q()))
    total = ZERO
    for i in range(1, N + 1):
        wp, wm = _pf_weights(i, N)
        if sign == "+":
            total = total + wp / (1 - q_pow(_half(1)) * z() * x(i)) - wm / (1 - q_pow(_half(-1)) * z() * x(i))
        else:
            zi = 1 / (z() * x(i))
            total = total + wp / (1 - q_pow(_half(-1)) * zi) - wm / (1 - q_pow(_half(1)) * zi)
    return ONE + const * total if sign == "+" else ONE - const * total


def psi_partial_fraction_check(N: int, verifier: Verifier | None = None) -> Report:
    v = verifier or Verifier()
    with timed_report("psi-pf", {"N": N, "mode": v.mode}) as rep:
        for sign in "+-":
            rep.add(v.check_equal(f"psi-pf-{sign}-N{N}", psi_rational(sign, N),
                                  psi_partial_fraction(sign, N)))
        const = g11() / ((1 - q()) * (1 - 1 / q()))
        rep.add(v.check_equal("psi-pf-constant", const,
                              (1 - 1 / t()) * (1 - t() / q()) / (1 - 1 / q())))
    return rep


def psi_invariant_checks(N: int, K: int, verifier: Verifier | None = None) -> Report:
    """psi_n^+- symmetric of degree +-n, with as many monomial terms as partitions of n."""
    v = verifier or Verifier()
    with timed_report("psi-coeffs", {"N": N, "K": K, "mode": v.mode}) as rep:
        scalar = (th() - 1 / th()) * (q_pow(_half(1)) / th() - th() / q_pow(_half(1)))
        rep.add(v.check_equal("psi1-plus", psi_coeffs("+", 1, N)[1], scalar * power_sum(1, N)))
        rep.add(v.check_equal("psi1-minus", psi_coeffs("-", 1, N)[1], scalar * power_sum(-1, N)))
        for sign in "+-":
            cs = psi_coeffs(sign, K, N)
            rep.add(v.check_true(f"psi0-{sign}", cs[0] == ONE, str(cs[0])))
            for n in range(1, K + 1):
                c = cs[n] if sign == "+" else _flip(cs[n], N)
                ok = is_symmetric(c, N)
                mono = monomial_expand(c, N) if ok else {}
                count = sum(1 for lam in mono if not mono[lam].is_zero())
                want = sum(1 for _ in partitions(n, N))
                ok = ok and count == want and all(sum(lam) == n for lam in mono)
                rep.add(v.check_true(f"psi{n}-{sign}-shape", ok,
                                     f"{count} monomial terms, expected {want}"))
    return rep


def _flip(c: Rat, N: int) -> Rat:
    return invert_x(c, N)


def normalization_checks(N: int, window: tuple[int, int], verifier: Verifier | None = None) -> Report:
    """m(z) and its dual against e(q^-1/2 z), f(q^-1/2 z), mode by mode."""
    v = verifier or Verifier()
    lo, hi = window
    with timed_report("normalization", {"N": N, "window": list(window), "mode": v.mode}) as rep:
        for n in range(lo, hi + 1):
            rhs = ((1 - q()) / q_pow(_half(1)) * th() ** (N - 1) * q_pow(_half(-n))) * e_mode(n, N)
            rep.add(v.check_equal(f"m-from-e-{n}", build_M(1, n, N), rhs))
            lhs = q() ** (-n) * dual_M(1, n, N)
            rhs = ((1 - 1 / q()) * q_pow(_half(1)) * th() ** (1 - N) * q_pow(_half(-n))) * f_mode(n, N)
            rep.add(v.check_equal(f"mdual-from-f-{n}", lhs, rhs))
    return rep


# -- quadratic relations -----------------------------------------------------

def mu(a: int, b: int, N: int) -> SymShiftOp:
    """The exchange combination of the M_n = M_{1;n}."""
    qv, tv = q(), t()
    M = lambda n: build_M(1, n, N)  # noqa: E731
    return ((qv * tv) * (M(a - 3) * M(b))
            - (tv ** 2 + qv ** 2 * tv + qv) * (M(a - 2) * M(b - 1))
            + (qv * tv ** 2 + tv + qv ** 2) * (M(a - 1) * M(b - 2))
            - (qv * tv) * (M(a) * M(b - 3)))


def _g_relation(A, B, K: int, L: int, swap_g: bool = False):
    """z^K w^L component of g(z,w)A(z)B(w) + g(w,z)B(w)A(z) (g's arguments swapped if asked)."""
    total = None
    for (i, j), c in g_coeffs().items():
        if swap_g:
            i, j = j, i
        term = c * (A(K - i) * B(L - j) + B(L - i) * A(K - j))
        total = term if total is None else total + term
    return total


def check_exchange(window: tuple[int, int], N: int, verifier: Verifier | None = None) -> Report:
    v = verifier or Verifier()
    lo, hi = window
    with timed_report("exchange", {"N": N, "window": list(window), "mode": v.mode}) as rep:
        for a in range(lo, hi + 1):
            for b in range(a, hi + 1):
                rep.add(v.check_zero(f"mu-{a},{b}", mu(a, b, N) + mu(b, a, N)))
        # the same relation written for e and f directly
        for K in range(lo, hi + 1):
            for L in range(K, hi + 1):
                rep.add(v.check_zero(f"ee-{K},{L}", _g_relation(lambda n: e_mode(n, N),
                                                                lambda n: e_mode(n, N), K, L)))
                rep.add(v.check_zero(f"ff-{K},{L}", _g_relation(lambda n: f_mode(n, N),
                                                                lambda n: f_mode(n, N), K, L,
                                                                swap_g=True)))
    return rep


def ef_rhs(a: int, b: int, N: int, K: int) -> SymShiftOp:
    s = a + b
    if abs(s) > K:
        raise IndexError(f"|a+b| = {abs(s)} exceeds the psi truncation {K}")
    plus, minus = PsiSeries("+", K, N), PsiSeries("-", K, N)
    return (1 / g11()) * SymShiftOp.mult(N, plus.component(s) - minus.component(s))


def check_ef_commutator(window: tuple[int, int], K: int, N: int,
                        verifier: Verifier | None = None) -> Report:
    v = verifier or Verifier()
    lo, hi = window
    with timed_report("ef", {"N": N, "window": list(window), "K": K, "mode": v.mode}) as rep:
        for a, b in product(range(lo, hi + 1), repeat=2):
            if abs(a + b) > K:
                continue
            lhs = commutator(e_mode(a, N), f_mode(b, N))
            rep.add(v.check_equal(f"ef-{a},{b}", lhs, ef_rhs(a, b, N, K)))
    return rep


def _psi_check(kind: str, window, K: int, N: int, verifier: Verifier | None) -> Report:
    v = verifier or Verifier()
    lo, hi = window
    mode = e_mode if kind == "e" else f_mode
    with timed_report(f"psi-{kind}", {"N": N, "window": list(window), "K": K, "mode": v.mode}) as rep:
        for sign in "+-":
            # psi components up to order K are needed, shifted by at most 3
            series = PsiSeries(sign, K + 3, N)
            ks = range(0, K + 1) if sign == "+" else range(-K, 1)
            for k, b in product(ks, range(lo, hi + 1)):
                A = series.op
                B = lambda n: mode(n, N)  # noqa: E731
                expr = _g_relation(A, B, k, b, swap_g=(kind == "f"))
                rep.add(v.check_zero(f"psi{sign}-{kind}-{k},{b}", expr))
    return rep


def check_psi_e(window, K: int, N: int, verifier: Verifier | None = None) -> Report:
    return _psi_check("e", window, K, N, verifier)


def check_psi_f(window, K: int, N: int, verifier: Verifier | None = None) -> Report:
    return _psi_check("f", window, K, N, verifier)


# -- Serre relations ---------------------------------------------------------

def serre_component(mode, n1: int, n2: int, n3: int):
    """sum over S_3 of [e_{n_s1}, [e_{n_s2 - 1}, e_{n_s3 + 1}]].

    This is the z1^n1 z2^n2 z3^n3 coefficient of
    Sym_{z1,z2,z3} (z2/z3) [e(z1), [e(z2), e(z3)]] for e(z) = sum z^n e_n;
    ``mode`` maps n to e_n and only needs * and -.
    """
    ns = (n1, n2, n3)
    total = None
    for s in permutations(range(3)):
        a, b, c = ns[s[0]], ns[s[1]] - 1, ns[s[2]] + 1
        term = commutator(mode(a), commutator(mode(b), mode(c)))
        total = term if total is None else total + term
    return total


def check_serre(window: tuple[int, int], N: int, verifier: Verifier | None = None) -> Report:
    v = verifier or Verifier()
    lo, hi = window
    with timed_report("serre", {"N": N, "window": list(window), "mode": v.mode}) as rep:
        for kind, mode in (("e", e_mode), ("f", f_mode)):
            for n1, n2, n3 in product(range(lo, hi + 1), repeat=3):
                if not n1 <= n2 <= n3:
                    continue  # the component is symmetric in (n1, n2, n3)
                expr = serre_component(lambda n: mode(n, N), n1, n2, n3)
                rep.add(v.check_zero(f"serre-{kind}-{n1},{n2},{n3}", expr))
    return rep


# -- plethysm and commuting family ---------------------------------------------

def check_plethysm_commutator(k: int, n: int, N: int, verifier: Verifier | None = None) -> Report:
    if k == 0:
        raise ValueError("k must be nonzero")
    v = verifier or Verifier()
    pk = SymShiftOp.mult(N, power_sum(k, N))
    with timed_report("plethysm", {"k": k, "n": n, "N": N, "mode": v.mode}) as rep:
        rep.add(v.check_equal(f"pk-D-{k},{n}", commutator(pk, build_Dnorm(1, n, N)),
                              (1 - q() ** k) * build_Dnorm(1, n + k, N)))
        rep.add(v.check_equal(f"pk-Ddual-{k},{n}", commutator(pk, dual_D(1, n, N)),
                              (1 - q() ** (-k)) * dual_D(1, n + k, N)))
    return rep


def commuting_family_check(N: int, verifier: Verifier | None = None,
                           n_window: tuple[int, int] = (-1, 1)) -> Report:
    v = verifier or Verifier()
    M = lambda n: build_M(1, n, N)  # noqa: E731
    S = lambda *a: build_M_schur(tuple(a), N)  # noqa: E731
    with timed_report("commuting", {"N": N, "mode": v.mode}) as rep:
        rep.add(v.check_zero("M0-M00", commutator(M(0), S(0, 0))))
        rep.add(v.check_zero("M0-M10+M1-M00", commutator(M(0), S(1, 0)) + commutator(M(1), S(0, 0))))
        rep.add(v.check_zero("M0-M11+M1-M10", commutator(M(0), S(1, 1)) + commutator(M(1), S(1, 0))))
        rep.add(v.check_zero("M1-M11", commutator(M(1), S(1, 1))))
        for n in range(n_window[0], n_window[1] + 1):
            for a in range(1, N + 1):
                for b in range(a + 1, N + 2):
                    rep.add(v.check_zero(f"M{a};{n}-M{b};{n}",
                                         commutator(build_M(a, n, N), build_M(b, n, N))))
    return rep
