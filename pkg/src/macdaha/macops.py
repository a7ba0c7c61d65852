"""Generalized Macdonald difference operators.

A :class:`SymShiftOp` is a finite sum  c_nu(x) Gamma^nu  (no permutations),
keyed by the shift vector nu.  Composition pulls coefficients left through
the shift:  (c1 G^nu1)(c2 G^nu2) = c1 * G^nu1(c2) * G^(nu1+nu2).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product as iproduct

from .coeff import (
    INDEX, ONE, ZERO, Rat, gen, invert_x, perm_shift, q, q_pow, substitute, t, t_leading, th, x,
)
from .opbase import ShiftOperator
from .polyx import (
    elementary, gen_schur, is_symmetric, monomial_expand, monomial_sym, partitions,
)
from .report import Check, Report, Verifier, timed_report


class SymShiftOp(ShiftOperator):
    __slots__ = ()

    def _identity_key(self):
        return (0,) * self.N

    def _key_compose(self, k1, k2):
        return tuple(a + b for a, b in zip(k1, k2))

    def _apply_key(self, key, f):
        if not any(key):
            return f
        return perm_shift(f, tuple(range(self.N)), key)

    @classmethod
    def shift(cls, N: int, nu, c: Rat | int = 1):
        c = c if isinstance(c, Rat) else Rat(c)
        return cls(N, {tuple(nu): c})


class DivergentLimit(ArithmeticError):
    pass


def _indicator(I, N, sign=1):
    return tuple(sign if k in I else 0 for k in range(N))


@lru_cache(maxsize=None)
def _kernel(I: tuple[int, ...], N: int, inverse: bool = False) -> Rat:
    """prod_{i in I, j not in I} (t x_i - x_j)/(x_i - x_j); with inverse, t -> 1/t."""
    tv = t() if not inverse else 1 / t()
    out = ONE
    for i in I:
        for j in range(N):
            if j not in I:
                out = out * (tv * x(i + 1) - x(j + 1)) / (x(i + 1) - x(j + 1))
    return out


def _place(P: Rat, I: tuple[int, ...], N: int) -> Rat:
    """P(x_I) for P a function of x_1..x_alpha."""
    rest = [k for k in range(N) if k not in I]
    return perm_shift(P, tuple(I) + tuple(rest), (0,) * N)


def build_D(alpha: int, P: Rat | int, N: int) -> SymShiftOp:
    """sum_{|I|=alpha} P(x_I) prod_{i in I, j not in I}(t x_i - x_j)/(x_i - x_j) Gamma_I."""
    P = P if isinstance(P, Rat) else Rat(P)
    if alpha > N:
        return SymShiftOp.zero(N)
    if alpha == 0:
        return SymShiftOp.mult(N, P)
    terms = {}
    for I in combinations(range(N), alpha):
        terms[_indicator(I, N)] = _place(P, I, N) * _kernel(I, N)
    return SymShiftOp(N, terms)


def x_prod(alpha: int) -> Rat:
    out = ONE
    for k in range(1, alpha + 1):
        out = out * x(k)
    return out


@lru_cache(maxsize=None)
def build_M(alpha: int, n: int, N: int) -> SymShiftOp:
    return build_D(alpha, x_prod(alpha) ** n, N)


@lru_cache(maxsize=None)
def build_M_schur(a: tuple[int, ...], N: int) -> SymShiftOp:
    a = tuple(a)
    return build_D(len(a), gen_schur(a), N)


def build_Dnorm(alpha: int, n: int, N: int) -> SymShiftOp:
    """The theta-normalized operator: theta^(-alpha(N-alpha)) M_{alpha;n}."""
    if alpha > N:
        return SymShiftOp.zero(N)
    return th() ** (-alpha * (N - alpha)) * build_M(alpha, n, N)


@lru_cache(maxsize=None)
def dual_M(alpha: int, n: int, N: int) -> SymShiftOp:
    """sum_I x_I^n prod (x_i/t - x_j)/(x_i - x_j) Gamma_I^-1."""
    if alpha > N:
        return SymShiftOp.zero(N)
    if alpha == 0:
        return SymShiftOp.identity(N)
    terms = {}
    P = x_prod(alpha) ** n
    for I in combinations(range(N), alpha):
        terms[_indicator(I, N, -1)] = _place(P, I, N) * _kernel(I, N, inverse=True)
    return SymShiftOp(N, terms)


def dual_D(alpha: int, n: int, N: int) -> SymShiftOp:
    """sum_I x_I^n prod (x_i/theta - theta x_j)/(x_i - x_j) Gamma_I^-1."""
    if alpha > N:
        return SymShiftOp.zero(N)
    return th() ** (alpha * (N - alpha)) * dual_M(alpha, n, N)


def reflect(op: SymShiftOp) -> SymShiftOp:
    """S op S with S: x_i -> 1/x_i; S Gamma^nu S = Gamma^-nu."""
    return SymShiftOp(op.N, {tuple(-v for v in nu): invert_x(c, op.N) for nu, c in op.terms.items()})


def A_op(N: int, power: int = 1) -> SymShiftOp:
    return SymShiftOp.mult(N, x_prod(N) ** power)


def Delta_op(N: int, power: int = 1) -> SymShiftOp:
    return SymShiftOp.shift(N, (power,) * N)


# -- t -> infinity --------------------------------------------------------

@dataclass(frozen=True)
class ScaledOp:
    """The object t^(-t_scale) * op, to be sent to t -> infinity."""
    op: SymShiftOp
    t_scale: int


def t_infty(s: ScaledOp) -> SymShiftOp:
    """Coefficientwise limit of t^(-s) op; raises DivergentLimit if some term grows."""
    out = {}
    for nu, c in s.op.terms.items():
        h, lead = t_leading(c)
        if h > 2 * s.t_scale:
            raise DivergentLimit(f"coefficient of Gamma^{nu} grows like theta^{h} > theta^{2 * s.t_scale}")
        if h == 2 * s.t_scale:
            out[nu] = lead
    return SymShiftOp(s.op.N, out)


@lru_cache(maxsize=None)
def _tinf_kernel(I: tuple[int, ...], N: int) -> Rat:
    out = ONE
    for i in I:
        for j in range(N):
            if j not in I:
                out = out * x(i + 1) / (x(i + 1) - x(j + 1))
    return out


@lru_cache(maxsize=None)
def build_M_tinf(alpha: int, n: int, N: int) -> SymShiftOp:
    """sum_I x_I^n prod_{i in I, j not in I} x_i/(x_i - x_j) Gamma_I."""
    if alpha > N or alpha < 0:
        return SymShiftOp.zero(N)
    if alpha == 0:
        return SymShiftOp.identity(N)
    P = x_prod(alpha) ** n
    return SymShiftOp(N, {_indicator(I, N): _place(P, I, N) * _tinf_kernel(I, N)
                          for I in combinations(range(N), alpha)})


# -- constant-term form -----------------------------------------------------

class CTConsistencyError(RuntimeError):
    pass


@lru_cache(maxsize=None)
def _u(k: int) -> Rat:
    return gen(f"u{k}")


def ct_kernel(alpha: int, P: Rat) -> Rat:
    """P(1/u) prod_{i<j} (u_i-u_j)(u_i-q u_j)/((u_i-t u_j)(t u_i-q u_j))."""
    u = [_u(k) for k in range(1, alpha + 1)]
    Pu = substitute(P, {INDEX[f"x{k}"]: 1 / u[k - 1] for k in range(1, alpha + 1)})
    K = Pu
    qv, tv = q(), t()
    for i in range(alpha):
        for j in range(i + 1, alpha):
            K = K * (u[i] - u[j]) * (u[i] - qv * u[j]) / ((u[i] - tv * u[j]) * (tv * u[i] - qv * u[j]))
    return K


def ct_operator(alpha: int, P: Rat | int, N: int) -> SymShiftOp:
    """(1/alpha!) CT_u( kernel * m(u_1) ... m(u_alpha) ) by the delta calculus.

    m(u) = sum_i delta(u x_i) c_i Gamma_i with c_i = prod_{j != i}(t x_i - x_j)/(x_i - x_j).
    Moving the shifts of an index tuple (i_1..i_alpha) to the right turns the
    k-th delta into delta(u_k q^{r_k} x_{i_k}), r_k = #{l < k : i_l = i_k},
    and the k-th coefficient into Gamma_{i_1}..Gamma_{i_{k-1}}(c_{i_k}).  The
    constant term then substitutes u_k = 1/(q^{r_k} x_{i_k}).  Tuples with a
    repeated index must give zero; that is asserted, not assumed.
    """
    P = P if isinstance(P, Rat) else Rat(P)
    if alpha > 4:
        raise ValueError("at most four auxiliary variables are available")
    K = ct_kernel(alpha, P)
    c = [_kernel((i,), N) for i in range(N)]
    pairs = []
    for tup in iproduct(range(N), repeat=alpha):
        shift = [0] * N
        coeff = ONE
        images = {}
        for k, i in enumerate(tup):
            r = shift[i]
            coeff = coeff * perm_shift(c[i], tuple(range(N)), tuple(shift))
            images[INDEX[f"u{k + 1}"]] = 1 / (q() ** r * x(i + 1))
            shift[i] += 1
        val = substitute(K, images)
        if len(set(tup)) < len(tup):
            if not val.is_zero():
                raise CTConsistencyError(f"repeated-index tuple {tup} does not vanish")
            continue
        pairs.append((tuple(shift), val * coeff))
    op = SymShiftOp.collect(N, pairs)
    return Rat(1) / math.factorial(alpha) * op


def apply_ct_form(alpha: int, P: Rat | int, f: Rat, N: int) -> Rat:
    return ct_operator(alpha, P, N).act(f)


# -- checks ----------------------------------------------------------------

def dofm_rhs(n: int, N: int) -> SymShiftOp:
    """(t^N/(t-1)) sum_j (-1/t)^j e_j M_{1;n-j} with M the t -> infinity operators."""
    tv = t()
    total = SymShiftOp.zero(N)
    for j in range(N + 1):
        total = total + ((-1 / tv) ** j * elementary(j, N)) * build_M_tinf(1, n - j, N)
    return (tv ** N / (tv - 1)) * total


def verify_DofM(n: int, N: int, verifier: Verifier | None = None) -> Report:
    v = verifier or Verifier()
    with timed_report("dofm", {"n": n, "N": N, "mode": v.mode}) as rep:
        rep.add(v.check_equal(f"DofM-N{N}-n{n}", build_M(1, n, N), dofm_rhs(n, N)))
    return rep


def eigenvalue(lam, alpha: int, N: int) -> Rat:
    """theta^(alpha(N-alpha)) e_alpha(t^((N+1)/2 - i) q^(lam_i))."""
    lam = tuple(lam) + (0,) * (N - len(lam))
    ys = [th() ** (N + 1 - 2 * i) * q() ** lam[i - 1] for i in range(1, N + 1)]
    e = ZERO
    for S in combinations(range(N), alpha):
        term = ONE
        for k in S:
            term = term * ys[k]
        e = e + term
    return th() ** (alpha * (N - alpha)) * e


class EigenError(RuntimeError):
    pass


def macdonald_P(lam, N: int) -> Rat:
    """Monic eigenvector of M_{1;0} triangular in the monomial basis, led by m_lam."""
    lam = tuple(lam) + (0,) * (N - len(lam))
    size = sum(lam)
    M = build_M(1, 0, N)
    lower = sorted((mu for mu in partitions(size, N) if _dominated(mu, lam)), reverse=True)
    images = {mu: monomial_expand(M.act(monomial_sym(mu, N)), N) for mu in lower}
    for mu, img in images.items():
        for nu in img:
            if not _dominated(nu, mu):
                raise EigenError(f"M m_{mu} has a component m_{nu} outside the dominance order")
    diag = {mu: images[mu].get(mu, ZERO) for mu in lower}
    coef = {lam: ONE}
    for mu in lower[1:]:
        gap = diag[lam] - diag[mu]
        if gap.is_zero():
            raise EigenError(f"eigenvalue of m_{mu} coincides with that of m_{lam}")
        acc = ZERO
        for nu, a in coef.items():
            acc = acc + a * images[nu].get(mu, ZERO)
        coef[mu] = acc / gap
    out = ZERO
    for mu, a in coef.items():
        out = out + a * monomial_sym(mu, N)
    return out


def _dominated(mu, lam) -> bool:
    a = b = 0
    for u, v in zip(mu, lam):
        a += u
        b += v
        if a > b:
            return False
    return True


def macdonald_eigen_check(lam, alpha: int, N: int, verifier: Verifier | None = None) -> Report:
    v = verifier or Verifier()
    lam = tuple(lam)
    with timed_report("eigen", {"lambda": list(lam), "alpha": alpha, "N": N, "mode": v.mode}) as rep:
        try:
            P = macdonald_P(lam, N)
        except EigenError as exc:
            from .report import Check
            rep.add(Check(f"eigen-{lam}-a{alpha}", "error", str(exc)))
            return rep
        lhs = build_M(alpha, 0, N).act(P)
        rep.add(v.check_true(f"P{lam}-symmetric", is_symmetric(P, N), "oracle output not symmetric"))
        rep.add(v.check_equal(f"eigen-{'-'.join(map(str, lam))}-a{alpha}", lhs,
                              eigenvalue(lam, alpha, N) * P))
    return rep


def eigen_suite(N: int = 2, lams=((0, 0), (1, 0), (2, 0), (1, 1), (2, 1)),
                verifier: Verifier | None = None) -> Report:
    """Eigenvalue checks for every alpha, plus M_{1;2} acting on 1."""
    v = verifier or Verifier()
    tv = t()
    with timed_report("eigen", {"N": N, "lambdas": [list(l) for l in lams], "mode": v.mode}) as rep:
        for lam in lams:
            for alpha in range(1, N + 1):
                rep.checks.extend(macdonald_eigen_check(lam, alpha, N, v).checks)
        expected = tv ** (N - 1) * gen_schur((2,) + (0,) * (N - 1))
        if N >= 2:
            expected = expected - tv ** (N - 2) * gen_schur((1, 1) + (0,) * (N - 2))
        rep.add(v.check_equal(f"M2-on-1-N{N}", build_M(1, 2, N).act(ONE), expected))
    return rep


def ct_form_suite(N: int = 3, n_window=(-1, 2), box=(-2, 2), verifier: Verifier | None = None) -> Report:
    """Constant-term formula against direct action, and vanishing past alpha = N."""
    from .polyx import test_basis

    v = verifier or Verifier()
    cases = [(1, x(1) ** n, f"x^{n}") for n in range(n_window[0], n_window[1] + 1)]
    cases += [(2, ONE, "1"), (2, gen_schur((1, 0)), "s[1,0]")]
    if N >= 3:
        cases.append((3, ONE, "1"))
    basis = test_basis(N, *box)
    with timed_report("ct-form", {"N": N, "n": list(n_window), "box": list(box), "mode": v.mode}) as rep:
        for alpha, P, label in cases:
            direct = build_D(alpha, P, N)
            try:
                ct = ct_operator(alpha, P, N)
            except CTConsistencyError as exc:
                rep.add(Check(f"ct-a{alpha}-{label}", "error", str(exc)))
                continue
            rep.add(v.check_zero(f"ct-a{alpha}-{label}",
                                 {i: ct.act(f) - direct.act(f) for i, f in enumerate(basis)}))
        if N + 1 <= 4:
            try:
                over = ct_operator(N + 1, ONE, N)
                rep.add(v.check_true(f"ct-vanish-a{N + 1}", over.is_zero()))
            except CTConsistencyError as exc:
                rep.add(Check(f"ct-vanish-a{N + 1}", "error", str(exc)))
        rep.add(v.check_true(f"D-vanish-a{N + 1}", build_D(N + 1, ONE, N).is_zero()))
    return rep
