"""Functional representation of the A_{N-1} double affine Hecke algebra.

Operators are finite sums  c(x) * sigma_w * Gamma^nu  with

    (Gamma^nu f)(x)  = f(q^nu_1 x_1, ..., q^nu_N x_N)
    (sigma_w f)(x)   = f(x_w(1), ..., x_w(N))

so sigma_w Gamma^nu is the substitution x_k -> q^nu_k x_w(k).  A key is the
pair (perm, shift) with perm 0-based: perm[k] = w(k+1) - 1.  Composing two
substitutions gives (w1 w2, nu2 + nu1 o w2).
"""
from __future__ import annotations

from functools import lru_cache
from itertools import combinations

from .coeff import ONE, Rat, perm_shift, q, q_pow, th, x
from .macops import SymShiftOp, build_M
from .opbase import ShiftOperator, commutator
from .polyx import is_laurent, is_symmetric, test_basis
from .report import Report, Verifier, timed_report


class PermShiftOp(ShiftOperator):
    __slots__ = ()

    def _identity_key(self):
        return (tuple(range(self.N)), (0,) * self.N)

    def _key_compose(self, k1, k2):
        p1, s1 = k1
        p2, s2 = k2
        return (tuple(p1[p2[k]] for k in range(self.N)),
                tuple(s2[k] + s1[p2[k]] for k in range(self.N)))

    def _apply_key(self, key, f):
        return perm_shift(f, key[0], key[1])

    @classmethod
    def single(cls, N: int, perm, shift, c: Rat | int = 1):
        c = c if isinstance(c, Rat) else Rat(c)
        return cls(N, {(tuple(perm), tuple(shift)): c})


def _check_i(i: int, lo: int, hi: int):
    if not lo <= i <= hi:
        raise IndexError(f"index {i} outside [{lo}, {hi}]")


@lru_cache(maxsize=None)
def rho_s(i: int, N: int) -> PermShiftOp:
    _check_i(i, 1, N - 1)
    p = list(range(N))
    p[i - 1], p[i] = p[i], p[i - 1]
    return PermShiftOp.single(N, p, (0,) * N)


def _hecke_parts(i: int):
    thv = th()
    xi, xj = x(i), x(i + 1)
    a = (thv * xi - xj / thv) / (xi - xj)
    return a, (thv - 1 / thv) / (xi - xj), xi, xj


@lru_cache(maxsize=None)
def rho_T(i: int, N: int) -> PermShiftOp:
    _check_i(i, 1, N - 1)
    a, b, xi, xj = _hecke_parts(i)
    return a * rho_s(i, N) - PermShiftOp.mult(N, xj * b)


@lru_cache(maxsize=None)
def rho_Tinv(i: int, N: int) -> PermShiftOp:
    _check_i(i, 1, N - 1)
    a, b, xi, xj = _hecke_parts(i)
    return a * rho_s(i, N) - PermShiftOp.mult(N, xi * b)


@lru_cache(maxsize=None)
def rho_pi(N: int) -> PermShiftOp:
    """f(x_1..x_N) -> f(x_2, ..., x_N, x_1/q)."""
    perm = tuple((k + 1) % N for k in range(N))
    shift = (0,) * (N - 1) + (-1,)
    return PermShiftOp.single(N, perm, shift)


@lru_cache(maxsize=None)
def rho_pi_inv(N: int) -> PermShiftOp:
    """f(x_1..x_N) -> f(q x_N, x_1, ..., x_{N-1})."""
    perm = tuple((k - 1) % N for k in range(N))
    shift = (1,) + (0,) * (N - 1)
    return PermShiftOp.single(N, perm, shift)


def rho_X(i: int, N: int, power: int = 1) -> PermShiftOp:
    _check_i(i, 1, N)
    return PermShiftOp.mult(N, x(i) ** power)


def gamma(i: int, N: int) -> PermShiftOp:
    _check_i(i, 1, N)
    return PermShiftOp.single(N, range(N), tuple(1 if k == i - 1 else 0 for k in range(N)))


def product(ops, N: int) -> PermShiftOp:
    out = PermShiftOp.identity(N)
    for o in ops:
        out = out * o
    return out


@lru_cache(maxsize=None)
def rho_Y(i: int, N: int) -> PermShiftOp:
    """T_i ... T_{N-1} pi^-1 T_1^-1 ... T_{i-1}^-1."""
    _check_i(i, 1, N)
    word = ([rho_T(j, N) for j in range(i, N)] + [rho_pi_inv(N)]
            + [rho_Tinv(j, N) for j in range(1, i)])
    return product(word, N)


def gamma_word(i: int, N: int) -> PermShiftOp:
    """s_i ... s_{N-1} pi^-1 s_1 ... s_{i-1}, which should equal Gamma_i."""
    word = ([rho_s(j, N) for j in range(i, N)] + [rho_pi_inv(N)]
            + [rho_s(j, N) for j in range(1, i)])
    return product(word, N)


def _xprod(lo: int, hi: int) -> Rat:
    out = ONE
    for k in range(lo, hi + 1):
        out = out * x(k)
    return out


@lru_cache(maxsize=None)
def Y_shift(i: int, n: int, N: int) -> PermShiftOp:
    """(X_1..X_{i-1})^-n Y_i (X_1..X_i)^n."""
    _check_i(i, 1, N)
    left = _xprod(1, i - 1) ** (-n)
    right = _xprod(1, i) ** n
    return (left * rho_Y(i, N)) * right


@lru_cache(maxsize=None)
def D_elem(alpha: int, n: int, N: int) -> PermShiftOp:
    """q^(-alpha n) e_alpha(Y_{1,n}, ..., Y_{N,n})."""
    if alpha == 0:
        return PermShiftOp.identity(N)
    total = PermShiftOp.zero(N)
    for idx in combinations(range(1, N + 1), alpha):
        total = total + product([Y_shift(i, n, N) for i in idx], N)
    return q_pow(-alpha * n) * total


def restrict_to_symmetric(op: PermShiftOp) -> SymShiftOp:
    """The operator induced on symmetric functions.

    For symmetric f, sigma_w Gamma^nu f = Gamma^mu f with mu_j = nu_{w^-1(j)},
    so the permutation can be dropped after moving the shift.
    """
    N = op.N
    pairs = []
    for (perm, shift), c in op.terms.items():
        mu = [0] * N
        for k in range(N):
            mu[perm[k]] = shift[k]
        pairs.append((tuple(mu), c))
    return SymShiftOp.collect(N, pairs)


def _tprod(idx, N, inv=False):
    f = rho_Tinv if inv else rho_T
    return product([f(j, N) for j in idx], N)


def daha_relations(N: int, n_window=(-2, 2)):
    """Yield (name, operator that must vanish) for the defining and derived relations."""
    T, Ti, X, Y = rho_T, rho_Tinv, rho_X, rho_Y
    I = PermShiftOp.identity(N)
    thv = th()
    for i in range(1, N):
        yield f"hecke-quadratic-T{i}", (T(i, N) - thv * I) * (T(i, N) + (1 / thv) * I)
        yield f"T{i}-inverse", T(i, N) * Ti(i, N) - I
        yield f"TXT-{i}", T(i, N) * X(i, N) * T(i, N) - X(i + 1, N)
        yield f"TinvYTinv-{i}", Ti(i, N) * Y(i, N) * Ti(i, N) - Y(i + 1, N)
        for j in range(1, N + 1):
            if j not in (i, i + 1):
                yield f"T{i}-X{j}-commute", commutator(T(i, N), X(j, N))
                yield f"T{i}-Y{j}-commute", commutator(T(i, N), Y(j, N))
    for i in range(1, N - 1):
        yield f"braid-{i}", T(i, N) * T(i + 1, N) * T(i, N) - T(i + 1, N) * T(i, N) * T(i + 1, N)
        yield f"pi-T{i}", rho_pi(N) * T(i, N) - T(i + 1, N) * rho_pi(N)
    for i in range(1, N - 2):
        for j in range(i + 2, N):
            yield f"far-T{i}-T{j}", commutator(T(i, N), T(j, N))
    yield "X1Y2-Y2T1^2X1", X(1, N) * Y(2, N) - Y(2, N) * T(1, N) * T(1, N) * X(1, N)
    for i in range(1, N + 1):
        for j in range(i + 1, N + 1):
            yield f"X{i}-X{j}-commute", commutator(X(i, N), X(j, N))
            yield f"Y{i}-Y{j}-commute", commutator(Y(i, N), Y(j, N))
    yprod = product([Y(j, N) for j in range(1, N + 1)], N)
    xall = PermShiftOp.mult(N, _xprod(1, N))
    for j in range(1, N + 1):
        yield f"prodY-X{j}", yprod * X(j, N) - q() * (X(j, N) * yprod)
        yield f"prodX-Y{j}", xall * Y(j, N) - (1 / q()) * (Y(j, N) * xall)
    for i in range(1, N):
        yield f"pi-X{i}", rho_pi(N) * X(i, N) - X(i + 1, N) * rho_pi(N)
    yield f"pi-X{N}", rho_pi(N) * X(N, N) - (1 / q()) * (X(1, N) * rho_pi(N))
    yield "pi-piinv", rho_pi(N) * rho_pi_inv(N) - I
    for i in range(1, N + 1):
        yield f"gamma-word-{i}", gamma_word(i, N) - gamma(i, N)
    # derived relations
    for i in range(1, N + 1):
        for j in range(i, N + 1):
            xs = PermShiftOp.mult(N, _xprod(i, j))
            tinv = _tprod(range(i, j), N, inv=True)
            yield f"comXT-{i}-{j}", xs * tinv - tinv * xs
    for i in range(1, N):
        for j in range(i, N):
            for n in (-1, 1, 2):
                lhs = PermShiftOp.mult(N, _xprod(i, j) ** n) * Y(j + 1, N)
                rhs = (Y(j + 1, N) * _tprod(range(j, i - 1, -1), N)
                       * PermShiftOp.mult(N, _xprod(i + 1, j + 1) ** n)
                       * _tprod(range(i, j + 1), N, inv=True))
                yield f"gencoXY-{i}-{j}-n{n}", lhs - rhs
    lo, hi = n_window
    for n in range(lo, hi + 1):
        yield f"Y1n-{n}", Y_shift(1, n, N) - Y(1, N) * X(1, N, n)
        yield f"YNn-{n}", Y_shift(N, n, N) - q_pow(n) * (X(N, N, n) * Y(N, N))
        for i in range(1, N + 1):
            for j in range(i + 1, N + 1):
                yield f"Yn-commute-{i}-{j}-n{n}", commutator(Y_shift(i, n, N), Y_shift(j, n, N))


def daha_relation_suite(N: int, verifier: Verifier | None = None, n_window=(-2, 2)) -> Report:
    if not 2 <= N <= 4:
        raise ValueError("daha suite needs 2 <= N <= 4")
    v = verifier or Verifier()
    with timed_report("daha", {"N": N, "n_window": list(n_window), "mode": v.mode}) as rep:
        for name, op in daha_relations(N, n_window):
            rep.add(v.check_zero(name, op))
    return rep


def genmac_restriction_check(alpha: int, n: int, N: int, verifier: Verifier | None = None,
                             box=(-2, 2)) -> Report:
    """D_{alpha;n} on symmetric functions against theta^(-alpha(N-alpha)) M_{alpha;n}."""
    v = verifier or Verifier()
    params = {"alpha": alpha, "n": n, "N": N, "box": list(box), "mode": v.mode}
    with timed_report("genmac", params) as rep:
        D = D_elem(alpha, n, N)
        scale = th() ** (-alpha * (N - alpha))
        M = build_M(alpha, n, N)
        rep.add(v.check_equal(f"restriction-a{alpha}-n{n}", restrict_to_symmetric(D), scale * M))
        bad_sym = []
        diffs = []
        for f in test_basis(N, *box):
            lhs = D.act(f)
            if not (is_laurent(lhs) and is_symmetric(lhs, N)):
                bad_sym.append(f)
            diffs.append(lhs - scale * M.act(f))
        rep.add(v.check_true(f"symmetric-laurent-a{alpha}-n{n}", not bad_sym,
                             f"not symmetric Laurent for f = {bad_sym[:1]}"))
        rep.add(v.check_zero(f"action-a{alpha}-n{n}", {i: d for i, d in enumerate(diffs)}))
    return rep


def genmac_suite(N: int, n_window=(-1, 2), box=(-2, 2), verifier: Verifier | None = None) -> Report:
    v = verifier or Verifier()
    with timed_report("genmac", {"N": N, "n": list(n_window), "box": list(box), "mode": v.mode}) as rep:
        for alpha in range(1, N + 1):
            for n in range(n_window[0], n_window[1] + 1):
                rep.checks.extend(genmac_restriction_check(alpha, n, N, v, box).checks)
    return rep
