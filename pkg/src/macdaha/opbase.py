"""Common machinery for normal-form shift operators.

An operator is a finite map key -> coefficient (a Rat).  Subclasses fix the
key type and implement ``_key_compose``/``_apply_key``.
"""
from __future__ import annotations

from typing import Any, Iterable

from .coeff import ONE, Rat, rat_sum


class ShiftOperator:
    __slots__ = ("N", "terms")

    def __init__(self, N: int, terms: dict | None = None):
        self.N = N
        self.terms = {k: v for k, v in (terms or {}).items() if not v.is_zero()}

    # subclass hooks
    def _identity_key(self):
        raise NotImplementedError

    def _key_compose(self, k1, k2):
        """Key of (sigma_1 Gamma_1)(sigma_2 Gamma_2)."""
        raise NotImplementedError

    def _apply_key(self, key, f: Rat) -> Rat:
        raise NotImplementedError

    # construction
    @classmethod
    def identity(cls, N: int):
        op = cls(N)
        op.terms = {op._identity_key(): ONE}
        return op

    @classmethod
    def zero(cls, N: int):
        return cls(N)

    @classmethod
    def mult(cls, N: int, c: Rat | int):
        """Multiplication by the function c."""
        op = cls(N)
        c = c if isinstance(c, Rat) else Rat(c)
        op.terms = {op._identity_key(): c} if not c.is_zero() else {}
        return op

    @classmethod
    def collect(cls, N: int, pairs: Iterable[tuple[Any, Rat]]):
        groups: dict = {}
        for k, c in pairs:
            groups.setdefault(k, []).append(c)
        return cls(N, {k: rat_sum(v) for k, v in groups.items()})

    def _same(self, other):
        if type(other) is not type(self) or other.N != self.N:
            raise TypeError("operators of different kinds or sizes")

    # linear structure
    def __add__(self, other):
        self._same(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out[k] + c if k in out else c
        return type(self)(self.N, out)

    def __neg__(self):
        return type(self)(self.N, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, c):
        """Left multiplication by a function or scalar."""
        if isinstance(c, (int, Rat)):
            return type(self)(self.N, {k: c * v for k, v in self.terms.items()})
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, (int, Rat)):
            return self.compose(type(self).mult(self.N, other))
        return self.compose(other)

    def __pow__(self, k: int):
        out = type(self).identity(self.N)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, ShiftOperator):
            return NotImplemented
        return type(other) is type(self) and self.N == other.N and self.terms == other.terms

    def __hash__(self):
        return hash((type(self).__name__, self.N, frozenset((k, v.key()) for k, v in self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self):
        return len(self.terms)

    # algebra
    def compose(self, other):
        """Operator product: act(A.compose(B), f) == act(A, act(B, f))."""
        self._same(other)
        pairs = []
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                moved = self._apply_key(k1, c2)
                pairs.append((self._key_compose(k1, k2), c1 * moved))
        return type(self).collect(self.N, pairs)

    def act(self, f: Rat) -> Rat:
        return rat_sum(c * self._apply_key(k, f) for k, c in self.terms.items())

    def __repr__(self):
        return f"{type(self).__name__}(N={self.N}, {len(self.terms)} terms)"


def commutator(a, b):
    return a * b - b * a


def q_commutator(a, b, c: Rat | int):
    """[a, b]_c = ab - c ba."""
    return a * b - c * (b * a)
