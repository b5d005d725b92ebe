"""Parameter calculus for t-(v,k,lambda)_q subspace designs."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .qpoly import SYMBOLIC, NotDivisibleError, QMode, QPolynomial, Scalar

__all__ = [
    "DesignParams",
    "LambdaTable",
    "LambdaIJTable",
    "NotAdmissibleError",
    "lambda_table",
    "lambda_ij",
    "lambda_ij_closed",
    "dual_params",
    "complement_params",
    "steiner3_bound_check",
    "is_prime_power",
]


class NotAdmissibleError(ValueError):
    pass


@dataclass(frozen=True)
class DesignParams:
    t: int
    v: int
    k: int
    lam: Scalar
    mode: QMode = SYMBOLIC

    def __post_init__(self):
        if not (0 <= self.t <= self.k <= self.v):
            raise ValueError(f"need 0 <= t <= k <= v, got t={self.t}, k={self.k}, v={self.v}")
        lam = self.mode.scalar(self.lam)
        object.__setattr__(self, "lam", lam)
        if self.mode.symbolic:
            if not isinstance(lam, QPolynomial) or lam.is_zero():
                raise ValueError("lambda must be a nonzero polynomial in symbolic mode")
        elif lam < 1:
            raise ValueError("lambda must be >= 1")

    @classmethod
    def symbolic(cls, t: int, v: int, k: int, lam=1) -> "DesignParams":
        return cls(t, v, k, lam, SYMBOLIC)

    @classmethod
    def numeric(cls, q0: int, t: int, v: int, k: int, lam: int = 1) -> "DesignParams":
        return cls(t, v, k, lam, QMode(q0))

    def at(self, q0: int) -> "DesignParams":
        """Instantiate symbolic parameters at an integer q."""
        return DesignParams(self.t, self.v, self.k, self.mode.to_int(self.lam, q0), QMode(q0))

    def __str__(self):
        lam = self.mode.render(self.lam, "expanded")
        return f"{self.t}-({self.v},{self.k},{lam})_{self.mode.label()}"


@dataclass(frozen=True)
class LambdaTable:
    """``values[i]`` is lambda_i, or None where the division failed."""

    values: tuple
    admissible: bool
    fail_witness: int | None = None


@dataclass(frozen=True)
class LambdaIJTable:
    order: int
    entries: dict = field(default_factory=dict)

    def __getitem__(self, ij):
        return self.entries[ij]


def lambda_table(p: DesignParams) -> LambdaTable:
    """lambda_i = lambda * [v-i, t-i] / [k-i, t-i] for i = 0..t."""
    m = p.mode
    values: list = [None] * (p.t + 1)
    witness = None
    for i in range(p.t, -1, -1):
        num = p.lam * m.gauss(p.v - i, p.t - i)
        try:
            values[i] = m.div(num, m.gauss(p.k - i, p.t - i))
        except NotDivisibleError:
            if witness is None:
                witness = i
    return LambdaTable(tuple(values), witness is None, witness)


def _require_admissible(p: DesignParams) -> LambdaTable:
    tab = lambda_table(p)
    if not tab.admissible:
        raise NotAdmissibleError(f"{p} is not admissible (lambda_{tab.fail_witness} not integral)")
    return tab


def lambda_ij(p: DesignParams, ell: int = 1) -> LambdaIJTable:
    """Fill lambda^(ell)_{i,j} for i+j <= t from the recurrence
    lambda_{i,j+1} = lambda_{i,j} - q^j lambda_{i+1,j}, seeded with C(lambda_i, ell)."""
    if ell < 1:
        raise ValueError("order must be positive")
    if ell > 1 and p.mode.symbolic:
        raise ValueError("high order lambda_{i,j} needs numeric mode")
    lam = _require_admissible(p).values
    m = p.mode
    entries = {(i, 0): m.choose(lam[i], ell) for i in range(p.t + 1)}
    for j in range(p.t):
        for i in range(p.t - j):
            entries[(i, j + 1)] = entries[(i, j)] - m.q_pow(j) * entries[(i + 1, j)]
    return LambdaIJTable(ell, entries)


def lambda_ij_closed(p: DesignParams, i: int, j: int) -> Scalar:
    """q^{j(k-i)} [v-i-j, k-i] / [v-t, k-t] * lambda."""
    if i < 0 or j < 0 or i + j > p.t:
        raise ValueError("need i, j >= 0 and i + j <= t")
    m = p.mode
    num = m.q_pow(j * (p.k - i)) * m.gauss(p.v - i - j, p.k - i) * p.lam
    return m.div(num, m.gauss(p.v - p.t, p.k - p.t))


def dual_params(p: DesignParams) -> DesignParams:
    _require_admissible(p)
    if p.v - p.k < p.t:
        raise ValueError(f"dual of {p} has block dimension {p.v - p.k} < t")
    m = p.mode
    lam = m.div(p.lam * m.gauss(p.v - p.t, p.k), m.gauss(p.v - p.t, p.k - p.t))
    return DesignParams(p.t, p.v, p.v - p.k, lam, m)


def complement_params(p: DesignParams) -> DesignParams:
    m = p.mode
    full = m.gauss(p.v - p.t, p.k - p.t)
    lam = full - p.lam
    if m.is_zero(lam):
        raise ValueError("complement empty")
    if not m.symbolic and lam < 0:
        raise ValueError(f"lambda exceeds the trivial value {full}")
    return DesignParams(p.t, p.v, p.k, lam, m)


@dataclass(frozen=True)
class BoundCheck:
    holds: bool
    lhs: Fraction
    rhs: Fraction

    @property
    def margin(self) -> Fraction:
        return self.lhs - self.rhs


def steiner3_bound_check(v: int, k: int) -> BoundCheck:
    """Necessary condition C(v,3) >= (v/k) * (v-1) * C(k,3) for a 3-(v,k,1) design."""
    if not 3 <= k < v:
        raise ValueError("need 3 <= k < v")
    lhs = Fraction(math.comb(v, 3))
    rhs = Fraction(v, k) * (v - 1) * math.comb(k, 3)
    return BoundCheck(lhs >= rhs, lhs, rhs)


def is_prime_power(n: int) -> bool:
    if n < 2:
        return False
    p = 2
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            return n == 1
        p += 1
    return True
