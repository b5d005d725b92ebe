"""Integer polynomials in the indeterminate ``q`` and q-combinatorial constructors.

A :class:`QPolynomial` is a dense, immutable coefficient tuple
``(c_0, c_1, ..., c_n)`` standing for ``c_0 + c_1 q + ... + c_n q^n`` with
``c_n != 0``; the zero polynomial is the empty tuple.  Coefficients are Python
integers, so nothing overflows.

:class:`QMode` is the scalar domain used by the design calculus: either
symbolic (scalars are ``QPolynomial``) or numeric at a fixed integer ``q0 >= 1``
(scalars are ``int``).
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Union

__all__ = [
    "NotDivisibleError",
    "QPolynomial",
    "FactoredForm",
    "QMode",
    "SYMBOLIC",
    "Q",
    "q_integer",
    "q_factorial",
    "gauss_poly",
    "gauss_int",
    "cyclotomic",
    "factor_cyclotomic",
    "exact_div",
    "parse_poly",
]


class NotDivisibleError(ArithmeticError):
    """Raised by exact division when the remainder is nonzero."""

    def __init__(self, msg: str = "not divisible"):
        super().__init__(msg)


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class QPolynomial:
    """Element of Z[q] in dense representation."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = _trim(int(x) for x in coeffs)
        object.__setattr__(self, "coeffs", c)

    def __setattr__(self, name, value):
        raise AttributeError("QPolynomial is immutable")

    @classmethod
    def const(cls, c: int) -> "QPolynomial":
        return cls((c,))

    @classmethod
    def monomial(cls, e: int, c: int = 1) -> "QPolynomial":
        if e < 0:
            raise ValueError("negative exponent")
        return cls((0,) * e + (c,))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __call__(self, q0: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * q0 + c
        return acc

    eval = __call__

    # ring operations

    @staticmethod
    def _coerce(other) -> "QPolynomial":
        if isinstance(other, QPolynomial):
            return other
        if isinstance(other, int):
            return QPolynomial((other,))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return QPolynomial(x + (b[i] if i < len(b) else 0) for i, x in enumerate(a))

    __radd__ = __add__

    def __neg__(self):
        return QPolynomial(-x for x in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return QPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return QPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            return NotImplemented
        result, base = QPolynomial((1,)), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.coeffs == other.coeffs

    def __hash__(self):
        if len(self.coeffs) <= 1:
            return hash(self.coeffs[0] if self.coeffs else 0)
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def divmod_exact(self, other: "QPolynomial") -> tuple["QPolynomial", "QPolynomial"]:
        """Long division over Z.

        Raises :class:`NotDivisibleError` as soon as a leading coefficient of
        the running remainder is not divisible by that of ``other``.
        """
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        rem = list(self.coeffs)
        d = other.degree
        lc = other.leading
        quot = [0] * max(len(rem) - d, 0)
        for shift in range(len(rem) - 1 - d, -1, -1):
            top = rem[shift + d]
            if top == 0:
                continue
            if top % lc:
                raise NotDivisibleError()
            f = top // lc
            quot[shift] = f
            for i, y in enumerate(other.coeffs):
                rem[shift + i] -= f * y
        return QPolynomial(quot), QPolynomial(rem)

    def __floordiv__(self, other):
        return exact_div(self, other)

    def __repr__(self):
        return f"QPolynomial({self.expanded()!r})"

    def __str__(self):
        return self.expanded()

    def expanded(self) -> str:
        """Render in descending powers, e.g. ``q^8 - q^7 + q^3``."""
        if not self.coeffs:
            return "0"
        parts = []
        for e in range(self.degree, -1, -1):
            c = self.coeffs[e]
            if c == 0:
                continue
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                mono = "q" if e == 1 else f"q^{e}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)

    def factored(self) -> str:
        return str(factor_cyclotomic(self)) if self.coeffs else "0"


Q = QPolynomial((0, 1))
ONE = QPolynomial((1,))


def exact_div(p: QPolynomial | int, r: QPolynomial | int) -> QPolynomial:
    """Quotient ``p / r`` in Z[q]; raises :class:`NotDivisibleError` otherwise."""
    p = QPolynomial._coerce(p)
    r = QPolynomial._coerce(r)
    quot, rem = p.divmod_exact(r)
    if rem:
        raise NotDivisibleError()
    return quot


def q_integer(n: int) -> QPolynomial:
    """``[n] = 1 + q + ... + q^(n-1)``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return QPolynomial((1,) * n)


@lru_cache(maxsize=None)
def q_factorial(n: int) -> QPolynomial:
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return ONE
    return q_factorial(n - 1) * q_integer(n)


@lru_cache(maxsize=None)
def gauss_poly(n: int, k: int) -> QPolynomial:
    """Gaussian binomial coefficient ``[n k]_q``; zero unless ``0 <= k <= n``."""
    if k < 0 or k > n:
        return QPolynomial()
    k = min(k, n - k)
    # [n]!/([k]![n-k]!) = prod_{i<k} [n-i] / [k]!
    num = ONE
    for i in range(k):
        num = num * q_integer(n - i)
    try:
        return exact_div(num, q_factorial(k))
    except NotDivisibleError as exc:  # pragma: no cover - impossible for valid input
        raise AssertionError(f"[{n} {k}] is not a polynomial") from exc


@lru_cache(maxsize=4096)
def gauss_int(n: int, k: int, q0: int) -> int:
    """Gaussian binomial evaluated at the integer ``q0 >= 1`` without building polynomials."""
    if k < 0 or k > n:
        return 0
    if q0 == 1:
        return math.comb(n, k)
    k = min(k, n - k)
    num = den = 1
    for i in range(k):
        num *= q0 ** (n - i) - 1
        den *= q0 ** (i + 1) - 1
    quot, rem = divmod(num, den)
    assert rem == 0
    return quot


@lru_cache(maxsize=None)
def cyclotomic(d: int) -> QPolynomial:
    """The d-th cyclotomic polynomial, by dividing ``q^d - 1`` by ``Phi_e`` for ``e | d, e < d``."""
    if d < 1:
        raise ValueError("d must be positive")
    p = QPolynomial.monomial(d) - 1
    for e in range(1, d):
        if d % e == 0:
            p = exact_div(p, cyclotomic(e))
    return p


_totients: list[int] = [0, 1]


def _totient_table(limit: int) -> list[int]:
    global _totients
    if len(_totients) > limit:
        return _totients
    size = max(limit + 1, 2 * len(_totients))
    phi = list(range(size))
    for i in range(2, size):
        if phi[i] == i:
            for j in range(i, size, i):
                phi[j] -= phi[j] // i
    _totients = phi
    return phi


@dataclass(frozen=True)
class FactoredForm:
    """``q^q_power * prod Phi_d^m * cofactor``."""

    q_power: int
    cyclotomic: tuple[tuple[int, int], ...]
    cofactor: QPolynomial

    def expand(self) -> QPolynomial:
        out = self.cofactor * QPolynomial.monomial(self.q_power)
        for d, m in self.cyclotomic:
            out = out * cyclotomic(d) ** m
        return out

    @property
    def multiplicities(self) -> dict[int, int]:
        return dict(self.cyclotomic)

    def __str__(self) -> str:
        parts: list[str] = []
        sign = ""
        cof = self.cofactor
        if cof.is_constant():
            c = cof.leading
            if c == -1:
                sign = "-"
            elif c != 1:
                parts.append(str(c))
            cof_str = None
        else:
            cof_str = f"({cof.expanded()})"
        if self.q_power:
            parts.append("q" if self.q_power == 1 else f"q^{self.q_power}")
        if cof_str:
            parts.append(cof_str)
        for d, m in self.cyclotomic:
            parts.append(f"Phi{d}" if m == 1 else f"Phi{d}^{m}")
        return sign + ("*".join(parts) if parts else "1")


def factor_cyclotomic(p: QPolynomial) -> FactoredForm:
    """Split off the largest power of q and every cyclotomic factor by trial division."""
    p = QPolynomial._coerce(p)
    if p.is_zero():
        raise ValueError("cannot factor zero")
    a = 0
    while p.coeffs[a] == 0:
        a += 1
    cof = QPolynomial(p.coeffs[a:])
    mults: dict[int, int] = {}
    n = cof.degree
    # phi(d) >= sqrt(d) for d > 6, so no Phi_d with d > max(6, n^2) can divide
    limit = max(6, n * n)
    phi = _totient_table(limit)
    for d in range(1, limit + 1):
        if cof.degree < 1:
            break
        if phi[d] > cof.degree:
            continue
        cd = cyclotomic(d)
        while cof.degree >= cd.degree:
            # cheap necessary condition before polynomial division
            v2 = cd(2)
            if cof(2) % v2:
                break
            try:
                cof = exact_div(cof, cd)
            except NotDivisibleError:
                break
            mults[d] = mults.get(d, 0) + 1
    return FactoredForm(a, tuple(sorted(mults.items())), cof)


# parsing

_TOKEN = re.compile(r"\s*(?:(Phi)(\d+)|(\d+)|(q)|([-+*^()]))")


def parse_poly(text: str) -> QPolynomial:
    """Parse expanded or factored renderings such as ``q^3*(q^5 - q^4 + 1)`` or ``Phi6*Phi7``."""
    tokens: list[tuple[str, str]] = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial {text!r} at offset {pos}")
        if m.group(1):
            tokens.append(("phi", m.group(2)))
        elif m.group(3):
            tokens.append(("int", m.group(3)))
        elif m.group(4):
            tokens.append(("q", "q"))
        else:
            tokens.append(("op", m.group(5)))
        pos = m.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1
    tokens.append(("end", ""))
    idx = 0

    def peek():
        return tokens[idx]

    def take():
        nonlocal idx
        tok = tokens[idx]
        idx += 1
        return tok

    def expr() -> QPolynomial:
        val = term()
        while peek() in (("op", "+"), ("op", "-")):
            op = take()[1]
            rhs = term()
            val = val + rhs if op == "+" else val - rhs
        return val

    def term() -> QPolynomial:
        neg = False
        while peek() in (("op", "-"), ("op", "+")):
            neg ^= take()[1] == "-"
        val = power()
        while peek() == ("op", "*"):
            take()
            val = val * power()
        return -val if neg else val

    def power() -> QPolynomial:
        base = atom()
        if peek() == ("op", "^"):
            take()
            kind, e = take()
            if kind != "int":
                raise ValueError(f"expected integer exponent in {text!r}")
            base = base ** int(e)
        return base

    def atom() -> QPolynomial:
        kind, val = take()
        if kind == "int":
            return QPolynomial.const(int(val))
        if kind == "q":
            return Q
        if kind == "phi":
            return cyclotomic(int(val))
        if (kind, val) == ("op", "("):
            inner = expr()
            if take() != ("op", ")"):
                raise ValueError(f"unbalanced parentheses in {text!r}")
            return inner
        raise ValueError(f"unexpected token {val!r} in {text!r}")

    result = expr()
    if peek()[0] != "end":
        raise ValueError(f"trailing input in {text!r}")
    return result


Scalar = Union[int, QPolynomial]


@dataclass(frozen=True)
class QMode:
    """Scalar domain: symbolic when ``q0`` is None, otherwise integers at ``q0``."""

    q0: int | None = None

    def __post_init__(self):
        if self.q0 is not None and (not isinstance(self.q0, int) or self.q0 < 1):
            raise ValueError("numeric mode needs an integer q0 >= 1")

    @property
    def symbolic(self) -> bool:
        return self.q0 is None

    def scalar(self, x) -> Scalar:
        if self.symbolic:
            return QPolynomial._coerce(x) if isinstance(x, int) else x
        if isinstance(x, QPolynomial):
            return x(self.q0)
        return int(x)

    def q_pow(self, e: int) -> Scalar:
        if self.symbolic:
            return QPolynomial.monomial(e)
        return self.q0**e

    def gauss(self, n: int, k: int) -> Scalar:
        if self.symbolic:
            return gauss_poly(n, k)
        return gauss_int(n, k, self.q0)

    def div(self, a: Scalar, b: Scalar) -> Scalar:
        """Exact quotient; :class:`NotDivisibleError` when it does not exist."""
        if self.symbolic:
            return exact_div(a, b)
        if b == 0:
            raise ZeroDivisionError("division by zero")
        quot, rem = divmod(a, b)
        if rem:
            raise NotDivisibleError()
        return quot

    def is_zero(self, x: Scalar) -> bool:
        return not x

    def choose(self, x: Scalar, ell: int) -> Scalar:
        if self.symbolic:
            if ell == 1:
                return x
            raise ValueError("binomial of a polynomial is only available in numeric mode")
        return math.comb(x, ell) if x >= 0 else 0

    def to_int(self, x: Scalar, q0: int) -> int:
        return x(q0) if isinstance(x, QPolynomial) else int(x)

    def render(self, x: Scalar, style: str = "factored") -> str:
        if isinstance(x, QPolynomial):
            if style == "expanded" or x.is_zero():
                return x.expanded()
            return x.factored()
        return str(x)

    def label(self) -> str:
        return "q" if self.symbolic else str(self.q0)


SYMBOLIC = QMode(None)
