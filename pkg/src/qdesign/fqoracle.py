"""Brute-force ground truth over small finite vector spaces.

Subspaces of F_q^v are stored as reduced row echelon matrices of field element
indices.  An element of F_{p^e} with index ``sum c_i p^i`` stands for the
polynomial ``sum c_i x^i`` modulo the field's defining polynomial.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from functools import cached_property, lru_cache
from pathlib import Path
from typing import Iterator, Sequence

from .intersect import IntersectionVector
from .qpoly import gauss_int

SUBSPACE_GUARD = 10**7
TUPLE_GUARD = 10**7
FIELD_CAP = 16
# spreads may build a larger extension field when q is prime
SPREAD_FIELD_CAP = 256


class GuardExceeded(RuntimeError):
    pass


class DesignFileError(ValueError):
    pass


class IndependenceViolation(RuntimeError):
    pass


def prime_power_split(n: int) -> tuple[int, int] | None:
    """(p, e) with n = p^e, or None."""
    if n < 2:
        return None
    p = next(d for d in range(2, n + 1) if n % d == 0)
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return (p, e) if n == 1 else None


# polynomials over F_p as coefficient lists, low degree first


def _poly_mod(a: list[int], m: Sequence[int], p: int) -> list[int]:
    a = list(a)
    dm = len(m) - 1
    inv = pow(m[-1], -1, p)
    for shift in range(len(a) - 1 - dm, -1, -1):
        f = a[shift + dm] * inv % p
        if f:
            for i, c in enumerate(m):
                a[shift + i] = (a[shift + i] - f * c) % p
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % p
    return out


def _is_irreducible(f: Sequence[int], p: int) -> bool:
    e = len(f) - 1
    for d in range(1, e // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            if not _poly_mod(f, list(low) + [1], p):
                return False
    return True


def smallest_irreducible(p: int, e: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree e (coefficients low to high)."""
    if e == 1:
        return (0, 1)
    for low in itertools.product(range(p), repeat=e):
        f = list(low) + [1]
        if f[0] and _is_irreducible(f, p):
            return tuple(f)
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


class FiniteField:
    """F_{p^e} with full addition and multiplication tables over element indices."""

    def __init__(self, p: int, e: int, modulus: Sequence[int] | None = None):
        self.p, self.e = p, e
        self.q = p**e
        self.modulus = tuple(modulus) if modulus is not None else smallest_irreducible(p, e)
        q = self.q
        digits = [self.to_poly(x) for x in range(q)]
        self.add = [[self.from_poly([(a + b) % p for a, b in zip(digits[x], digits[y])]) for y in range(q)] for x in range(q)]
        self.neg = [self.from_poly([(-a) % p for a in digits[x]]) for x in range(q)]
        self.sub = [[self.add[x][self.neg[y]] for y in range(q)] for x in range(q)]
        self.mul = self._mul_table(digits)
        self.inv = [0] * q
        for x in range(1, q):
            self.inv[x] = next(y for y in range(1, q) if self.mul[x][y] == 1)

    def _mul_table(self, digits) -> list[list[int]]:
        q, p = self.q, self.p
        if self.e == 1:
            return [[x * y % p for y in range(q)] for x in range(q)]

        def mul(x, y):
            return self.from_poly(_poly_mod(_poly_mul(digits[x], digits[y], p), self.modulus, p))

        # log/exp tables from a primitive element
        for g in range(2, q):
            exp, x = [1], g
            while x != 1:
                exp.append(x)
                x = mul(x, g)
            if len(exp) == q - 1:
                break
        else:  # pragma: no cover
            raise AssertionError("no primitive element")
        log = {x: i for i, x in enumerate(exp)}
        table = [[0] * q for _ in range(q)]
        for x in range(1, q):
            lx = log[x]
            row = table[x]
            for y in range(1, q):
                row[y] = exp[(lx + log[y]) % (q - 1)]
        return table

    def to_poly(self, x: int) -> list[int]:
        out = []
        for _ in range(self.e):
            x, r = divmod(x, self.p)
            out.append(r)
        return out

    def from_poly(self, coeffs: Sequence[int]) -> int:
        return sum(c * self.p**i for i, c in enumerate(coeffs))

    def __repr__(self):
        return f"FiniteField(q={self.q}, modulus={self.modulus})"


@lru_cache(maxsize=None)
def _field(p: int, e: int) -> FiniteField:
    return FiniteField(p, e)


def make_field(q0: int) -> FiniteField:
    pe = prime_power_split(q0)
    if pe is None:
        raise ValueError(f"{q0} is not a prime power")
    if q0 > FIELD_CAP:
        raise ValueError(f"field size {q0} exceeds {FIELD_CAP}")
    return _field(*pe)


# linear algebra


def rref(rows: Sequence[Sequence[int]], F: FiniteField) -> tuple[tuple[int, ...], ...]:
    """Reduced row echelon form with zero rows dropped."""
    mat = [list(r) for r in rows]
    if not mat:
        return ()
    ncols = len(mat[0])
    add, mul, neg, inv = F.add, F.mul, F.neg, F.inv
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(mat)) if mat[i][c]), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        f = inv[mat[r][c]]
        mat[r] = [mul[f][x] for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                g = neg[mat[i][c]]
                mat[i] = [add[x][mul[g][y]] for x, y in zip(mat[i], mat[r])]
        r += 1
        if r == len(mat):
            break
    return tuple(tuple(row) for row in mat[:r])


@dataclass(frozen=True)
class SubspaceMatrix:
    q: int
    v: int
    rows: tuple

    @classmethod
    def span(cls, q: int, v: int, vectors: Sequence[Sequence[int]]) -> "SubspaceMatrix":
        F = make_field(q)
        for vec in vectors:
            if len(vec) != v:
                raise ValueError("vector length does not match ambient dimension")
        return cls(q, v, rref(vectors, F))

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def field(self) -> FiniteField:
        return make_field(self.q)

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(next(c for c, x in enumerate(r) if x) for r in self.rows)

    @cached_property
    def mask(self) -> int:
        """Bitmask over all q^v vectors of the members of the subspace."""
        F, q, v = self.field, self.q, self.v
        members = {(0,) * v}
        for row in self.rows:
            members = {
                tuple(F.add[a][F.mul[c][b]] for a, b in zip(u, row)) for u in members for c in range(q)
            }
        out = 0
        for u in members:
            idx = 0
            for x in u:
                idx = idx * q + x
            out |= 1 << idx
        return out

    def contains(self, other: "SubspaceMatrix") -> bool:
        return other.mask & self.mask == other.mask

    def __str__(self):
        return "[" + " ".join("".join(format(x, "x") for x in r) for r in self.rows) + "]"


def _same_ambient(a: SubspaceMatrix, b: SubspaceMatrix) -> None:
    if (a.q, a.v) != (b.q, b.v):
        raise ValueError("subspaces live in different ambient spaces")


def intersection_dim(a: SubspaceMatrix, b: SubspaceMatrix) -> int:
    """dim A + dim B - dim(A + B)."""
    _same_ambient(a, b)
    return a.dim + b.dim - len(rref(a.rows + b.rows, a.field))


@lru_cache(maxsize=None)
def _size_to_dim(q: int, v: int) -> dict[int, int]:
    return {q**d: d for d in range(v + 1)}


def meet_dim(*spaces: SubspaceMatrix) -> int:
    """Dimension of the intersection of several subspaces, by counting common vectors."""
    first = spaces[0]
    m = first.mask
    for s in spaces[1:]:
        m &= s.mask
    return _size_to_dim(first.q, first.v)[m.bit_count()]


def orthogonal_complement(a: SubspaceMatrix) -> SubspaceMatrix:
    """Null space of A under the standard dot product."""
    F, v = a.field, a.v
    pivots = a.pivots
    basis = []
    for f in range(v):
        if f in pivots:
            continue
        vec = [0] * v
        vec[f] = 1
        for r, pc in enumerate(pivots):
            vec[pc] = F.neg[a.rows[r][f]]
        basis.append(vec)
    return SubspaceMatrix(a.q, v, rref(basis, F))


def _guard_count(q0: int, v: int, d: int, guard: int) -> int:
    n = gauss_int(v, d, q0)
    if n > guard:
        raise GuardExceeded(f"[{v} {d}]_{q0} = {n} subspaces exceeds guard {guard}")
    return n


def enumerate_subspaces(q0: int, v: int, d: int, guard: int = SUBSPACE_GUARD) -> Iterator[SubspaceMatrix]:
    """Every d-subspace of F_q0^v once, ordered by pivot columns and then free entries."""
    make_field(q0)
    if not 0 <= d <= v:
        return
    _guard_count(q0, v, d, guard)
    for pivots in itertools.combinations(range(v), d):
        pset = set(pivots)
        base = [0] * (d * v)
        for r, pc in enumerate(pivots):
            base[r * v + pc] = 1
        slots = [r * v + c for r, pc in enumerate(pivots) for c in range(pc + 1, v) if c not in pset]
        cuts = [(r * v, (r + 1) * v) for r in range(d)]
        for vals in itertools.product(range(q0), repeat=len(slots)):
            flat = base[:]
            for pos, x in zip(slots, vals):
                flat[pos] = x
            yield SubspaceMatrix(q0, v, tuple(tuple(flat[a:b]) for a, b in cuts))


# designs


@dataclass(frozen=True)
class DesignInstance:
    q: int
    v: int
    k: int
    blocks: tuple

    def __post_init__(self):
        if not self.blocks:
            raise ValueError("a design needs at least one block")
        for b in self.blocks:
            if (b.q, b.v) != (self.q, self.v) or b.dim != self.k:
                raise ValueError(f"block {b} does not have dimension {self.k} in F_{self.q}^{self.v}")
        ordered = tuple(sorted(self.blocks, key=lambda b: b.rows))
        if len(set(ordered)) != len(ordered):
            raise ValueError("duplicate block")
        object.__setattr__(self, "blocks", ordered)

    def __len__(self):
        return len(self.blocks)

    def dual(self) -> "DesignInstance":
        return DesignInstance(self.q, self.v, self.v - self.k, tuple(orthogonal_complement(b) for b in self.blocks))


def trivial_design(q0: int, v: int, k: int, guard: int = SUBSPACE_GUARD) -> DesignInstance:
    return DesignInstance(q0, v, k, tuple(enumerate_subspaces(q0, v, k, guard)))


def _embedded_subfield(big: FiniteField, small: FiniteField) -> list[int]:
    """Images in ``big`` of the elements of ``small``, via a root of small's modulus."""
    if small.e == 1:
        return list(range(small.q))

    def evaluate(coeffs, x):
        acc = 0
        for c in reversed(coeffs):
            acc = big.add[big.mul[acc][x]][c]
        return acc

    # base prime field elements share indices 0..p-1 in both fields
    root = next(x for x in range(big.q) if evaluate(small.modulus, x) == 0)
    powers = [1]
    for _ in range(small.e - 1):
        powers.append(big.mul[powers[-1]][root])
    images = []
    for y in range(small.q):
        acc = 0
        for c, pw in zip(small.to_poly(y), powers):
            acc = big.add[acc][big.mul[c][pw]]
        images.append(acc)
    return images


def spread_construct(q0: int, v: int, k: int) -> DesignInstance:
    """Desarguesian spread: the F_{q0^k}-points of F_{q0^k}^{v/k}, read as k-subspaces of F_q0^v."""
    if k < 1 or v % k:
        raise ValueError(f"k={k} does not divide v={v}")
    small = make_field(q0)
    big_q = q0**k
    cap = FIELD_CAP if small.e > 1 else SPREAD_FIELD_CAP
    if big_q > cap:
        raise ValueError(f"extension field of size {big_q} exceeds {cap}")
    big = _field(small.p, small.e * k)
    emb = _embedded_subfield(big, small)
    # greedy F_q0-basis of F_{q0^k}
    basis: list[int] = []
    span = {0}
    for x in range(1, big.q):
        if x in span:
            continue
        basis.append(x)
        span = {big.add[s][big.mul[emb[c]][x]] for s in span for c in range(q0)}
        if len(basis) == k:
            break
    coords: dict[int, tuple[int, ...]] = {}
    for cs in itertools.product(range(q0), repeat=k):
        z = 0
        for c, b in zip(cs, basis):
            z = big.add[z][big.mul[emb[c]][b]]
        coords[z] = cs
    m = v // k
    blocks = []
    for point in itertools.product(range(big.q), repeat=m):
        lead = next((x for x in point if x), None)
        if lead != 1:
            continue
        gens = []
        for b in basis:
            gens.append([c for z in point for c in coords[big.mul[b][z]]])
        blocks.append(SubspaceMatrix(q0, v, rref(gens, small)))
    return DesignInstance(q0, v, k, tuple(blocks))


@dataclass(frozen=True)
class DesignReport:
    is_design: bool
    lam: int | None = None
    counterexample: tuple | None = None  # (T1, count1, T2, count2)


def verify_design(D: DesignInstance, t: int, guard: int = SUBSPACE_GUARD) -> DesignReport:
    """Count blocks through every t-subspace."""
    if not 0 <= t <= D.k:
        raise ValueError("need 0 <= t <= k")
    first = None
    for T in enumerate_subspaces(D.q, D.v, t, guard):
        c = sum(1 for B in D.blocks if B.contains(T))
        if first is None:
            first = (T, c)
        elif c != first[1]:
            return DesignReport(False, None, (first[0], first[1], T, c))
    return DesignReport(True, first[1])


def _block_tuples(D: DesignInstance, ell: int, guard: int):
    if ell < 1:
        raise ValueError("order must be positive")
    n = math.comb(len(D), ell)
    if n > guard:
        raise GuardExceeded(f"C({len(D)},{ell}) = {n} block tuples exceeds guard {guard}")
    if ell == 1:
        return [b.mask for b in D.blocks]
    out = []
    for combo in itertools.combinations(D.blocks, ell):
        m = combo[0].mask
        for b in combo[1:]:
            m &= b.mask
        out.append(m)
    return out


def measure_alpha(D: DesignInstance, S: SubspaceMatrix, ell: int = 1, guard: int = TUPLE_GUARD) -> IntersectionVector:
    """Histogram of dim(cap(blocks) & S) over ell-subsets of blocks."""
    _same_ambient(D.blocks[0], S)
    sizes = _size_to_dim(D.q, D.v)
    hist = [0] * (D.k + 1)
    for m in _block_tuples(D, ell, guard):
        hist[sizes[(m & S.mask).bit_count()]] += 1
    return IntersectionVector(tuple(hist), S.dim, ell)


def alpha_profile(D: DesignInstance, s: int, ell: int = 1, guard: int = SUBSPACE_GUARD) -> dict:
    """Map each occurring intersection vector of s-subspaces to its frequency."""
    tuples = _block_tuples(D, ell, TUPLE_GUARD)
    sizes = _size_to_dim(D.q, D.v)
    out: dict = {}
    for S in enumerate_subspaces(D.q, D.v, s, guard):
        hist = [0] * (D.k + 1)
        sm = S.mask
        for m in tuples:
            hist[sizes[(m & sm).bit_count()]] += 1
        key = tuple(hist)
        out[key] = out.get(key, 0) + 1
    return out


def _random_complement_pair(D: DesignInstance, i: int, j: int, rng: random.Random):
    F, q, v = make_field(D.q), D.q, D.v
    rows: list[list[int]] = []
    while len(rows) < i + j:
        vec = [rng.randrange(q) for _ in range(v)]
        if len(rref(rows + [vec], F)) == len(rows) + 1:
            rows.append(vec)
    return SubspaceMatrix(q, v, rref(rows[:i], F)), SubspaceMatrix(q, v, rref(rows[i:], F))


def _count_lambda_ij(masks, I: SubspaceMatrix, J: SubspaceMatrix) -> int:
    im, jm = I.mask, J.mask
    return sum(1 for m in masks if m & im == im and (m & jm).bit_count() == 1)


def measure_lambda_ij(
    D: DesignInstance,
    t: int,
    i: int,
    j: int,
    ell: int = 1,
    samples: int = 20,
    seed: int = 0,
    exhaustive: bool = False,
    guard: int = TUPLE_GUARD,
) -> int:
    """Blocks (or ell-sets) containing I and meeting J trivially, for I & J = 0.

    Samples ``samples`` random pairs unless ``exhaustive``; differing counts
    raise :class:`IndependenceViolation`.
    """
    if i < 0 or j < 0 or i + j > t:
        raise ValueError("need i, j >= 0 and i + j <= t")
    masks = _block_tuples(D, ell, guard)
    if exhaustive:
        pairs = (
            (I, J)
            for I in enumerate_subspaces(D.q, D.v, i)
            for J in enumerate_subspaces(D.q, D.v, j)
            if meet_dim(I, J) == 0
        )
    else:
        rng = random.Random(seed)
        pairs = (_random_complement_pair(D, i, j, rng) for _ in range(samples))
    value = None
    for I, J in pairs:
        c = _count_lambda_ij(masks, I, J)
        if value is None:
            value = c
        elif c != value:
            raise IndependenceViolation(f"lambda_{{{i},{j}}} takes values {value} and {c}")
    return value


# file format


def save_design(D: DesignInstance, path) -> None:
    Path(path).write_text(format_design(D))


def format_design(D: DesignInstance) -> str:
    lines = [f"{D.q} {D.v} {D.k}"]
    for b in D.blocks:
        lines.append("".join(format(x, "x") for row in b.rows for x in row))
    return "\n".join(lines) + "\n"


def load_design(path) -> DesignInstance:
    return parse_design(Path(path).read_text())


def parse_design(text: str) -> DesignInstance:
    header = None
    blocks: list[SubspaceMatrix] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if header is None:
            parts = line.split()
            try:
                header = tuple(int(x) for x in parts)
            except ValueError:
                header = ()
            if len(header) != 3:
                raise DesignFileError(f"line {lineno}: malformed header {line!r}, expected 'q v k'")
            q, v, k = header
            try:
                F = make_field(q)
            except ValueError as exc:
                raise DesignFileError(f"line {lineno}: {exc}") from exc
            if not 0 <= k <= v:
                raise DesignFileError(f"line {lineno}: need 0 <= k <= v")
            continue
        if len(line) != k * v:
            raise DesignFileError(f"line {lineno}: expected {k} rows of {v} digits, got {len(line)} digits")
        digits = []
        for ch in line:
            if ch not in "0123456789abcdef" or int(ch, 16) >= q:
                raise DesignFileError(f"line {lineno}: digit {ch!r} outside the alphabet of F_{q}")
            digits.append(int(ch, 16))
        rows = [digits[r * v : (r + 1) * v] for r in range(k)]
        canon = rref(rows, F)
        if len(canon) != k:
            raise DesignFileError(f"line {lineno}: rank deficient generator matrix")
        blocks.append(SubspaceMatrix(q, v, canon))
    if header is None:
        raise DesignFileError("missing header")
    if len(set(blocks)) != len(blocks):
        raise DesignFileError("duplicate block")
    try:
        return DesignInstance(header[0], header[1], header[2], tuple(blocks))
    except ValueError as exc:
        raise DesignFileError(str(exc)) from exc
