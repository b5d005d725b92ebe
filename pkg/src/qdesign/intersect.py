"""Intersection numbers of subspace designs.

Mendelsohn and Koehler systems on intersection vectors, the closed-form
vectors for small dimension or codimension, bounded enumeration of feasible
vectors, nonexistence certificates for ordinary block designs, and the
intersection structure of a putative 2-(7,3,1)_q design.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .designcalc import (
    DesignParams,
    NotAdmissibleError,
    lambda_ij,
    lambda_table,
)
from .qpoly import SYMBOLIC, QMode, QPolynomial, Scalar

DEFAULT_NODE_BUDGET = 10**8


class EnumerationBudgetExceeded(RuntimeError):
    pass


class InvariantViolation(AssertionError):
    pass


@dataclass(frozen=True)
class IntersectionVector:
    """alphas[i] = number of blocks (or ell-sets of blocks) meeting S in dimension i."""

    alphas: tuple
    s: int
    order: int = 1

    def __post_init__(self):
        object.__setattr__(self, "alphas", tuple(self.alphas))

    def __getitem__(self, i):
        return self.alphas[i]

    def __iter__(self):
        return iter(self.alphas)

    def __len__(self):
        return len(self.alphas)

    def total(self):
        return sum(self.alphas)

    def __str__(self):
        return "(" + ",".join(str(a) for a in self.alphas) + ")"


def _require_lambdas(p: DesignParams) -> tuple:
    tab = lambda_table(p)
    if not tab.admissible:
        raise NotAdmissibleError(f"{p} is not admissible (lambda_{tab.fail_witness} not integral)")
    return tab.values


def _check_dim(p: DesignParams, s: int) -> None:
    if not 0 <= s <= p.v:
        raise ValueError(f"subspace dimension {s} outside 0..{p.v}")


# Mendelsohn


@dataclass(frozen=True)
class MendelsohnSystem:
    """Rows i = 0..t of  sum_j [j i] alpha_j = rhs_i  over columns j = 0..k."""

    params: DesignParams
    s: int
    order: int
    matrix: tuple
    rhs: tuple

    def residuals(self, alphas: Sequence) -> list:
        return [
            sum(a * x for a, x in zip(row, alphas)) - r
            for row, r in zip(self.matrix, self.rhs)
        ]

    def satisfied_by(self, alphas: Sequence) -> bool:
        return all(not r for r in self.residuals(alphas))


def mendelsohn_system(p: DesignParams, s: int, ell: int = 1) -> MendelsohnSystem:
    _check_dim(p, s)
    lam = _require_lambdas(p)
    m = p.mode
    if ell > 1 and m.symbolic:
        raise ValueError("high order systems need numeric mode")
    matrix = tuple(
        tuple(m.gauss(j, i) if i <= j <= s else m.scalar(0) for j in range(p.k + 1))
        for i in range(p.t + 1)
    )
    rhs = tuple(m.gauss(s, i) * m.choose(lam[i], ell) for i in range(p.t + 1))
    return MendelsohnSystem(p, s, ell, matrix, rhs)


# q-Pascal matrices


def pascal_matrix(t: int, mode: QMode = SYMBOLIC) -> list[list]:
    """Upper triangular ``([j i])_{i,j=0..t}``."""
    return [[mode.gauss(j, i) for j in range(t + 1)] for i in range(t + 1)]


def pascal_inverse(t: int, mode: QMode = SYMBOLIC) -> list[list]:
    """Closed-form inverse ``((-1)^{j-i} q^{C(j-i,2)} [j i])``."""
    return [
        [
            (-1) ** (j - i) * mode.q_pow(math.comb(j - i, 2)) * mode.gauss(j, i) if j >= i else mode.scalar(0)
            for j in range(t + 1)
        ]
        for i in range(t + 1)
    ]


def mat_mul(a: list[list], b: list[list]) -> list[list]:
    n, inner, cols = len(a), len(b), len(b[0])
    return [[sum(a[i][r] * b[r][j] for r in range(inner)) for j in range(cols)] for i in range(n)]


# Koehler


@dataclass(frozen=True)
class KoehlerForm:
    """alpha_i = constants[i] + sum_{j=t+1..k} coeffs[i][j-t-1] * alpha_j, i = 0..t."""

    params: DesignParams
    s: int
    constants: tuple
    coeffs: tuple

    @property
    def t(self) -> int:
        return self.params.t

    @property
    def k(self) -> int:
        return self.params.k

    def coeff(self, i: int, j: int):
        return self.coeffs[i][j - self.t - 1]

    def value(self, i: int, free: Mapping[int, Scalar]):
        out = self.constants[i]
        for j in range(self.t + 1, self.k + 1):
            a = free.get(j, 0)
            if a:
                out = out + self.coeff(i, j) * a
        return out

    def evaluate(self, free: Mapping[int, Scalar]) -> IntersectionVector:
        zero = self.params.mode.scalar(0)
        alphas = [self.value(i, free) for i in range(self.t + 1)]
        alphas += [self.params.mode.scalar(free.get(j, zero)) for j in range(self.t + 1, self.k + 1)]
        return IntersectionVector(tuple(alphas), self.s)

    def render_row(self, i: int, style: str = "expanded") -> str:
        m = self.params.mode
        const = self.constants[i]
        terms: list[tuple[bool, str]] = []
        for j in range(self.t + 1, self.k + 1):
            g = self.coeff(i, j)
            if not g:
                continue
            neg = _is_negative(g)
            mag = -g if neg else g
            if mag == 1:
                body = f"alpha_{j}"
            else:
                body = f"{_wrap(m.render(mag, style), mag)}*alpha_{j}"
            terms.append((neg, body))
        out = f"alpha_{i} = "
        if const or not terms:
            out += _wrap(m.render(const, style), const) if terms else m.render(const, style)
            first = False
        else:
            first = True
        for neg, body in terms:
            if first:
                out += ("-" if neg else "") + body
                first = False
            else:
                out += (" - " if neg else " + ") + body
        return out

    def render(self, style: str = "expanded") -> str:
        return "\n".join(self.render_row(i, style) for i in range(self.t + 1))


def _is_negative(x) -> bool:
    if isinstance(x, QPolynomial):
        return x.leading < 0
    return x < 0


def _wrap(text: str, x) -> str:
    bare = _outside_parens(text)
    if " + " in bare or " - " in bare:
        return f"({text})"
    return text


def _outside_parens(text: str) -> str:
    depth, out = 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif depth == 0:
            out.append(ch)
    return "".join(out)


def koehler_forms(p: DesignParams, s: int, method: str = "closed") -> KoehlerForm:
    """Solve the Mendelsohn system for alpha_0..alpha_t in terms of alpha_{t+1..k}.

    ``method="closed"`` uses the explicit Koehler coefficients;
    ``method="matrix"`` multiplies by the closed-form inverse of the q-Pascal matrix.
    """
    _check_dim(p, s)
    lam = _require_lambdas(p)
    m, t, k = p.mode, p.t, p.k
    if method == "closed":
        constants = []
        for i in range(t + 1):
            acc = m.scalar(0)
            for j in range(i, t + 1):
                acc = acc + (-1) ** (j - i) * m.q_pow(math.comb(j - i, 2)) * m.gauss(s - i, j - i) * lam[j]
            constants.append(m.gauss(s, i) * acc)
        coeffs = tuple(
            tuple(
                (-1) ** (t + 1 - i) * m.q_pow(math.comb(t + 1 - i, 2)) * m.gauss(j, i) * m.gauss(j - i - 1, t - i)
                for j in range(t + 1, k + 1)
            )
            for i in range(t + 1)
        )
        return KoehlerForm(p, s, tuple(constants), coeffs)
    if method == "matrix":
        rhs = [
            [m.gauss(j, i) for j in range(t + 1, k + 1)] + [m.gauss(s, i) * lam[i]]
            for i in range(t + 1)
        ]
        x = mat_mul(pascal_inverse(t, m), rhs)
        constants = tuple(row[-1] for row in x)
        coeffs = tuple(tuple(-a for a in row[:-1]) for row in x)
        return KoehlerForm(p, s, constants, coeffs)
    raise ValueError(f"unknown method {method!r}")


# unique vectors


def unique_vector(p: DesignParams, s: int, ell: int = 1) -> IntersectionVector:
    """Intersection vector of any s-subspace when s <= t or s >= v - t."""
    _check_dim(p, s)
    t, v, k, m = p.t, p.v, p.k, p.mode
    if ell == 1:
        if not (s <= t or s >= v - t):
            raise ValueError("dimension not in unique range")
        _require_lambdas(p)
        denom = m.gauss(v - t, k - t)
        alphas = tuple(
            m.div(m.q_pow(max(s - i, 0) * max(k - i, 0)) * m.gauss(s, i) * m.gauss(v - s, k - i) * p.lam, denom)
            for i in range(k + 1)
        )
        return IntersectionVector(alphas, s)
    if s > t:
        raise ValueError("dimension not in unique range (high order vectors are only known for s <= t)")
    tab = lambda_ij(p, ell)
    alphas = tuple(m.gauss(s, i) * tab[(i, s - i)] if i <= s else 0 for i in range(k + 1))
    return IntersectionVector(alphas, s, ell)


# enumeration


class FeasibleVectors(list):
    """List of feasible intersection vectors together with the constraints applied."""

    def __init__(self, vectors=(), constraints=(), nodes=0):
        super().__init__(vectors)
        self.constraints = tuple(constraints)
        self.nodes = nodes


def enumerate_feasible(
    p: DesignParams,
    s: int,
    fixed: Mapping[int, int] | None = None,
    budget: int = DEFAULT_NODE_BUDGET,
) -> FeasibleVectors:
    """All nonnegative integer intersection vectors compatible with the Koehler forms.

    Free variables alpha_{t+1..k} are searched in lexicographic order, pruned by
    the rows whose free coefficients are all nonpositive.
    """
    m = p.mode
    if m.symbolic:
        raise ValueError("enumeration needs numeric mode")
    _check_dim(p, s)
    lam = _require_lambdas(p)
    t, v, k = p.t, p.v, p.k
    fixed = dict(fixed or {})
    for j in fixed:
        if not t < j <= k:
            raise ValueError(f"only alpha_{t + 1}..alpha_{k} can be fixed, got alpha_{j}")
    form = koehler_forms(p, s)

    def forced_zero(i: int) -> bool:
        return i > s or k - i > v - s

    constraints = [
        "Koehler forms: alpha_0..alpha_t nonnegative integers",
        f"budget: sum of alpha_j = lambda_0 = {lam[0]}",
        "dimension: alpha_i = 0 for i > s or k - i > v - s",
    ]
    upper = {j: lam[0] for j in range(t + 1, k + 1)}
    if s >= k > t:
        cap = p.lam * m.gauss(s, t) // m.gauss(k, t)
        upper[k] = min(upper[k], cap)
        constraints.append(f"containment: alpha_{k} <= {cap}")
        if p.lam == 1 and 2 * k - s >= t:
            upper[k] = min(upper[k], 1)
            constraints.append(f"Steiner: alpha_{k} <= 1")
    lower = {j: 0 for j in upper}
    for j in upper:
        if forced_zero(j):
            upper[j] = 0
    for j, val in fixed.items():
        if val < lower[j] or val > upper[j]:
            upper[j], lower[j] = -1, 0
        else:
            lower[j] = upper[j] = val
        constraints.append(f"fixed: alpha_{j} = {val}")

    free = list(range(t + 1, k + 1))
    neg_rows = [i for i in range(t + 1) if (t + 1 - i) % 2 == 1]
    out: list[IntersectionVector] = []
    nodes = 0
    assign = [0] * (k + 1)

    def leaf(acc):
        alphas = list(acc) + assign[t + 1 :]
        if any(a < 0 for a in alphas):
            return
        if any(alphas[i] for i in range(k + 1) if forced_zero(i)):
            return
        out.append(IntersectionVector(tuple(alphas), s))

    def dfs(pos: int, acc: list, remaining: int):
        nonlocal nodes
        if pos == len(free):
            leaf(acc)
            return
        j = free[pos]
        hi = min(upper[j], remaining)
        for i in neg_rows:
            g = form.coeff(i, j)
            if g:
                hi = min(hi, acc[i] // -g)
        for a in range(lower[j], hi + 1):
            nodes += 1
            if nodes > budget:
                raise EnumerationBudgetExceeded(f"more than {budget} partial assignments")
            assign[j] = a
            nxt = [acc[i] + form.coeff(i, j) * a for i in range(t + 1)]
            if any(nxt[i] < 0 for i in neg_rows):
                break
            dfs(pos + 1, nxt, remaining - a)
        assign[j] = 0

    if all(lower[j] <= upper[j] for j in free):
        dfs(0, list(form.constants), lam[0])
    return FeasibleVectors(out, constraints, nodes)


# nonexistence


@dataclass(frozen=True)
class NonexistenceCertificate:
    params: DesignParams
    stage: str
    lambdas: tuple
    forced_vector: IntersectionVector | None = None
    negative_index: int | None = None
    constant: int | None = None
    coefficient: int | None = None
    bound: int | None = None
    pair_dim: int | None = None
    constraints: tuple = ()

    @property
    def realizable(self) -> bool | None:
        """False when a contradiction was found, None when undecided."""
        return None if self.stage == "feasible" else False

    @property
    def verdict(self) -> str:
        return "no verdict" if self.stage == "feasible" else "not realizable"

    def recheck(self) -> bool:
        """Re-derive every numeric claim by direct substitution."""
        p = self.params
        t, k = p.t, p.k
        m = p.mode
        if tuple(lambda_table(p).values) != self.lambdas:
            return False
        if self.stage == "koehler-negativity":
            i, s = self.negative_index, k
            c = m.gauss(s, i) * sum(
                (-1) ** (j - i) * m.q_pow(math.comb(j - i, 2)) * m.gauss(s - i, j - i) * self.lambdas[j]
                for j in range(i, t + 1)
            )
            g = (-1) ** (t + 1 - i) * m.q_pow(math.comb(t + 1 - i, 2)) * m.gauss(k, i) * m.gauss(k - i - 1, t - i)
            return c == self.constant and g == self.coefficient and g <= 0 and c + g == self.bound < 0
        if self.stage == "unique-vector-pigeonhole":
            vec = self.forced_vector
            sysm = mendelsohn_system(p, k)
            return (
                sysm.satisfied_by(vec.alphas)
                and vec[k] == 1
                and vec[0] >= 2
                and all(vec[j] == 0 for j in range(max(self.pair_dim, 0), k))
            )
        return True


def nonexistence_check(p: DesignParams, budget: int = DEFAULT_NODE_BUDGET) -> NonexistenceCertificate:
    """Try to refute existence using the intersection vector of a block."""
    m = p.mode
    if m.symbolic:
        raise ValueError("nonexistence checks need numeric mode")
    lam = _require_lambdas(p)
    t, v, k = p.t, p.v, p.k
    form = koehler_forms(p, k)
    if k > t:
        for i in range(t + 1):
            if (t + 1 - i) % 2 == 0:
                continue
            c, g = form.constants[i], form.coeff(i, k)
            if c + g < 0:
                return NonexistenceCertificate(
                    p, "koehler-negativity", lam, negative_index=i, constant=c, coefficient=g, bound=c + g
                )
    vectors = enumerate_feasible(p, k, fixed={k: 1} if k > t else None, budget=budget)
    if not vectors:
        return NonexistenceCertificate(p, "no-feasible-vector", lam, constraints=vectors.constraints)
    if len(vectors) == 1:
        vec = vectors[0]
        # blocks missing a block B live in the (v-k)-set V \ B when q = 1; for q > 1
        # only the ambient space bounds the meet of two blocks
        ambient = v - k if m.q0 == 1 else v
        pair_dim = 2 * k - ambient
        if vec[0] >= 2 and all(vec[j] == 0 for j in range(max(pair_dim, 0), k)):
            return NonexistenceCertificate(
                p,
                "unique-vector-pigeonhole",
                lam,
                forced_vector=vec,
                pair_dim=pair_dim,
                constraints=vectors.constraints,
            )
    return NonexistenceCertificate(
        p, "feasible", lam, forced_vector=vectors[0] if len(vectors) == 1 else None, constraints=vectors.constraints
    )


FAMILIES = ("t4", "t3")


def family_params(family: str, n: int) -> DesignParams:
    """Members of the two ordinary-design families refuted by the block Koehler equations."""
    if family == "t4":
        if n < 5:
            raise ValueError("t4 family needs n >= 5")
        return DesignParams.numeric(1, 4, math.comb(n, 2) + 2, n + 1, 2)
    if family == "t3":
        if n < 2:
            raise ValueError("t3 family needs n >= 2")
        return DesignParams.numeric(1, 3, (2 * n - 1) * (4 * n - 1) + 1, 4 * n - 1, 1)
    raise ValueError(f"unknown family {family!r}")


@dataclass(frozen=True)
class FamilyScanResult:
    family: str
    n: int
    params: DesignParams | None
    admissible: bool | None
    certificate: NonexistenceCertificate | None = None
    skipped: str | None = None


def scan_family(family: str, n_from: int, n_to: int, budget: int = DEFAULT_NODE_BUDGET) -> list[FamilyScanResult]:
    out = []
    for n in range(n_from, n_to + 1):
        if family == "t4" and n % 4 == 0:
            out.append(FamilyScanResult(family, n, None, None, skipped="4 divides n"))
            continue
        try:
            p = family_params(family, n)
        except ValueError as exc:
            out.append(FamilyScanResult(family, n, None, None, skipped=str(exc)))
            continue
        if not lambda_table(p).admissible:
            out.append(FamilyScanResult(family, n, p, False))
            continue
        out.append(FamilyScanResult(family, n, p, True, nonexistence_check(p, budget)))
    return out


# q-analog of the Fano plane

FANO_T, FANO_V, FANO_K = 2, 7, 3


@dataclass(frozen=True)
class DistributionRow:
    s: int
    type_label: str
    count: Scalar
    vector: IntersectionVector


def fano_params(mode: QMode = SYMBOLIC) -> DesignParams:
    return DesignParams(FANO_T, FANO_V, FANO_K, 1, mode)


def fano_distribution(mode: QMode = SYMBOLIC) -> list[DistributionRow]:
    """Intersection vector distribution of a 2-(7,3,1)_q design, ordered s = 7..0."""
    p = fano_params(mode)
    m = mode
    lam = _require_lambdas(p)
    v, k = FANO_V, FANO_K
    rows: list[DistributionRow] = []
    for s in range(v, -1, -1):
        if s in (3, 4):
            if m.symbolic:
                form = koehler_forms(p, s)
                with_block, without = form.evaluate({k: 1}), form.evaluate({k: 0})
            else:
                vectors = enumerate_feasible(p, s)
                if len(vectors) != 2:
                    raise InvariantViolation(f"expected two feasible vectors for s={s}, got {len(vectors)}")
                without, with_block = sorted(vectors, key=lambda vec: vec[k])
            # flags (B, S) with B <= S
            a1 = lam[0] * m.gauss(v - k, s - k)
            a0 = m.gauss(v, s) - a1
            rows.append(DistributionRow(s, f"{s}_1", a1, with_block))
            rows.append(DistributionRow(s, f"{s}_0", a0, without))
        else:
            rows.append(DistributionRow(s, str(s), m.gauss(v, s), unique_vector(p, s)))
    return rows


@dataclass(frozen=True)
class StructureEdge:
    upper: str
    lower: str
    down: Scalar  # lower-type subspaces inside one upper-type subspace
    up: Scalar  # upper-type subspaces containing one lower-type subspace


@dataclass
class StructureGraph:
    mode: QMode
    nodes: list[DistributionRow]
    edges: list[StructureEdge] = field(default_factory=list)

    def node(self, label: str) -> DistributionRow:
        for row in self.nodes:
            if row.type_label == label:
                return row
        raise KeyError(label)

    def edge(self, a: str, b: str) -> StructureEdge:
        for e in self.edges:
            if {e.upper, e.lower} == {a, b}:
                return e
        raise KeyError((a, b))

    def check_double_counting(self) -> None:
        for e in self.edges:
            lhs = self.node(e.upper).count * e.down
            rhs = self.node(e.lower).count * e.up
            if lhs != rhs:
                raise InvariantViolation(f"double counting fails on {e.lower}--{e.upper}")

    def sorted_nodes(self) -> list[DistributionRow]:
        return sorted(self.nodes, key=lambda r: (r.s, r.type_label))

    def to_dot(self, style: str = "factored") -> str:
        m = self.mode

        def fmt(x):
            return m.render(x, style)

        def node_id(label):
            return f"s{label}"

        lines = ["graph intersection_structure {"]
        order = {}
        for idx, row in enumerate(self.sorted_nodes()):
            order[row.type_label] = idx
            vec = ",".join(fmt(a) for a in row.vector)
            lines.append(f'  {node_id(row.type_label)} [label="({vec})^{fmt(row.count)}"];')
        for e in sorted(self.edges, key=lambda e: (order[e.lower], order[e.upper])):
            up, down = fmt(e.up), fmt(e.down)
            lines.append(
                f'  {node_id(e.lower)} -- {node_id(e.upper)} '
                f'[label="{up}/{down}", taillabel="{up}", headlabel="{down}"];'
            )
        lines.append("}")
        return "\n".join(lines) + "\n"


def fano_structure_graph(mode: QMode = SYMBOLIC) -> StructureGraph:
    rows = fano_distribution(mode)
    p = fano_params(mode)
    lam = _require_lambdas(p)
    m = mode
    v = FANO_V
    g = StructureGraph(mode, rows)
    gauss = m.gauss

    def add(upper, lower, down, up):
        g.edges.append(StructureEdge(upper, lower, down, up))

    for s in (0, 1, 5, 6):
        add(str(s + 1), str(s), gauss(s + 1, s), gauss(v - s, 1))
    add("3_1", "2", gauss(3, 2), lam[2])
    add("3_0", "2", gauss(3, 2), gauss(v - 2, 1) - lam[2])
    alpha2_30 = g.node("3_0").vector[2]
    add("4_1", "3_1", m.scalar(1), gauss(4, 1))
    add("4_1", "3_0", gauss(4, 3) - 1, alpha2_30)
    add("4_0", "3_0", gauss(4, 3), gauss(4, 1) - alpha2_30)
    # each of the alpha_3 blocks in a 5-space lies in [2 1] of its 4-subspaces
    in_41 = g.node("5").vector[3] * gauss(2, 1)
    add("5", "4_1", in_41, gauss(3, 1))
    add("5", "4_0", gauss(5, 4) - in_41, gauss(3, 1))
    g.check_double_counting()
    return g


@dataclass(frozen=True)
class DerivationStep:
    description: str
    value: Scalar
    check: str
    ok: bool


@dataclass(frozen=True)
class DerivedDesign:
    params: DesignParams
    complement: DesignParams
    steps: tuple

    @property
    def ok(self) -> bool:
        return all(s.ok for s in self.steps)


def fano_derived_design(mode: QMode = SYMBOLIC) -> DerivedDesign:
    """Duals of the 4-spaces without a block form a 2-(7,3,q^4)_q design."""
    m = mode
    graph = fano_structure_graph(mode)
    rows = {r.type_label: r for r in graph.nodes}
    v, k = FANO_V, FANO_K
    per5_blocks = rows["5"].vector[k]
    per5_41 = per5_blocks * m.gauss(5 - k, 4 - k)
    per5_40 = m.gauss(5, 4) - per5_41
    steps = [
        DerivationStep(
            "blocks contained in a 5-space",
            per5_blocks,
            "alpha_3 of the s=5 row equals q^2 + 1",
            per5_blocks == m.scalar(QPolynomial((1, 0, 1))),
        ),
        DerivationStep(
            "type 4_1 subspaces in a 5-space",
            per5_41,
            "matches the 5--4_1 edge and count(5)*x = count(4_1)*[3 1]",
            per5_41 == graph.edge("5", "4_1").down
            and rows["5"].count * per5_41 == rows["4_1"].count * m.gauss(v - 4, 1),
        ),
        DerivationStep(
            "type 4_0 subspaces in a 5-space",
            per5_40,
            "[5 4] minus type 4_1; matches count(5)*x = count(4_0)*[3 1]",
            per5_40 == graph.edge("5", "4_0").down
            and rows["5"].count * per5_40 == rows["4_0"].count * m.gauss(v - 4, 1),
        ),
    ]
    derived = DesignParams(2, v, k, per5_40, m)
    complement = DesignParams(2, v, k, per5_41, m)
    blocks = lambda_table(derived).values[0]
    steps.append(
        DerivationStep(
            "blocks of the derived design",
            blocks,
            "lambda_0 equals the number of type 4_0 subspaces",
            blocks == rows["4_0"].count,
        )
    )
    steps.append(
        DerivationStep(
            "complementary pair",
            per5_40 + per5_41,
            "lambda + lambda' equals the trivial value [5 1]",
            per5_40 + per5_41 == m.gauss(v - 2, 1),
        )
    )
    return DerivedDesign(derived, complement, tuple(steps))
