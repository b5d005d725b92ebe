import itertools
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qdesign.fqoracle import (
    DesignFileError,
    DesignInstance,
    GuardExceeded,
    IndependenceViolation,
    SubspaceMatrix,
    alpha_profile,
    enumerate_subspaces,
    format_design,
    intersection_dim,
    load_design,
    make_field,
    measure_alpha,
    measure_lambda_ij,
    meet_dim,
    orthogonal_complement,
    parse_design,
    prime_power_split,
    rref,
    save_design,
    smallest_irreducible,
    spread_construct,
    trivial_design,
    verify_design,
)
from qdesign.designcalc import DesignParams, dual_params
from qdesign.qpoly import gauss_int

FIELDS = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16]


def span_vectors(S):
    """All vectors of S as tuples, built from the field tables."""
    F = S.field
    out = {(0,) * S.v}
    for row in S.rows:
        out = {tuple(F.add[a][F.mul[c][b]] for a, b in zip(u, row)) for u in out for c in range(S.q)}
    return out


def is_rref(S):
    piv = []
    for r, row in enumerate(S.rows):
        lead = next(c for c, x in enumerate(row) if x)
        if row[lead] != 1:
            return False
        piv.append(lead)
    if piv != sorted(set(piv)):
        return False
    return all(S.rows[r2][pc] == 0 for r, pc in enumerate(piv) for r2 in range(len(S.rows)) if r2 != r)


# fields


def test_prime_power_split():
    assert prime_power_split(16) == (2, 4)
    assert prime_power_split(9) == (3, 2)
    assert prime_power_split(7) == (7, 1)
    assert prime_power_split(12) is None
    assert prime_power_split(1) is None


@pytest.mark.parametrize("q0", FIELDS)
def test_field_axioms(q0):
    F = make_field(q0)
    els = range(q0)
    add, mul = F.add, F.mul
    for a in els:
        assert add[a][0] == a and mul[a][1] == a and mul[a][0] == 0
        assert add[a][F.neg[a]] == 0
        assert F.sub[a][a] == 0
        if a:
            assert mul[a][F.inv[a]] == 1
        for b in els:
            assert add[a][b] == add[b][a]
            assert mul[a][b] == mul[b][a]
            for c in els:
                assert add[add[a][b]][c] == add[a][add[b][c]]
                assert mul[mul[a][b]][c] == mul[a][mul[b][c]]
                assert mul[a][add[b][c]] == add[mul[a][b]][mul[a][c]]


@pytest.mark.parametrize("q0", FIELDS)
def test_multiplicative_group_has_no_zero_divisors(q0):
    F = make_field(q0)
    assert all(F.mul[a][b] for a in range(1, q0) for b in range(1, q0))


@pytest.mark.parametrize(
    "q0,modulus",
    [(2, (0, 1)), (4, (1, 1, 1)), (8, (1, 0, 1, 1)), (9, (1, 0, 1)), (16, (1, 0, 0, 1, 1)), (5, (0, 1))],
)
def test_field_modulus(q0, modulus):
    assert make_field(q0).modulus == modulus


@pytest.mark.parametrize("p,e", [(2, 2), (2, 3), (2, 4), (3, 2), (5, 2), (2, 6)])
def test_smallest_irreducible_by_search(p, e):
    def has_factor(f):
        # brute force over all monic polynomials of degree 1..e//2
        for d in range(1, e // 2 + 1):
            for low in itertools.product(range(p), repeat=d):
                g = list(low) + [1]
                rem = list(f)
                for shift in range(len(rem) - len(g), -1, -1):
                    c = rem[shift + d]
                    for i, x in enumerate(g):
                        rem[shift + i] = (rem[shift + i] - c * x) % p
                if not any(rem):
                    return True
        return False

    found = smallest_irreducible(p, e)
    assert not has_factor(found)
    for low in itertools.product(range(p), repeat=e):
        cand = tuple(low) + (1,)
        if cand == found:
            break
        assert cand[0] == 0 or has_factor(cand)


@pytest.mark.parametrize("q0", [6, 12, 1, 32])
def test_make_field_rejects(q0):
    with pytest.raises(ValueError):
        make_field(q0)


# subspaces


@pytest.mark.parametrize("q0,v,d,expected", [(2, 4, 2, 35), (3, 4, 1, 40), (2, 5, 3, 155), (3, 4, 2, 130)])
def test_enumeration_counts(q0, v, d, expected):
    subs = list(enumerate_subspaces(q0, v, d))
    assert len(subs) == len(set(subs)) == expected == gauss_int(v, d, q0)


def test_enumerate_zero_space():
    assert [S.rows for S in enumerate_subspaces(3, 4, 0)] == [()]


def test_enumeration_against_xor_spans():
    spans = set()
    for a, b in itertools.combinations(range(1, 16), 2):
        spans.add(frozenset({0, a, b, a ^ b}))
    subs = list(enumerate_subspaces(2, 4, 2))
    got = {frozenset(int("".join(map(str, u)), 2) for u in span_vectors(S)) for S in subs}
    assert got == spans


@pytest.mark.parametrize("q0,v,d", [(2, 5, 2), (3, 4, 2), (4, 3, 2)])
def test_enumeration_canonical_and_ordered(q0, v, d):
    subs = list(enumerate_subspaces(q0, v, d))
    assert all(is_rref(S) for S in subs)
    keys = [(S.pivots, S.rows) for S in subs]
    assert keys == sorted(keys)
    F = make_field(q0)
    assert all(rref(S.rows, F) == S.rows for S in subs)


def test_enumeration_guard():
    with pytest.raises(GuardExceeded):
        list(enumerate_subspaces(2, 6, 3, guard=100))


def test_span_canonicalizes():
    A = SubspaceMatrix.span(2, 4, [[1, 1, 0, 0], [0, 1, 1, 0]])
    B = SubspaceMatrix.span(2, 4, [[1, 0, 1, 0], [1, 1, 0, 0]])
    assert A == B and A.rows == ((1, 0, 1, 0), (0, 1, 1, 0))
    with pytest.raises(ValueError):
        SubspaceMatrix.span(2, 4, [[1, 0, 1]])


def test_intersection_dim_examples():
    A = SubspaceMatrix.span(2, 4, [[1, 0, 0, 0], [0, 1, 0, 0]])
    B = SubspaceMatrix.span(2, 4, [[0, 0, 1, 0], [0, 0, 0, 1]])
    assert intersection_dim(A, A) == 2
    assert intersection_dim(A, B) == 0
    H1 = SubspaceMatrix.span(2, 4, [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0]])
    H2 = SubspaceMatrix.span(2, 4, [[0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
    assert intersection_dim(H1, H2) == 2


def test_intersection_dim_ambient_mismatch():
    with pytest.raises(ValueError):
        intersection_dim(SubspaceMatrix.span(2, 3, [[1, 0, 0]]), SubspaceMatrix.span(2, 4, [[1, 0, 0, 0]]))


@pytest.mark.parametrize("q0,v", [(2, 4), (3, 3), (4, 3)])
def test_meet_dim_matches_rank_and_counting(q0, v):
    subs = [S for d in range(v + 1) for S in enumerate_subspaces(q0, v, d)]
    for A, B in itertools.islice(itertools.product(subs, repeat=2), 0, None, 7):
        common = len(span_vectors(A) & span_vectors(B))
        d = round(math.log(common, q0))
        assert intersection_dim(A, B) == meet_dim(A, B) == d


@pytest.mark.parametrize("q0,v", [(2, 4), (3, 4), (4, 3), (5, 3)])
def test_orthogonal_complement(q0, v):
    F = make_field(q0)
    for d in range(v + 1):
        for A in enumerate_subspaces(q0, v, d):
            C = orthogonal_complement(A)
            assert C.dim == v - d
            assert orthogonal_complement(C) == A
            for a in A.rows:
                for c in C.rows:
                    acc = 0
                    for x, y in zip(a, c):
                        acc = F.add[acc][F.mul[x][y]]
                    assert acc == 0


# designs


def test_trivial_design_counts():
    assert len(trivial_design(2, 4, 2)) == 35
    assert len(trivial_design(2, 5, 3)) == 155
    assert len(trivial_design(3, 4, 2)) == 130


@pytest.mark.parametrize(
    "q0,v,k,blocks",
    [(2, 4, 2, 5), (2, 6, 2, 21), (3, 4, 2, 10), (4, 4, 2, 17), (2, 6, 3, 9), (3, 6, 3, 28), (2, 8, 4, 17)],
)
def test_spread_partitions_nonzero_vectors(q0, v, k, blocks):
    D = spread_construct(q0, v, k)
    assert len(D) == blocks == (q0**v - 1) // (q0**k - 1)
    seen = set()
    for B in D.blocks:
        vecs = span_vectors(B) - {(0,) * v}
        assert not (vecs & seen)
        seen |= vecs
    assert len(seen) == q0**v - 1
    rep = verify_design(D, 1)
    assert rep.is_design and rep.lam == 1


def test_spread_requires_divisibility():
    with pytest.raises(ValueError):
        spread_construct(2, 5, 2)


def test_spread_field_cap():
    with pytest.raises(ValueError):
        spread_construct(4, 6, 3)


def test_verify_design():
    S = spread_construct(2, 4, 2)
    rep = verify_design(S, 1)
    assert rep.is_design and rep.lam == 1
    rep2 = verify_design(S, 2)
    assert not rep2.is_design
    T1, c1, T2, c2 = rep2.counterexample
    assert {c1, c2} == {0, 1}
    rep3 = verify_design(trivial_design(2, 5, 3), 2)
    assert rep3.is_design and rep3.lam == 7


def test_design_instance_validation():
    A = SubspaceMatrix.span(2, 3, [[1, 0, 0]])
    with pytest.raises(ValueError, match="duplicate"):
        DesignInstance(2, 3, 1, (A, A))
    with pytest.raises(ValueError):
        DesignInstance(2, 3, 2, (A,))
    with pytest.raises(ValueError):
        DesignInstance(2, 3, 1, ())


def test_dual_design_is_design():
    D = spread_construct(2, 6, 2).dual()
    rep = verify_design(D, 1)
    assert rep.is_design
    assert rep.lam == dual_params(DesignParams.numeric(2, 1, 6, 2)).lam == 5
    # flag count: blocks times points per block over points
    assert rep.lam == len(D) * (2**4 - 1) // (2**6 - 1)


# measurement


def test_measure_spread_block():
    D = spread_construct(2, 4, 2)
    assert tuple(measure_alpha(D, D.blocks[0])) == (4, 0, 1)


def test_measure_trivial_two_space():
    D = trivial_design(2, 4, 2)
    S = D.blocks[3]
    assert tuple(measure_alpha(D, S)) == (16, 18, 1)


def test_measure_full_space():
    D = spread_construct(3, 4, 2)
    full = SubspaceMatrix.span(3, 4, [[1 if i == j else 0 for j in range(4)] for i in range(4)])
    assert tuple(measure_alpha(D, full)) == (0, 0, len(D))


def test_measure_order_two_spread_block():
    D = spread_construct(2, 4, 2)
    assert tuple(measure_alpha(D, D.blocks[0], ell=2)) == (10, 0, 0)


def test_measure_tuple_guard():
    D = trivial_design(2, 4, 2)
    with pytest.raises(GuardExceeded):
        measure_alpha(D, D.blocks[0], ell=3, guard=100)


def test_alpha_profile_counts():
    D = trivial_design(2, 4, 2)
    prof = alpha_profile(D, 2)
    assert prof == {(16, 18, 1): 35}


def test_measure_lambda_ij():
    assert measure_lambda_ij(trivial_design(2, 4, 2), 2, 1, 1) == 6
    assert measure_lambda_ij(spread_construct(2, 4, 2), 1, 0, 1) == 4
    assert measure_lambda_ij(spread_construct(2, 4, 2), 1, 1, 0) == 1
    assert measure_lambda_ij(spread_construct(2, 4, 2), 1, 0, 1, exhaustive=True) == 4


def test_measure_lambda_ij_detects_non_design():
    D = DesignInstance(2, 4, 2, spread_construct(2, 4, 2).blocks[:3])
    with pytest.raises(IndependenceViolation):
        measure_lambda_ij(D, 1, 1, 0, exhaustive=True)


def test_measure_lambda_ij_bounds():
    with pytest.raises(ValueError):
        measure_lambda_ij(spread_construct(2, 4, 2), 1, 1, 1)


# file format


def test_round_trip(tmp_path):
    for D in (spread_construct(2, 4, 2), spread_construct(4, 4, 2), trivial_design(3, 3, 2)):
        path = tmp_path / "d.txt"
        save_design(D, path)
        assert load_design(path) == D


def test_spread_file_layout():
    text = format_design(spread_construct(2, 4, 2))
    lines = text.splitlines()
    assert lines[0] == "2 4 2"
    assert len(lines) == 6
    assert all(len(line) == 8 and set(line) <= {"0", "1"} for line in lines[1:])


def test_parse_canonicalizes_and_allows_comments():
    D = parse_design("# a comment\n2 4 2\n\n11000110\n# another\n")
    assert D.blocks[0].rows == ((1, 0, 1, 0), (0, 1, 1, 0))


@pytest.mark.parametrize(
    "text,msg",
    [
        ("2 4\n1100", "malformed header"),
        ("two 4 2\n", "malformed header"),
        ("2 4 2\n11000120\n", "outside the alphabet"),
        ("2 4 2\n1100011\n", "expected 2 rows"),
        ("2 4 2\n11001100\n", "rank deficient"),
        ("2 4 2\n11000110\n10100110\n", "duplicate block"),
        ("6 4 2\n11000110\n", "not a prime power"),
        ("", "missing header"),
    ],
)
def test_parse_errors(text, msg):
    with pytest.raises(DesignFileError, match=msg):
        parse_design(text)


def test_hex_digits_for_large_fields():
    D = spread_construct(16, 2, 1)
    text = format_design(D)
    assert parse_design(text) == D
    assert len(D) == 17


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([2, 3, 4, 5]), st.integers(2, 5), st.data())
def test_random_span_is_canonical(q0, v, data):
    rows = data.draw(st.lists(st.lists(st.integers(0, q0 - 1), min_size=v, max_size=v), max_size=v))
    S = SubspaceMatrix.span(q0, v, rows)
    assert is_rref(S)
    assert S == SubspaceMatrix.span(q0, v, list(S.rows))
    if rows:
        assert set(map(tuple, rows)) <= span_vectors(S)
