from fractions import Fraction as F

import pytest
import sympy
from hypothesis import given, strategies as st

from cxlattice.linalg import (
    Containment,
    IntegerMembership,
    canonical_basis,
    compare,
    full_space,
    kernel,
    member,
    parse_scalar,
    format_scalar,
)

from conftest import matrices, small_fractions


def rows_of(B):
    return [list(v) for v in B.vectors]


def test_canonical_basis_examples():
    B = canonical_basis([[1, 1, 0], [0, 1, 1], [1, 2, 1]])
    assert rows_of(B) == [[1, 0, -1], [0, 1, 1]]
    assert canonical_basis([[0, 0]]).rank == 0
    assert rows_of(canonical_basis([[2, 4]])) == [[1, 2]]


def test_canonical_basis_rejects_empty_ambient():
    with pytest.raises(ValueError):
        canonical_basis([], 0)
    with pytest.raises(ValueError):
        canonical_basis([[1, 2], [1]], 2)


def test_kernel_examples():
    assert rows_of(kernel([[F(1), F(-1, 2)]])) == [[1, 2]]
    assert kernel([], 3) == full_space(3)
    assert kernel([[1, 0], [0, 1]]).rank == 0


def test_member_examples():
    assert member([2, 4], canonical_basis([[1, 2]]))
    assert not member([1, 1, 1], canonical_basis([[1, 1, 0], [0, 1, 1]]))
    assert member([0, 0], canonical_basis([], 2))
    with pytest.raises(ValueError):
        member([1, 2, 3], canonical_basis([[1, 2]]))


def test_compare_examples():
    assert compare(canonical_basis([[1, 2]]), canonical_basis([[2, 4]])) is Containment.EQUAL
    assert compare(canonical_basis([[1, 0]]), full_space(2)) is Containment.S_STRICTLY_INSIDE_T
    assert compare(full_space(2), canonical_basis([[1, 0]])) is Containment.T_STRICTLY_INSIDE_S
    assert compare(canonical_basis([[1, 0]]), canonical_basis([[0, 1]])) is Containment.INCOMPARABLE


@pytest.mark.parametrize("text,value", [("3", F(3)), ("-1/2", F(-1, 2)), (" 4/6 ", F(2, 3)), (7, F(7))])
def test_parse_scalar(text, value):
    assert parse_scalar(text) == value


@pytest.mark.parametrize("text", ["0.5", "1e3", "abc", 0.5, True, "1/0.5"])
def test_parse_scalar_rejects_inexact(text):
    with pytest.raises(ValueError, match="exact fractions required|not a number"):
        parse_scalar(text)


@given(small_fractions)
def test_format_parse_roundtrip(x):
    assert parse_scalar(format_scalar(x)) == x


@given(matrices())
def test_rref_matches_sympy(m):
    n, rows = m
    B = canonical_basis(rows, n)
    if rows:
        R, _ = sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in r] for r in rows]).rref()
        expected = [[F(int(x.p), int(x.q)) for x in R.row(i)] for i in range(R.rows) if any(R.row(i))]
    else:
        expected = []
    assert rows_of(B) == expected


@given(matrices())
def test_rank_nullity(m):
    n, rows = m
    assert canonical_basis(rows, n).rank + kernel(rows, n).rank == n


@given(matrices())
def test_kernel_vectors_are_annihilated(m):
    n, rows = m
    for v in kernel(rows, n):
        for r in rows:
            assert sum(a * b for a, b in zip(r, v)) == 0


@given(matrices())
def test_canonical_basis_idempotent(m):
    n, rows = m
    B = canonical_basis(rows, n)
    assert canonical_basis(B.vectors, n) == B


@given(matrices(), st.data())
def test_member_iff_rank_unchanged(m, data):
    n, rows = m
    B = canonical_basis(rows, n)
    v = data.draw(st.lists(small_fractions, min_size=n, max_size=n))
    grown = canonical_basis(list(B.vectors) + [v], n)
    assert member(v, B) == (grown.rank == B.rank)
    assert IntegerMembership(B)(v) == member(v, B)


@given(matrices(), matrices())
def test_compare_equal_iff_identical(m1, m2):
    n1, r1 = m1
    n2, r2 = m2
    if n1 != n2:
        return
    S, T = canonical_basis(r1, n1), canonical_basis(r2, n1)
    same_span = all(member(v, T) for v in S) and all(member(v, S) for v in T)
    assert (compare(S, T) is Containment.EQUAL) == same_span == (S == T)
