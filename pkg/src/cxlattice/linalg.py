"""Exact rational linear algebra: canonical bases, kernels, membership.

Everything is done over ``fractions.Fraction``.  A subspace of Q^n is stored
as its reduced row-echelon basis, so two subspaces are equal exactly when
their bases are equal entry by entry.
"""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

Scalar = Fraction
Row = tuple[Fraction, ...]

_FRACTION_RE = re.compile(r"^\s*[+-]?\d+(\s*/\s*\d+)?\s*$")


def parse_scalar(text) -> Fraction:
    """Parse an integer or a ``"p/q"`` string into a Fraction.

    Decimal literals and floats are refused; they would silently bring
    binary rounding into an exact computation.
    """
    if isinstance(text, bool):
        raise ValueError(f"not a number: {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if isinstance(text, Fraction):
        return text
    if isinstance(text, str) and _FRACTION_RE.match(text):
        value = Fraction(text.replace(" ", ""))
        return value
    raise ValueError(f"exact fractions required, got {text!r}")


def format_scalar(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def as_row(values: Iterable) -> Row:
    return tuple(v if isinstance(v, Fraction) else parse_scalar(v) for v in values)


@dataclass(frozen=True)
class Basis:
    """Canonical RREF basis of a subspace of Q^ambient_dim."""

    ambient_dim: int
    vectors: tuple[Row, ...]

    @property
    def rank(self) -> int:
        return len(self.vectors)

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(_pivot(v) for v in self.vectors)

    def __len__(self) -> int:
        return len(self.vectors)

    def __iter__(self):
        return iter(self.vectors)


def _pivot(row: Sequence[Fraction]) -> int:
    for j, x in enumerate(row):
        if x:
            return j
    return -1


def _check_shape(rows: Sequence[Sequence], ncols: int) -> None:
    if ncols < 1:
        raise ValueError("ambient dimension must be at least 1")
    for r in rows:
        if len(r) != ncols:
            raise ValueError(f"row of length {len(r)} in a matrix with {ncols} columns")


def rref(rows: Sequence[Sequence[Fraction]], ncols: int) -> list[list[Fraction]]:
    """Gauss-Jordan elimination; returns the nonzero rows of the RREF."""
    _check_shape(rows, ncols)
    m = [[x if isinstance(x, Fraction) else Fraction(x) for x in r] for r in rows]
    out: list[list[Fraction]] = []
    col = 0
    while m and col < ncols:
        pick = next((i for i, r in enumerate(m) if r[col]), None)
        if pick is None:
            col += 1
            continue
        prow = m.pop(pick)
        inv = 1 / prow[col]
        prow = [x * inv for x in prow]
        for r in out:
            f = r[col]
            if f:
                for j in range(col, ncols):
                    r[j] -= f * prow[j]
        rest = []
        for r in m:
            f = r[col]
            if f:
                for j in range(col, ncols):
                    r[j] -= f * prow[j]
            if any(r):
                rest.append(r)
        m = rest
        out.append(prow)
        col += 1
    return out


def canonical_basis(generators: Sequence[Sequence[Fraction]], ncols: int | None = None) -> Basis:
    """Canonical basis of the row span of ``generators``.

    ``ncols`` is needed when there are no generators at all.
    """
    if ncols is None:
        if not generators:
            raise ValueError("ambient dimension unknown for an empty generator list")
        ncols = len(generators[0])
    reduced = rref(generators, ncols)
    return Basis(ncols, tuple(tuple(r) for r in reduced))


def zero_space(n: int) -> Basis:
    return canonical_basis([], n)


def full_space(n: int) -> Basis:
    one, zero = Fraction(1), Fraction(0)
    return Basis(n, tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n)))


def kernel(constraints: Sequence[Sequence[Fraction]], ncols: int | None = None) -> Basis:
    """Canonical basis of ``{v : constraints @ v = 0}``."""
    if ncols is None:
        if not constraints:
            raise ValueError("ambient dimension unknown for an empty constraint list")
        ncols = len(constraints[0])
    reduced = rref(constraints, ncols)
    pivots = [_pivot(r) for r in reduced]
    pivot_set = set(pivots)
    gens = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for r, p in zip(reduced, pivots):
            v[p] = -r[free]
        gens.append(v)
    return canonical_basis(gens, ncols)


def reduce(v: Sequence[Fraction], S: Basis) -> list[Fraction]:
    """Residual of ``v`` after eliminating against the pivots of ``S``."""
    if len(v) != S.ambient_dim:
        raise ValueError(f"vector of length {len(v)} against ambient dimension {S.ambient_dim}")
    r = [x if isinstance(x, Fraction) else Fraction(x) for x in v]
    for b, p in zip(S.vectors, S.pivots):
        f = r[p]
        if f:
            for j in range(p, S.ambient_dim):
                if b[j]:
                    r[j] -= f * b[j]
    return r


def member(v: Sequence[Fraction], S: Basis) -> bool:
    return not any(reduce(v, S))


def coordinates(v: Sequence[Fraction], S: Basis) -> list[Fraction] | None:
    """Coefficients of ``v`` in the basis ``S``, or None if ``v`` is outside."""
    if not member(v, S):
        return None
    return [v[p] if isinstance(v[p], Fraction) else Fraction(v[p]) for p in S.pivots]


def span_with(S: Basis, extra: Iterable[Sequence[Fraction]]) -> Basis:
    return canonical_basis(list(S.vectors) + [list(e) for e in extra], S.ambient_dim)


class Containment(enum.Enum):
    EQUAL = "equal"
    S_STRICTLY_INSIDE_T = "S_strictly_inside_T"
    T_STRICTLY_INSIDE_S = "T_strictly_inside_S"
    INCOMPARABLE = "incomparable"


def contains(T: Basis, S: Basis) -> bool:
    """True if span(S) is a subset of span(T)."""
    if S.ambient_dim != T.ambient_dim:
        raise ValueError("dimension mismatch")
    return all(member(v, T) for v in S.vectors)


def compare(S: Basis, T: Basis) -> Containment:
    if S.ambient_dim != T.ambient_dim:
        raise ValueError("dimension mismatch")
    if S == T:
        return Containment.EQUAL
    if contains(T, S):
        return Containment.S_STRICTLY_INSIDE_T
    if contains(S, T):
        return Containment.T_STRICTLY_INSIDE_S
    return Containment.INCOMPARABLE


def integer_row(row: Sequence[Fraction]) -> tuple[int, ...]:
    """Smallest integer row that is a positive multiple of ``row``."""
    den = 1
    for x in row:
        den = lcm(den, x.denominator)
    ints = [int(x * den) for x in row]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g > 1:
        ints = [x // g for x in ints]
    return tuple(ints)


class IntegerMembership:
    """Fast exact membership test using an integer annihilator of ``S``.

    ``v`` lies in span(S) iff it is orthogonal to every vector of the null
    space of the basis matrix; scaling those vectors to integers keeps the
    test in plain int arithmetic.
    """

    def __init__(self, S: Basis):
        self.ambient_dim = S.ambient_dim
        if S.rank:
            null = kernel(S.vectors, S.ambient_dim)
        else:
            null = full_space(S.ambient_dim)
        self.rows = [integer_row(r) for r in null.vectors]
        self.support = [[(j, c) for j, c in enumerate(r) if c] for r in self.rows]

    def __call__(self, v: Sequence) -> bool:
        for sup in self.support:
            if sum(c * v[j] for j, c in sup):
                return False
        return True
