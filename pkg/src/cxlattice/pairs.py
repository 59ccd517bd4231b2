"""Two-point projections of a subspace and their classification.

A linear subspace of R^2 is a sublattice iff it is {0}, R^2 or a line whose
direction has coordinates of the same sign.  It is a subalgebra iff it is
{0}, R^2 or one of the lines through (1,0), (0,1), (1,1).
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .linalg import Basis, canonical_basis
from .space import Subspace

ONE = Fraction(1)
ZERO = Fraction(0)


class Kind(enum.Enum):
    ZERO = "zero"
    FULL = "full"
    LINE_ALIGNED = "line_aligned"
    LINE_MIXED = "line_mixed"


@dataclass(frozen=True)
class PairProjection:
    x: str
    y: str
    proj_basis: Basis

    def __post_init__(self):
        if self.x == self.y:
            raise ValueError("a pair projection needs two distinct points")


@dataclass(frozen=True)
class PairClass:
    kind: Kind
    a: Fraction | None = None
    b: Fraction | None = None

    @property
    def is_sublattice(self) -> bool:
        return self.kind is not Kind.LINE_MIXED

    @property
    def direction(self) -> tuple[Fraction, Fraction]:
        return (self.a, self.b)

    def __str__(self):
        if self.a is None:
            return self.kind.value
        return f"{self.kind.value}({self.a}, {self.b})"


@dataclass(frozen=True)
class AlgebraVerdict:
    pair_class: PairClass
    is_subalgebra: bool


ALGEBRA_LINES = {(ONE, ZERO), (ZERO, ONE), (ONE, ONE)}


def project_pair(A: Subspace, x: str, y: str) -> PairProjection:
    if x == y:
        raise ValueError("a pair projection needs two distinct points")
    i, j = A.space.index(x), A.space.index(y)
    rows = [(v[i], v[j]) for v in A.basis.vectors]
    return PairProjection(x, y, canonical_basis(rows, 2))


def normalize_line(a: Fraction, b: Fraction) -> PairClass:
    """Canonical representative of span{(a, b)}, (a, b) != 0.

    Aligned lines are scaled to nonnegative coordinates with max 1.  Mixed
    lines are scaled so the coordinate of largest magnitude is +1 (the first
    one on a tie).
    """
    if not a and not b:
        raise ValueError("zero vector does not span a line")
    if a * b >= 0:
        m = max(abs(a), abs(b))
        return PairClass(Kind.LINE_ALIGNED, abs(a) / m, abs(b) / m)
    lead = a if abs(a) >= abs(b) else b
    return PairClass(Kind.LINE_MIXED, a / lead, b / lead)


def classify_projection(proj: PairProjection) -> PairClass:
    rank = proj.proj_basis.rank
    if rank == 0:
        return PairClass(Kind.ZERO)
    if rank == 2:
        return PairClass(Kind.FULL)
    a, b = proj.proj_basis.vectors[0]
    return normalize_line(a, b)


def classify_pair(proj: PairProjection, mode: str = "lattice"):
    """Lattice mode returns a PairClass; algebra mode an AlgebraVerdict."""
    pc = classify_projection(proj)
    if mode == "lattice":
        return pc
    if mode != "algebra":
        raise ValueError(f"unknown mode {mode!r}")
    if pc.kind in (Kind.ZERO, Kind.FULL):
        return AlgebraVerdict(pc, True)
    return AlgebraVerdict(pc, pc.kind is Kind.LINE_ALIGNED and pc.direction in ALGEBRA_LINES)


def classify_all(A: Subspace) -> list[tuple[str, str, PairClass]]:
    return [(x, y, classify_projection(project_pair(A, x, y))) for x, y in A.space.pairs()]
