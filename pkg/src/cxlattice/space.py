"""Finite spaces X and the function space C(X) with its pointwise structure."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .linalg import Basis, canonical_basis, as_row, member


@dataclass(frozen=True)
class FiniteSpace:
    points: tuple[str, ...]

    def __post_init__(self):
        pts = tuple(self.points)
        object.__setattr__(self, "points", pts)
        if not pts:
            raise ValueError("a finite space needs at least one point")
        if len(set(pts)) != len(pts):
            dup = sorted({p for p in pts if pts.count(p) > 1})
            raise ValueError(f"duplicate point labels: {dup}")
        object.__setattr__(self, "_index", {p: i for i, p in enumerate(pts)})

    def __len__(self) -> int:
        return len(self.points)

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise KeyError(f"unknown point label {label!r}") from None

    def pairs(self) -> Iterable[tuple[str, str]]:
        """Unordered pairs (x, y) with x before y in point order."""
        pts = self.points
        for i in range(len(pts)):
            for j in range(i + 1, len(pts)):
                yield pts[i], pts[j]


@dataclass(frozen=True)
class FunctionVec:
    space: FiniteSpace
    values: tuple[Fraction, ...]

    def __post_init__(self):
        vals = as_row(self.values)
        object.__setattr__(self, "values", vals)
        if len(vals) != len(self.space):
            raise ValueError(f"{len(vals)} values for a space of {len(self.space)} points")

    def __call__(self, label: str) -> Fraction:
        return self.values[self.space.index(label)]

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def __add__(self, other: "FunctionVec") -> "FunctionVec":
        _same_space(self, other)
        return FunctionVec(self.space, tuple(a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other: "FunctionVec") -> "FunctionVec":
        _same_space(self, other)
        return FunctionVec(self.space, tuple(a - b for a, b in zip(self.values, other.values)))

    def __neg__(self) -> "FunctionVec":
        return FunctionVec(self.space, tuple(-a for a in self.values))

    def scale(self, c) -> "FunctionVec":
        c = Fraction(c)
        return FunctionVec(self.space, tuple(c * a for a in self.values))

    def __mul__(self, other):
        if isinstance(other, FunctionVec):
            return product(self, other)
        return self.scale(other)

    __rmul__ = scale


def constant(space: FiniteSpace, c=0) -> FunctionVec:
    return FunctionVec(space, (Fraction(c),) * len(space))


def _same_space(f: FunctionVec, g: FunctionVec) -> None:
    if f.space != g.space:
        raise ValueError("functions live on different spaces")


def lattice_ops(f: FunctionVec, g: FunctionVec) -> tuple[FunctionVec, FunctionVec]:
    """Pointwise (max, min) of two functions."""
    _same_space(f, g)
    hi = tuple(a if a >= b else b for a, b in zip(f.values, g.values))
    lo = tuple(b if a >= b else a for a, b in zip(f.values, g.values))
    return FunctionVec(f.space, hi), FunctionVec(f.space, lo)


def fmax(f: FunctionVec, g: FunctionVec) -> FunctionVec:
    return lattice_ops(f, g)[0]


def fmin(f: FunctionVec, g: FunctionVec) -> FunctionVec:
    return lattice_ops(f, g)[1]


def product(f: FunctionVec, g: FunctionVec) -> FunctionVec:
    _same_space(f, g)
    return FunctionVec(f.space, tuple(a * b for a, b in zip(f.values, g.values)))


def sup_norm(f: FunctionVec | Sequence[Fraction]) -> Fraction:
    vals = f.values if isinstance(f, FunctionVec) else f
    return max((abs(Fraction(v)) for v in vals), default=Fraction(0))


@dataclass(frozen=True)
class Subspace:
    """A linear subspace of C(X), held as a canonical basis over ``space``."""

    space: FiniteSpace
    basis: Basis

    def __post_init__(self):
        if self.basis.ambient_dim != len(self.space):
            raise ValueError("basis dimension does not match the number of points")

    @classmethod
    def span(cls, space: FiniteSpace, generators: Sequence[Sequence]) -> "Subspace":
        rows = [as_row(g) for g in generators]
        return cls(space, canonical_basis(rows, len(space)))

    @property
    def rank(self) -> int:
        return self.basis.rank

    def functions(self) -> list[FunctionVec]:
        return [FunctionVec(self.space, v) for v in self.basis.vectors]

    def __contains__(self, f) -> bool:
        vals = f.values if isinstance(f, FunctionVec) else as_row(f)
        return member(vals, self.basis)
