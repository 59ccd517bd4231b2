"""Relation triples (t, s, lam) meaning f(t) = lam * f(s), and their systems."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .linalg import Basis, kernel, parse_scalar, format_scalar
from .pairs import Kind, classify_all
from .space import FiniteSpace, FunctionVec, Subspace

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True)
class Relation:
    t: str
    s: str
    lam: Fraction

    def __post_init__(self):
        lam = self.lam if isinstance(self.lam, Fraction) else parse_scalar(self.lam)
        object.__setattr__(self, "lam", lam)
        if not ZERO <= lam <= ONE:
            raise ValueError(f"relation coefficient {lam} outside [0, 1]")

    @property
    def is_zero(self) -> bool:
        return self.t == self.s and self.lam == 0

    def to_json(self) -> dict:
        return {"t": self.t, "s": self.s, "lambda": format_scalar(self.lam)}

    @classmethod
    def from_json(cls, obj: dict) -> "Relation":
        return cls(obj["t"], obj["s"], parse_scalar(obj["lambda"]))

    def __str__(self):
        return f"({self.t}, {self.s}, {format_scalar(self.lam)})"


@dataclass(frozen=True)
class RelationSystem:
    space: FiniteSpace
    relations: tuple[Relation, ...] = ()

    def __post_init__(self):
        rels = tuple(self.relations)
        object.__setattr__(self, "relations", rels)
        for r in rels:
            self.space.index(r.t)
            self.space.index(r.s)

    def __iter__(self):
        return iter(self.relations)

    def __len__(self):
        return len(self.relations)

    def sort_key(self, r: Relation):
        return (self.space.index(r.t), self.space.index(r.s), r.lam)

    def to_json(self) -> list[dict]:
        return [r.to_json() for r in self.relations]


def satisfies(f: FunctionVec, r: Relation) -> bool:
    return f(r.t) == r.lam * f(r.s)


def constraint_row(space: FiniteSpace, r: Relation) -> list[Fraction]:
    row = [ZERO] * len(space)
    row[space.index(r.t)] += ONE
    row[space.index(r.s)] -= r.lam
    return row


def relation_space(space: FiniteSpace, R: RelationSystem | Iterable[Relation]) -> Subspace:
    """The subspace {f : f(t) = lam f(s) for every relation}."""
    rels = R.relations if isinstance(R, RelationSystem) else tuple(R)
    rows = [constraint_row(space, r) for r in rels]
    return Subspace(space, kernel(rows, len(space)))


def zero_points(A: Subspace) -> list[str]:
    """Points where every function of A vanishes."""
    return [p for i, p in enumerate(A.space.points) if not any(v[i] for v in A.basis.vectors)]


def canonicalize(R: RelationSystem) -> RelationSystem:
    space = R.space
    zeros = set(zero_points(relation_space(space, R)))
    out = set()
    for r in R.relations:
        t, s, lam = r.t, r.s, r.lam
        if t == s:
            if lam == 1:
                continue
            out.add(Relation(t, t, ZERO))
        elif lam == 0:
            out.add(Relation(t, t, ZERO))
        elif lam == 1 and space.index(s) < space.index(t):
            out.add(Relation(s, t, ONE))
        else:
            out.add(r)
    out.update(Relation(p, p, ZERO) for p in zeros)
    return RelationSystem(space, tuple(sorted(out, key=R.sort_key)))


def extract_relations(A: Subspace, mode: str = "lattice") -> RelationSystem:
    """Canonical relation system satisfied by A, read off its pair projections."""
    if mode not in ("lattice", "algebra"):
        raise ValueError(f"unknown mode {mode!r}")
    rels = [Relation(p, p, ZERO) for p in zero_points(A)]
    for x, y, pc in classify_all(A):
        if pc.kind is Kind.ZERO:
            rels += [Relation(x, x, ZERO), Relation(y, y, ZERO)]
        elif pc.kind is Kind.LINE_ALIGNED:
            a, b = pc.a, pc.b
            if a == 0:
                rels.append(Relation(x, x, ZERO))
            elif b == 0:
                rels.append(Relation(y, y, ZERO))
            elif a == b:
                rels.append(Relation(x, y, ONE))
            elif mode == "lattice":
                if b == 1:
                    rels.append(Relation(x, y, a))
                else:
                    rels.append(Relation(y, x, b))
    return canonicalize(RelationSystem(A.space, tuple(rels)))
