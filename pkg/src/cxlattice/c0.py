"""C_0(T) through the one-point compactification T + {infinity}.

Functions on T correspond to functions on the compactified space that
vanish at the point at infinity; restriction to T is an isometric lattice
isomorphism between the two.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .analysis import (
    DEFAULT_BUDGET,
    DEFAULT_SEED,
    AnalysisReport,
    Witness,
    separation_report,
    witness,
)
from .linalg import canonical_basis
from .relations import Relation, RelationSystem, canonicalize, extract_relations, relation_space
from .space import FiniteSpace, FunctionVec, Subspace

INFINITY = "∞"


@dataclass(frozen=True)
class CompactifiedSpace:
    base: FiniteSpace
    infinity_label: str = INFINITY

    def __post_init__(self):
        if self.infinity_label in self.base.points:
            raise ValueError(
                f"infinity label {self.infinity_label!r} collides with a point of T; choose another"
            )

    @property
    def full(self) -> FiniteSpace:
        return FiniteSpace(self.base.points + (self.infinity_label,))


def embed(f: FunctionVec, cs: CompactifiedSpace) -> FunctionVec:
    if f.space != cs.base:
        raise ValueError("function does not live on the base space")
    return FunctionVec(cs.full, f.values + (Fraction(0),))


def restrict(f: FunctionVec, cs: CompactifiedSpace) -> FunctionVec:
    if f.space != cs.full:
        raise ValueError("function does not live on the compactified space")
    if f.values[-1]:
        raise ValueError(f"function takes value {f.values[-1]} at infinity; it must vanish there")
    return FunctionVec(cs.base, f.values[:-1])


def embed_subspace(A: Subspace, cs: CompactifiedSpace) -> Subspace:
    return Subspace.span(cs.full, [embed(f, cs).values for f in A.functions()])


def restrict_subspace(B: Subspace, cs: CompactifiedSpace) -> Subspace:
    rows = [restrict(f, cs).values for f in B.functions()]
    return Subspace(cs.base, canonical_basis(rows, len(cs.base)))


def to_base_relations(R: RelationSystem, cs: CompactifiedSpace) -> RelationSystem:
    """Rewrite relations mentioning infinity into zero relations on T."""
    inf = cs.infinity_label
    out = []
    for r in R:
        if r.t != inf and r.s != inf:
            out.append(r)
        elif r.t != inf:
            out.append(Relation(r.t, r.t, Fraction(0)))
        elif r.s != inf and r.lam > 0:
            out.append(Relation(r.s, r.s, Fraction(0)))
    return canonicalize(RelationSystem(cs.base, tuple(out)))


@dataclass(frozen=True)
class C0Result:
    relations: RelationSystem
    hull: Subspace
    decide: bool


def c0_analyze(A: Subspace, mode: str = "lattice", infinity_label: str = INFINITY) -> C0Result:
    cs = CompactifiedSpace(A.space, infinity_label)
    B = embed_subspace(A, cs)
    # B vanishes at infinity, so extraction always yields (inf, inf, 0)
    rels = extract_relations(B, mode)
    H = relation_space(cs.full, rels)
    return C0Result(to_base_relations(rels, cs), restrict_subspace(H, cs), H.basis == B.basis)


def analyze_c0(A: Subspace, seed: int = DEFAULT_SEED, budget: int = DEFAULT_BUDGET,
               generators=None, infinity_label: str = INFINITY) -> AnalysisReport:
    """Full report for A as a subspace of C_0(T), expressed on T only."""
    lat = c0_analyze(A, "lattice", infinity_label)
    alg = c0_analyze(A, "algebra", infinity_label)
    sep = separation_report(A)
    w, note = None, None
    mode = "lattice" if not lat.decide else "algebra" if not alg.decide else None
    if mode is not None:
        w = c0_witness(A, mode, seed, budget, generators, infinity_label)
        if w is None:
            note = "not a sublattice (by the relation hull test); no explicit witness found within budget"
    return AnalysisReport(lat.decide, alg.decide, lat.hull, alg.hull, lat.relations, alg.relations,
                          sep.separates, sep.non_separated_pairs, sep.zero_set, w, note)


def c0_witness(A: Subspace, mode: str = "lattice", seed: int = DEFAULT_SEED, budget: int = DEFAULT_BUDGET,
               generators=None, infinity_label: str = INFINITY) -> Witness | None:
    """Witness searched in the compactified space and restricted back to T."""
    cs = CompactifiedSpace(A.space, infinity_label)
    B = embed_subspace(A, cs)
    gens = [embed(FunctionVec(A.space, g), cs).values for g in generators] if generators else None
    wb = witness(B, mode, seed, budget, gens)
    if wb is None:
        return None
    return Witness(restrict(wb.f, cs), restrict(wb.g, cs), restrict(wb.combined, cs), wb.op)
