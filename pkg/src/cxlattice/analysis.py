"""Sublattice / subalgebra decisions, hulls, witnesses and oracles."""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .linalg import (
    Containment,
    IntegerMembership,
    compare,
    integer_row,
    member,
    span_with,
)
from .pairs import Kind, classify_all, project_pair
from .relations import RelationSystem, extract_relations, relation_space, zero_points
from .space import FunctionVec, Subspace, fmax, fmin, product

DEFAULT_SEED = 0
DEFAULT_BUDGET = 1000
COEFF_RANGE = 4


def _check_mode(mode: str) -> None:
    if mode not in ("lattice", "algebra"):
        raise ValueError(f"unknown mode {mode!r}")


def hull(A: Subspace, mode: str = "lattice") -> Subspace:
    """Smallest sublattice (or subalgebra) of C(X) containing A."""
    _check_mode(mode)
    return relation_space(A.space, extract_relations(A, mode))


def decide(A: Subspace, mode: str = "lattice") -> bool:
    return compare(A.basis, hull(A, mode).basis) is Containment.EQUAL


def direct_algebra_check(A: Subspace) -> bool:
    """Closure under products, checked on all pairs of basis vectors."""
    vecs = A.basis.vectors
    for i in range(len(vecs)):
        for j in range(i, len(vecs)):
            if not member([a * b for a, b in zip(vecs[i], vecs[j])], A.basis):
                return False
    return True


@dataclass(frozen=True)
class Witness:
    f: FunctionVec
    g: FunctionVec
    combined: FunctionVec
    op: str  # "max" | "min" | "product"


_OPS = {"max": fmax, "min": fmin, "product": product}


def _random_combination(rng: random.Random, int_basis: Sequence[tuple[int, ...]], n: int) -> list[int]:
    v = [0] * n
    for b in int_basis:
        c = rng.randint(-COEFF_RANGE, COEFF_RANGE)
        if c:
            for j, x in enumerate(b):
                if x:
                    v[j] += c * x
    return v


def sample_closure_failure(A: Subspace, seed: int = DEFAULT_SEED, samples: int = DEFAULT_BUDGET,
                           op: str = "max") -> Witness | None:
    """Seeded random search for f, g in A with op(f, g) outside A.

    Functions are random integer combinations of the integer-scaled basis,
    so the whole search runs in exact int arithmetic.
    """
    rng = random.Random(seed)
    n = len(A.space)
    if A.rank == 0:
        return None
    int_basis = [integer_row(v) for v in A.basis.vectors]
    inside = IntegerMembership(A.basis)
    for _ in range(samples):
        f = _random_combination(rng, int_basis, n)
        g = _random_combination(rng, int_basis, n)
        if op == "max":
            c = [a if a >= b else b for a, b in zip(f, g)]
        elif op == "min":
            c = [b if a >= b else a for a, b in zip(f, g)]
        else:
            c = [a * b for a, b in zip(f, g)]
        if not inside(c):
            S = A.space
            return Witness(FunctionVec(S, f), FunctionVec(S, g), FunctionVec(S, c), op)
    return None


def _mixed_pair_witness(A: Subspace) -> Witness | None:
    for x, y, pc in classify_all(A):
        if pc.kind is not Kind.LINE_MIXED:
            continue
        i, j = A.space.index(x), A.space.index(y)
        for v in A.basis.vectors:
            if v[i]:
                # (v[i], v[j]) = c (a, b); positive rescaling keeps the direction
                c = v[i] / pc.a
                h = [x_ / c for x_ in v]
                h = [Fraction(k) for k in integer_row(h)]
                f = FunctionVec(A.space, h)
                g = f.scale(2)
                return Witness(f, g, fmin(f, g), "min")
    return None


def _candidates(A: Subspace, generators) -> list[FunctionVec]:
    gens = [FunctionVec(A.space, g) for g in generators] if generators else A.functions()
    gens = [g for g in gens if any(g.values)][:8]
    out = list(gens) + [-g for g in gens]
    for i in range(len(gens)):
        for j in range(len(gens)):
            if i != j:
                out.append(gens[i] - gens[j])
    return out


def _candidate_witness(A: Subspace, op: str, cands: list[FunctionVec]) -> Witness | None:
    fn = _OPS[op]
    for j in range(len(cands)):
        lo = j if op == "product" else 0
        for i in range(lo, j + 1):
            if i == j and op != "product":
                continue
            f, g = cands[i], cands[j]
            c = fn(f, g)
            if c not in A:
                return Witness(f, g, c, op)
    return None


def witness(A: Subspace, mode: str = "lattice", seed: int = DEFAULT_SEED, budget: int = DEFAULT_BUDGET,
            generators: Sequence[Sequence] | None = None) -> Witness | None:
    """Explicit f, g in A whose max/min (lattice) or product (algebra) leaves A.

    Lattice mode first lifts the two-point witness from any pair whose
    projection is a mixed-sign line, then tries pairs of small combinations
    of ``generators`` (default: the basis), then ``budget`` seeded random
    pairs.  Algebra mode always succeeds on the basis products.
    """
    _check_mode(mode)
    if decide(A, mode):
        raise ValueError(f"subspace is a sub{mode}; no witness exists")
    if mode == "algebra":
        w = _candidate_witness(A, "product", _candidates(A, generators))
        if w is None:
            w = _candidate_witness(A, "product", A.functions())
        return w
    w = _mixed_pair_witness(A)
    if w is None:
        w = _candidate_witness(A, "max", _candidates(A, generators))
    if w is None:
        w = sample_closure_failure(A, seed, budget, "max")
    return w


def member_by_pairs(f: FunctionVec | Sequence, A: Subspace) -> bool:
    """Two-point interpolation test: every (f(x), f(y)) lies in the projection."""
    vals = f.values if isinstance(f, FunctionVec) else tuple(Fraction(v) for v in f)
    if len(vals) != len(A.space):
        raise ValueError("function and subspace live on different spaces")
    zeros = set(zero_points(A))
    for p in zeros:
        if vals[A.space.index(p)]:
            return False
    for x, y in A.space.pairs():
        proj = project_pair(A, x, y)
        if not member((vals[A.space.index(x)], vals[A.space.index(y)]), proj.proj_basis):
            return False
    return True


@dataclass(frozen=True)
class SeparationReport:
    separates: bool
    non_separated_pairs: tuple[tuple[str, str], ...]
    zero_set: tuple[str, ...]


def separation_report(A: Subspace) -> SeparationReport:
    bad = []
    for x, y, pc in classify_all(A):
        if pc.kind is Kind.ZERO or (pc.kind is Kind.LINE_ALIGNED and pc.a == pc.b == 1):
            bad.append((x, y))
    return SeparationReport(not bad, tuple(bad), tuple(zero_points(A)))


@dataclass(frozen=True)
class ClosureResult:
    subspace: Subspace
    converged: bool
    attempts: int


def iterative_closure_oracle(A: Subspace, seed: int = DEFAULT_SEED, budget: int = DEFAULT_BUDGET) -> ClosureResult:
    """Grow A by adjoining pointwise maxima until it is a sublattice.

    Independent of the relation machinery except for the stopping test; the
    result always lies between A and its lattice hull.
    """
    rng = random.Random(seed)
    space = A.space
    n = len(space)
    cur = A.basis
    attempts = 0
    while True:
        if decide(Subspace(space, cur), "lattice"):
            return ClosureResult(Subspace(space, cur), True, attempts)
        int_basis = [integer_row(v) for v in cur.vectors]
        pool = [list(v) for v in int_basis] + [[-x for x in v] for v in int_basis]
        pool += [_random_combination(rng, int_basis, n) for _ in range(2)]
        grown = None
        for j in range(len(pool)):
            for i in range(j):
                if attempts >= budget:
                    return ClosureResult(Subspace(space, cur), False, attempts)
                attempts += 1
                m = [a if a >= b else b for a, b in zip(pool[i], pool[j])]
                if not member(m, cur):
                    grown = m
                    break
            if grown is not None:
                break
        if grown is not None:
            cur = span_with(cur, [grown])


@dataclass
class AnalysisReport:
    is_sublattice: bool
    is_subalgebra: bool
    lattice_hull: Subspace
    algebra_hull: Subspace
    relations_lattice: RelationSystem
    relations_algebra: RelationSystem
    separates_points: bool
    non_separated_pairs: tuple[tuple[str, str], ...]
    zero_set: tuple[str, ...]
    witness: Witness | None = None
    witness_note: str | None = None
    extra: dict = field(default_factory=dict)


def analyze(A: Subspace, seed: int = DEFAULT_SEED, budget: int = DEFAULT_BUDGET,
            generators: Sequence[Sequence] | None = None) -> AnalysisReport:
    rel_l = extract_relations(A, "lattice")
    rel_a = extract_relations(A, "algebra")
    hull_l = relation_space(A.space, rel_l)
    hull_a = relation_space(A.space, rel_a)
    is_l = hull_l.basis == A.basis
    is_a = hull_a.basis == A.basis
    sep = separation_report(A)
    w, note = None, None
    if not is_l:
        w = witness(A, "lattice", seed, budget, generators)
        if w is None:
            note = "not a sublattice (by the relation hull test); no explicit witness found within budget"
    elif not is_a:
        w = witness(A, "algebra", seed, budget, generators)
    return AnalysisReport(is_l, is_a, hull_l, hull_a, rel_l, rel_a, sep.separates,
                          sep.non_separated_pairs, sep.zero_set, w, note)
