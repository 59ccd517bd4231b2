"""Seeded random instances: relation systems and generator sets."""
from __future__ import annotations

import random
from fractions import Fraction

from .relations import Relation, RelationSystem, canonicalize, relation_space
from .space import FiniteSpace, Subspace

_LAMBDAS = [Fraction(p, q) for q in range(2, 6) for p in range(1, q)]


def random_space(rng: random.Random, lo: int = 2, hi: int = 10) -> FiniteSpace:
    n = rng.randint(lo, hi)
    return FiniteSpace(tuple(f"p{i}" for i in range(n)))


def random_lambda(rng: random.Random, mode: str = "lattice") -> Fraction:
    r = rng.random()
    if r < 0.15:
        return Fraction(0)
    if mode == "algebra" or r < 0.45:
        return Fraction(1)
    return rng.choice(_LAMBDAS)


def random_relation_system(rng: random.Random, space: FiniteSpace, mode: str = "lattice",
                           max_relations: int | None = None) -> RelationSystem:
    n = len(space)
    k = rng.randint(0, max_relations if max_relations is not None else n)
    rels = []
    for _ in range(k):
        t, s = rng.choice(space.points), rng.choice(space.points)
        lam = random_lambda(rng, mode)
        if t == s and lam not in (0, 1):
            lam = Fraction(0)
        rels.append(Relation(t, s, lam))
    return canonicalize(RelationSystem(space, tuple(rels)))


def random_vector(rng: random.Random, n: int, density: float = 0.6) -> list[Fraction]:
    return [Fraction(rng.randint(-3, 3), rng.choice((1, 1, 2, 3))) if rng.random() < density else Fraction(0)
            for _ in range(n)]


def random_generators(rng: random.Random, space: FiniteSpace, mode: str = "lattice") -> list[list[Fraction]]:
    """Generator rows from a mix of strategies, so that both sublattices
    (subalgebras) and non-sublattices turn up often."""
    n = len(space)
    strategy = rng.randrange(4)
    if strategy == 0:
        k = rng.randint(0, n)
        return [random_vector(rng, n, rng.choice((0.3, 0.6, 1.0))) for _ in range(k)]
    B = relation_space(space, random_relation_system(rng, space, mode))
    vecs = [list(v) for v in B.basis.vectors]
    if strategy == 1 or not vecs:
        return vecs
    if strategy == 2:
        rng.shuffle(vecs)
        return vecs[: rng.randint(0, len(vecs))]
    k = rng.randint(1, len(vecs))
    out = []
    for _ in range(k):
        row = [Fraction(0)] * n
        for v in vecs:
            c = Fraction(rng.randint(-2, 2))
            row = [a + c * b for a, b in zip(row, v)]
        out.append(row)
    return out


def random_subspace(rng: random.Random, space: FiniteSpace | None = None, mode: str = "lattice") -> Subspace:
    space = space or random_space(rng)
    return Subspace.span(space, random_generators(rng, space, mode))
