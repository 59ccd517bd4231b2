"""Acceptance checks, shared by tests/test_acceptance.py and scripts/run_acceptance.py.

Each check returns a CheckResult; all randomness is seeded.
"""
from __future__ import annotations

import io
import random
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .analysis import (
    decide,
    direct_algebra_check,
    hull,
    iterative_closure_oracle,
    member_by_pairs,
    sample_closure_failure,
    witness,
)
from .c0 import CompactifiedSpace, c0_analyze, embed, embed_subspace, restrict
from .linalg import Containment, canonical_basis, compare, contains, full_space, member
from .pairs import Kind, PairProjection, classify_pair
from .randomgen import random_generators, random_relation_system, random_space, random_vector
from .relations import extract_relations, relation_space
from .space import FiniteSpace, FunctionVec, Subspace, fmax, fmin, lattice_ops, sup_norm


@dataclass
class CheckResult:
    name: str
    passed: int
    total: int
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.passed == self.total

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        extra = f"  {self.detail}" if self.detail else ""
        return f"[{status}] {self.name}: {self.passed}/{self.total}{extra}"


def relation_space_roundtrip(cases: int = 500, seed: int = 1) -> CheckResult:
    rng = random.Random(seed)
    good = 0
    for _ in range(cases):
        sp = random_space(rng, 2, 10)
        R = random_relation_system(rng, sp, "lattice")
        B = relation_space(sp, R)
        if decide(B, "lattice") and relation_space(sp, extract_relations(B, "lattice")) == B:
            good += 1
    return CheckResult("1 relation spaces are sublattices, extraction roundtrips", good, cases)


def sublattice_decision_vs_sampling(cases: int = 500, seed: int = 2, samples: int = 1000) -> CheckResult:
    rng = random.Random(seed)
    good = 0
    n_false = 0
    for k in range(cases):
        sp = random_space(rng, 2, 10)
        gens = random_generators(rng, sp)
        A = Subspace.span(sp, gens)
        d = decide(A, "lattice")
        refutation = sample_closure_failure(A, seed=k, samples=samples, op="max")
        ok = d == (refutation is None)
        if not d:
            n_false += 1
            w = witness(A, "lattice", seed=k, budget=1000, generators=gens)
            w_ok = w is not None and w.f in A and w.g in A and w.combined not in A
            grown = iterative_closure_oracle(A, seed=k, budget=1000).subspace
            ok = ok and (w_ok or compare(A.basis, grown.basis) is Containment.S_STRICTLY_INSIDE_T)
        good += ok
    return CheckResult("2 sublattice decision vs sampling, witness, closure oracle", good, cases,
                       f"non-sublattices={n_false}")


def algebra_cross_validation(cases: int = 500, seed: int = 3) -> CheckResult:
    rng = random.Random(seed)
    good = 0
    n_alg = 0
    for _ in range(cases):
        sp = random_space(rng, 2, 10)
        A = Subspace.span(sp, random_generators(rng, sp, rng.choice(("lattice", "algebra"))))
        d = decide(A, "algebra")
        n_alg += d
        good += d == direct_algebra_check(A)
    return CheckResult("3 algebra decision: relation hull vs product closure", good, cases,
                       f"subalgebras={n_alg}")


def algebra_implies_lattice(cases: int = 200, seed: int = 4) -> CheckResult:
    rng = random.Random(seed)
    good = 0
    for _ in range(cases):
        sp = random_space(rng, 2, 10)
        B = relation_space(sp, random_relation_system(rng, sp, "algebra"))
        is_alg, is_lat = decide(B, "algebra"), decide(B, "lattice")
        good += (not is_alg) or is_lat
    return CheckResult("4 subalgebra implies sublattice", good, cases)


GRID = [Fraction(-2), Fraction(-1), Fraction(-1, 2), Fraction(0), Fraction(1, 2), Fraction(1), Fraction(2)]


def pair_catalog_sweep() -> CheckResult:
    good = 0
    for a in GRID:
        for b in GRID:
            proj = PairProjection("x", "y", canonical_basis([[a, b]], 2))
            pc = classify_pair(proj, "lattice")
            if a == 0 and b == 0:
                good += pc.kind is Kind.ZERO
                continue
            ok = (pc.kind is Kind.LINE_ALIGNED) == (a * b >= 0)
            if pc.kind is Kind.LINE_MIXED:
                S2 = FiniteSpace(("x", "y"))
                h = FunctionVec(S2, (a, b))
                ok = ok and not member(fmin(h, h.scale(2)).values, proj.proj_basis)
            good += ok
    return CheckResult("5 two-point sublattice catalog sweep", good, len(GRID) ** 2)


def affine_grid() -> CheckResult:
    S3 = FiniteSpace(("0", "1/2", "1"))
    t = FunctionVec(S3, (0, Fraction(1, 2), 1))
    one = FunctionVec(S3, (1, 1, 1))
    A = Subspace.span(S3, [one.values, t.values])
    checks = [
        not decide(A, "lattice"),
        not decide(A, "algebra"),
        fmax(t, one - t).values == (1, Fraction(1, 2), 1),
        fmax(t, one - t) not in A,
    ]
    w = witness(A, "lattice", generators=[one.values, t.values])
    checks.append(w is not None and w.combined.values == (1, Fraction(1, 2), 1) and w.combined not in A)
    S2 = FiniteSpace(("0", "1"))
    A2 = Subspace.span(S2, [(1, 1), (0, 1)])
    checks += [A2.basis == full_space(2), decide(A2, "lattice"), decide(A2, "algebra")]
    return CheckResult("6 affine functions on {0,1/2,1} vs {0,1}", sum(checks), len(checks))


def pairwise_boundary() -> CheckResult:
    S3 = FiniteSpace(("p1", "p2", "p3"))
    A = Subspace.span(S3, [(1, 1, 0), (0, 1, 1)])
    f = (1, 1, 1)
    checks = [member_by_pairs(f, A), f not in A, not decide(A, "lattice"), hull(A, "lattice").basis == full_space(3)]
    return CheckResult("7 pairwise-sufficiency boundary in R^3", sum(checks), len(checks))


def hull_axioms(cases: int = 300, seed: int = 8) -> CheckResult:
    rng = random.Random(seed)
    good = 0
    for _ in range(cases):
        sp = random_space(rng, 2, 10)
        B = Subspace.span(sp, random_generators(rng, sp))
        vecs = list(B.basis.vectors)
        rng.shuffle(vecs)
        A = Subspace.span(sp, vecs[: rng.randint(0, len(vecs))])
        ok = contains(B.basis, A.basis)
        for mode in ("lattice", "algebra"):
            hA, hB = hull(A, mode), hull(B, mode)
            ok = ok and contains(hA.basis, A.basis) and hull(hA, mode) == hA and contains(hB.basis, hA.basis)
        good += ok
    return CheckResult("8 hull is extensive, idempotent, monotone", good, cases)


def c0_transport(cases: int = 100, seed: int = 9) -> CheckResult:
    rng = random.Random(seed)
    good = 0
    for _ in range(cases):
        sp = random_space(rng, 1, 8)
        A = Subspace.span(sp, random_generators(rng, sp))
        cs = CompactifiedSpace(sp)
        ok = True
        fs = A.functions() + [FunctionVec(sp, tuple(random_vector(rng, len(sp)))) for _ in range(3)]
        for f in fs:
            for g in fs:
                hi, lo = lattice_ops(f, g)
                ehi, elo = lattice_ops(embed(f, cs), embed(g, cs))
                ok = ok and embed(hi, cs) == ehi and embed(lo, cs) == elo
            ef = embed(f, cs)
            ok = ok and restrict(ef, cs) == f and embed(restrict(ef, cs), cs) == ef
            ok = ok and sup_norm(ef) == sup_norm(f)
        Bc = embed_subspace(A, cs)
        for mode in ("lattice", "algebra"):
            res = c0_analyze(A, mode)
            ok = ok and res.decide == decide(Bc, mode)
            ok = ok and relation_space(sp, res.relations) == res.hull
        good += ok
    return CheckResult("9 C_0 analysis via one-point compactification", good, cases)


def cli_determinism(corpus: Path) -> CheckResult:
    from .cli import run

    files = sorted(corpus.glob("*.json"))
    commands = [["analyze"], ["relations"], ["hull"], ["witness", "--seed", "11"], ["dot"],
                ["analyze", "--mode", "algebra", "--seed", "3"]]
    total = good = 0
    for path in files:
        for cmd in commands:
            argv = [cmd[0], str(path)] + cmd[1:]
            outs = []
            for _ in range(2):
                buf = io.StringIO()
                code = run(argv, buf)
                outs.append((code, buf.getvalue().encode("utf-8")))
            total += 1
            good += outs[0] == outs[1] and outs[0][0] in (0, 1)
    return CheckResult("10 CLI byte-determinism over the corpus", good, total, f"files={len(files)}")


def all_checks(corpus: Path):
    return [
        relation_space_roundtrip,
        sublattice_decision_vs_sampling,
        algebra_cross_validation,
        algebra_implies_lattice,
        pair_catalog_sweep,
        affine_grid,
        pairwise_boundary,
        hull_axioms,
        c0_transport,
        lambda: cli_determinism(corpus),
    ]
