"""Print the classification of every line span{(a, b)} on a small grid,
then the verdicts for each file in corpus/."""
from fractions import Fraction
from pathlib import Path

from cxlattice.analysis import analyze
from cxlattice.io import parse_spec, load_document
from cxlattice.linalg import canonical_basis
from cxlattice.pairs import PairProjection, classify_pair
from cxlattice.space import Subspace

GRID = [Fraction(x) for x in ("-2", "-1", "-1/2", "0", "1/2", "1", "2")]
CORPUS = Path(__file__).resolve().parent.parent / "corpus"

print(f"{'a':>5} {'b':>5}  lattice class                  algebra")
for a in GRID:
    for b in GRID:
        proj = PairProjection("x", "y", canonical_basis([[a, b]], 2))
        lat = classify_pair(proj, "lattice")
        alg = classify_pair(proj, "algebra")
        print(f"{str(a):>5} {str(b):>5}  {str(lat):<30} {'yes' if alg.is_subalgebra else 'no'}")

print()
for path in sorted(CORPUS.glob("*.json")):
    space, rows = parse_spec(load_document(path.read_bytes()))
    rep = analyze(Subspace.span(space, rows), generators=rows)
    rels = ", ".join(str(r) for r in rep.relations_lattice) or "-"
    print(f"{path.name:<24} sublattice={rep.is_sublattice!s:<5} subalgebra={rep.is_subalgebra!s:<5} {rels}")
