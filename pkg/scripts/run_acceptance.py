"""Run every acceptance check and print one PASS/FAIL line per criterion.

    python scripts/run_acceptance.py [--quick]
"""
import argparse
import sys
import time
from pathlib import Path

from cxlattice import acceptance

CORPUS = Path(__file__).resolve().parent.parent / "corpus"


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--quick", action="store_true", help="a tenth of the random cases")
    args = ap.parse_args()
    scale = 10 if args.quick else 1
    checks = [
        lambda: acceptance.relation_space_roundtrip(500 // scale),
        lambda: acceptance.sublattice_decision_vs_sampling(500 // scale),
        lambda: acceptance.algebra_cross_validation(500 // scale),
        lambda: acceptance.algebra_implies_lattice(200 // scale),
        acceptance.pair_catalog_sweep,
        acceptance.affine_grid,
        acceptance.pairwise_boundary,
        lambda: acceptance.hull_axioms(300 // scale),
        lambda: acceptance.c0_transport(100 // scale),
        lambda: acceptance.cli_determinism(CORPUS),
    ]
    failed = 0
    for check in checks:
        t0 = time.perf_counter()
        res = check()
        print(f"{res.line()}  ({time.perf_counter() - t0:.1f}s)")
        failed += not res.ok
    sys.exit(1 if failed else 0)


if __name__ == "__main__":
    main()
