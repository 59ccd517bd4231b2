"""Command line entry point.

Exit codes: 0 when the requested property holds, 1 when it fails,
2 on malformed input.
"""
from __future__ import annotations

import argparse
import sys

from .analysis import DEFAULT_BUDGET, DEFAULT_SEED, analyze, member_by_pairs, witness
from .c0 import INFINITY, analyze_c0, c0_analyze, c0_witness
from .io import (
    InputError,
    basis_json,
    dumps,
    emit_dot,
    envelope,
    load_document,
    parse_function,
    parse_spec,
    report_json,
    row_json,
    witness_json,
)
from .relations import extract_relations, relation_space
from .space import Subspace

COMMANDS = ("analyze", "relations", "hull", "witness", "check-member", "dot")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cxlattice", description=__doc__.splitlines()[0])
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("input", help="subspace document (JSON), or - for stdin")
    p.add_argument("--mode", choices=("lattice", "algebra"), default=None)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--c0", action="store_true", default=None,
                   help="read the points as T and analyse the subspace of C_0(T)")
    p.add_argument("--infinity-label", default=None)
    p.add_argument("--function", help="row for check-member, e.g. '1,1/2,1'")
    return p


def _read(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    with open(path, "rb") as fh:
        return fh.read()


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        raw = _read(args.input)
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    try:
        return _run(args, raw, out)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


def _run(args, raw: bytes, out) -> int:
    doc = load_document(raw)
    space, rows = parse_spec(doc)
    A = Subspace.span(space, rows)
    mode = args.mode or doc.get("mode", "lattice")
    if mode not in ("lattice", "algebra"):
        raise InputError(f"unknown mode {mode!r}")
    c0 = args.c0 if args.c0 is not None else bool(doc.get("c0", False))
    inf = args.infinity_label or doc.get("infinity_label", INFINITY)
    common = dict(mode=mode, seed=args.seed, budget=args.budget, c0=c0)
    if c0:
        common["infinity_label"] = inf

    if args.command == "check-member":
        if args.function is None:
            raise InputError("check-member needs --function")
        f = parse_function(args.function, space)
        inside = f in A
        res = {"function": row_json(f.values), "member": inside, "member_by_pairs": member_by_pairs(f, A)}
        out.write(dumps(envelope("check-member", space, rows, **common, result=res)))
        return 0 if inside else 1

    try:
        if args.command == "analyze":
            if c0:
                report = analyze_c0(A, args.seed, args.budget, rows, inf)
            else:
                report = analyze(A, args.seed, args.budget, rows)
            holds = report.is_sublattice if mode == "lattice" else report.is_subalgebra
            res = report_json(report)
            res["holds"] = holds
            out.write(dumps(envelope("analyze", space, rows, **common, result=res)))
            return 0 if holds else 1

        if c0:
            r = c0_analyze(A, mode, inf)
            rels, H, holds = r.relations, r.hull, r.decide
        else:
            rels = extract_relations(A, mode)
            H = relation_space(space, rels)
            holds = H.basis == A.basis

        if args.command == "relations":
            res = {"holds": holds, "relations": rels.to_json()}
            out.write(dumps(envelope("relations", space, rows, **common, result=res)))
        elif args.command == "hull":
            res = {"holds": holds, "hull": basis_json(H)}
            out.write(dumps(envelope("hull", space, rows, **common, result=res)))
        elif args.command == "witness":
            w, note = None, None
            if not holds:
                if c0:
                    w = c0_witness(A, mode, args.seed, args.budget, rows, inf)
                else:
                    w = witness(A, mode, args.seed, args.budget, rows)
                if w is None:
                    note = f"not a sub{mode} (by the relation hull test); no explicit witness found within budget"
            res = {"holds": holds, "witness": witness_json(w), "witness_note": note}
            out.write(dumps(envelope("witness", space, rows, **common, result=res)))
        elif args.command == "dot":
            out.write(emit_dot(rels))
    except InputError:
        raise
    except ValueError as e:
        raise InputError(str(e)) from e
    return 0 if holds else 1


def main(argv=None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
