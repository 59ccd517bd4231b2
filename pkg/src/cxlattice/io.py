"""JSON input/output documents and DOT export."""
from __future__ import annotations

import json
from fractions import Fraction

from . import __version__
from .analysis import AnalysisReport, Witness
from .linalg import format_scalar, parse_scalar
from .relations import Relation, RelationSystem
from .space import FiniteSpace, FunctionVec, Subspace

FORMAT = 1


class InputError(ValueError):
    """Malformed subspace document."""


def _scalar(x) -> Fraction:
    if isinstance(x, float):
        raise InputError(f"exact fractions required, got {x!r}")
    try:
        return parse_scalar(x)
    except ValueError as e:
        raise InputError(f"exact fractions required, got {x!r}") from e


def load_document(data: bytes | str) -> dict:
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    try:
        doc = json.loads(data)
    except json.JSONDecodeError as e:
        raise InputError(f"invalid JSON: {e}") from e
    if not isinstance(doc, dict):
        raise InputError("input must be a JSON object")
    if doc.get("format", FORMAT) != FORMAT:
        raise InputError(f"unsupported format {doc.get('format')!r}")
    return doc


def parse_spec(doc: dict) -> tuple[FiniteSpace, list[tuple[Fraction, ...]]]:
    points = doc.get("points")
    if not isinstance(points, list) or not all(isinstance(p, str) for p in points):
        raise InputError("'points' must be a list of string labels")
    try:
        space = FiniteSpace(tuple(points))
    except ValueError as e:
        raise InputError(str(e)) from e
    gens = doc.get("generators", [])
    if not isinstance(gens, list):
        raise InputError("'generators' must be a list of rows")
    rows = []
    for k, g in enumerate(gens):
        if not isinstance(g, list) or len(g) != len(space):
            raise InputError(f"generator {k} must be a list of {len(space)} entries")
        rows.append(tuple(_scalar(x) for x in g))
    return space, rows


def parse_subspace(data: bytes | str) -> tuple[FiniteSpace, Subspace]:
    space, rows = parse_spec(load_document(data))
    return space, Subspace.span(space, rows)


def parse_function(text: str, space: FiniteSpace) -> FunctionVec:
    """A function given as a JSON array or a comma-separated row."""
    text = text.strip()
    if text.startswith("["):
        try:
            items = json.loads(text)
        except json.JSONDecodeError as e:
            raise InputError(f"invalid function row: {e}") from e
    else:
        items = [t.strip() for t in text.split(",")]
    if len(items) != len(space):
        raise InputError(f"function has {len(items)} values, space has {len(space)} points")
    return FunctionVec(space, tuple(_scalar(x) for x in items))


def row_json(values) -> list[str]:
    return [format_scalar(Fraction(v)) for v in values]


def basis_json(A: Subspace) -> dict:
    return {"rank": A.rank, "basis": [row_json(v) for v in A.basis.vectors]}


def witness_json(w: Witness | None):
    if w is None:
        return None
    return {"op": w.op, "f": row_json(w.f.values), "g": row_json(w.g.values),
            "combined": row_json(w.combined.values)}


def relations_json(R: RelationSystem) -> list[dict]:
    return R.to_json()


def parse_relations(items: list, space: FiniteSpace) -> RelationSystem:
    try:
        rels = tuple(Relation.from_json(r) for r in items)
        return RelationSystem(space, rels)
    except (KeyError, TypeError, ValueError) as e:
        raise InputError(f"bad relation: {e}") from e


def report_json(report: AnalysisReport) -> dict:
    return {
        "is_sublattice": report.is_sublattice,
        "is_subalgebra": report.is_subalgebra,
        "lattice_hull": basis_json(report.lattice_hull),
        "algebra_hull": basis_json(report.algebra_hull),
        "relations": {
            "lattice": relations_json(report.relations_lattice),
            "algebra": relations_json(report.relations_algebra),
        },
        "separation": {
            "separates_points": report.separates_points,
            "non_separated_pairs": [list(p) for p in report.non_separated_pairs],
            "zero_set": list(report.zero_set),
        },
        "witness": witness_json(report.witness),
        "witness_note": report.witness_note,
    }


def envelope(command: str, space: FiniteSpace, rows, **fields) -> dict:
    doc = {
        "format": FORMAT,
        "tool": "cxlattice",
        "version": __version__,
        "command": command,
        "input": {"points": list(space.points), "generators": [row_json(r) for r in rows]},
    }
    doc.update(fields)
    return doc


def dumps(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _q(label: str) -> str:
    return '"' + label.replace("\\", "\\\\").replace('"', '\\"') + '"'


def emit_dot(R: RelationSystem) -> str:
    """Graphviz rendering of a canonical relation system."""
    zeros = {r.t for r in R if r.is_zero}
    lines = ["digraph relations {"]
    for p in R.space.points:
        if p in zeros:
            lines.append(f"  {_q(p)} [label={_q(p + ' =0')}];")
        else:
            lines.append(f"  {_q(p)};")
    for r in sorted(R, key=R.sort_key):
        if r.is_zero:
            continue
        if r.lam == 1:
            lines.append(f'  {_q(r.t)} -> {_q(r.s)} [dir=none, color="black:black"];')
        else:
            lines.append(f"  {_q(r.t)} -> {_q(r.s)} [label={_q('λ=' + format_scalar(r.lam))}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
