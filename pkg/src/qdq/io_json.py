"""JSON encodings for scalars, matrices, and reports.

Rational coefficients travel as "p/q" strings in lowest terms; the
ambient object carries the root order once.  Encoders are deterministic:
identical values produce identical JSON.
"""

from __future__ import annotations

from fractions import Fraction

from .linalg import BlockMatrix, Matrix
from .quasidet import NCSquare
from .report import Report
from .scalars import RatFunc, ScalarField


def _rat_str(c) -> str:
    return str(c)


def ratfunc_to_json(x: RatFunc) -> dict:
    return {
        "num": [_rat_str(c) for c in x.num] or ["0"],
        "den": [_rat_str(c) for c in x.den],
    }


def ratfunc_from_json(obj, field: ScalarField) -> RatFunc:
    return field.from_coeffs(
        [Fraction(c) for c in obj["num"]], [Fraction(c) for c in obj["den"]]
    )


def matrix_to_json(m: Matrix) -> dict:
    return {
        "rows": m.rows,
        "cols": m.cols,
        "entries": [[ratfunc_to_json(e) for e in row] for row in m.entries],
    }


def matrix_from_json(obj, field: ScalarField) -> Matrix:
    entries = [
        [ratfunc_from_json(e, field) for e in row] for row in obj["entries"]
    ]
    return Matrix(obj["rows"], obj["cols"], entries, field)


def block_matrix_to_json(bm: BlockMatrix) -> dict:
    return {
        "block_rows": bm.block_rows,
        "block_cols": bm.block_cols,
        "inner_dim": bm.inner,
        "blocks": [[matrix_to_json(b) for b in row] for row in bm.blocks],
    }


def block_matrix_from_json(obj, field: ScalarField) -> BlockMatrix:
    blocks = [
        [matrix_from_json(b, field) for b in row] for row in obj["blocks"]
    ]
    return BlockMatrix(blocks, field)


def ncsquare_to_json(x: NCSquare) -> dict:
    out = {"root_order": x.field.root_order, "size": x.m}
    if x.kind == "operator":
        out["inner_dim"] = x.inner
        out["entries"] = [[matrix_to_json(e) for e in row] for row in x.entries]
    else:
        out["entries"] = [[ratfunc_to_json(e) for e in row] for row in x.entries]
    return out


def ncsquare_from_json(obj) -> NCSquare:
    field = ScalarField(int(obj.get("root_order", 1)))
    if "inner_dim" in obj:
        entries = [
            [matrix_from_json(e, field) for e in row] for row in obj["entries"]
        ]
    else:
        entries = [
            [ratfunc_from_json(e, field) for e in row] for row in obj["entries"]
        ]
    return NCSquare(entries, field)


def grid_to_json(grid) -> list:
    return [[_rat_str(v) for v in row] for row in grid]


def grid_from_json(rows) -> list:
    return [[Fraction(v) for v in row] for row in rows]


def _plain(value):
    """Recursively convert values to JSON-encodable plain data."""
    if isinstance(value, RatFunc):
        return ratfunc_to_json(value)
    if isinstance(value, Matrix):
        return matrix_to_json(value)
    if isinstance(value, (tuple, list)):
        return [_plain(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, Report):
        return report_to_json(value)
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, (int, float, str)):
        return value
    return str(value)


def report_to_json(rep: Report) -> dict:
    return {
        "check": rep.check,
        "params": _plain(rep.params),
        "pass": rep.passed,
        "witness": _plain(rep.witness) if rep.witness is not None else None,
        "ms": round(rep.ms, 3),
        "details": _plain(rep.details),
    }
