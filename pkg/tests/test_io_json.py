"""Round-trips for every JSON format."""

import json
from fractions import Fraction

from qdq.io_json import (
    block_matrix_to_json,
    block_matrix_from_json,
    grid_from_json,
    grid_to_json,
    matrix_from_json,
    matrix_to_json,
    ncsquare_from_json,
    ncsquare_to_json,
    ratfunc_from_json,
    ratfunc_to_json,
    report_to_json,
)
from qdq.linalg import BlockMatrix, Matrix
from qdq.quasidet import NCSquare
from qdq.report import Report
from qdq.rmatrix import standard_r, ybe_check
from qdq.scalars import ScalarField

F = ScalarField(2)


def test_ratfunc_roundtrip():
    for x in (
        F.zero,
        F.one,
        F.q - F.q_inv,
        F.from_coeffs([Fraction(1, 3), -2], [0, 0, 1]),
    ):
        obj = ratfunc_to_json(x)
        json.dumps(obj)  # encodable
        assert ratfunc_from_json(obj, F) == x
    assert ratfunc_to_json(F.zero) == {"num": ["0"], "den": ["1"]}


def test_ratfunc_coefficients_are_lowest_terms_strings():
    x = F.from_coeffs([Fraction(2, 4)], [1])
    obj = ratfunc_to_json(x)
    assert obj["num"] == ["1/2"]


def test_matrix_roundtrip():
    r = standard_r(2, F)
    obj = matrix_to_json(r.mat)
    assert matrix_from_json(obj, F) == r.mat
    assert obj["rows"] == 4 and obj["cols"] == 4


def test_block_matrix_roundtrip():
    m = Matrix.diag([F.q, F.one], F)
    z = Matrix.zeros(2, 2, F)
    bm = BlockMatrix([[m, z], [z, m]], F)
    obj = block_matrix_to_json(bm)
    assert obj["inner_dim"] == 2
    assert block_matrix_from_json(obj, F) == bm


def test_ncsquare_roundtrips():
    scal = NCSquare([[F.one, F.q], [F.zero, F.one]], F)
    obj = ncsquare_to_json(scal)
    back = ncsquare_from_json(obj)
    assert back == scal and back.field.root_order == 2
    op = NCSquare(
        [[Matrix.identity(2, F), Matrix.zeros(2, 2, F)],
         [Matrix.zeros(2, 2, F), Matrix.diag([F.q, F.q], F)]],
        F,
    )
    obj = ncsquare_to_json(op)
    assert "inner_dim" in obj
    assert ncsquare_from_json(obj) == op


def test_grid_roundtrip():
    g = [[Fraction(1, 2), Fraction(0)], [Fraction(-3), Fraction(7, 3)]]
    assert grid_from_json(grid_to_json(g)) == g


def test_report_json_shape():
    rep = ybe_check(standard_r(2, F))
    obj = report_to_json(rep)
    assert obj["check"] == "ybe" and obj["pass"] is True
    assert obj["witness"] is None
    assert "ms" in obj
    json.dumps(obj)


def test_report_witness_encoding():
    rep = Report(
        "demo",
        {"n": 2},
        False,
        witness={"coords": [0, 1], "lhs": F.q, "rhs": F.one},
    )
    obj = report_to_json(rep)
    assert obj["witness"]["lhs"] == ratfunc_to_json(F.q)
    json.dumps(obj, sort_keys=True)
