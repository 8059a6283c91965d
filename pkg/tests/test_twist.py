"""Diagram data validation, the Theta solver, and twist assembly."""

from fractions import Fraction

import pytest

from qdq.errors import BetaNotInH0Error, InvalidTripleError, OrderReversingError
from qdq.linalg import Matrix, TensorIndexing, rref_rows
from qdq.rmatrix import hecke_check, r_hat, standard_r, wedge_top, ybe_check
from qdq.scalars import Q
from qdq.twist import (
    BDTriple,
    ThetaSolution,
    build_twist,
    cartan_data,
    cocycle_check,
    enumerate_triples,
    p_vector,
    solve_theta,
    theta_residuals,
    untwisted,
    validate_triple,
)

H = Fraction(1, 2)

CG = BDTriple.make(3, [1], [2], {1: 2})

# one rational solution of the moment conditions for the Cremmer-Gervais
# datum; the solver may pick another point of the same affine family
CG_THETA = [
    [0, H, H],
    [H, 0, H],
    [0, H, 0],
]

CG_BETA = [
    [0, H, 2 * H],
    [-H, 0, H],
    [-2 * H, -H, 0],
]  # (u (x) v - v (x) u)/2 with u = (1,1,1), v = (1,0,-1)

GL4 = BDTriple.make(4, [1], [3], {1: 3})


def test_validate_cg():
    assert validate_triple(CG).passed


def test_validate_not_disjoint():
    rep = validate_triple(BDTriple.make(3, [1], [1], {1: 1}))
    assert not rep.passed
    assert "NotDisjoint" in rep.details["failed_clauses"]


def test_validate_order_reversing():
    rep = validate_triple(BDTriple.make(5, [1, 2], [3, 4], {1: 4, 2: 3}))
    assert not rep.passed
    assert rep.details["failed_clauses"] == ["OrderReversing"]


def test_validate_adjacency():
    # moving two non-adjacent blocks onto adjacent roots breaks the iff
    rep = validate_triple(BDTriple.make(6, [1, 3], [4, 5], {1: 4, 3: 5}))
    assert not rep.passed
    assert "AdjacencyBroken" in rep.details["failed_clauses"]
    # while parallel translation of separated blocks stays valid
    assert validate_triple(BDTriple.make(5, [1, 3], [2, 4], {1: 2, 3: 4})).passed


def test_blocks():
    t = BDTriple.make(7, [1, 2, 4, 6], [3, 5], {})
    assert t.blocks() == [(1, 2), (4, 4), (6, 6)]


def test_cartan_data_cg():
    cd = cartan_data(CG)
    z = cd.z_grid
    want = [[0, 0, 0], [H, -H, 0], [-H, H, 0]]
    assert z == [[Q(v) for v in row] for row in want]
    # h1 = span(H1 - H2), tau maps it to H2 - H3
    assert cd.h1_basis == [[Q(1), Q(-1), Q(0)]]
    tv = [
        sum(cd.tau_mat[k][l] * x for l, x in enumerate([Q(1), Q(-1), Q(0)]))
        for k in range(3)
    ]
    assert tv == [Q(0), Q(1), Q(-1)]
    # tau kills the orthogonal complement of h1
    for v in cd.h1_perp_basis:
        img = [sum(cd.tau_mat[k][l] * v[l] for l in range(3)) for k in range(3)]
        assert all(not x for x in img)


def test_cartan_data_h0_cg():
    cd = cartan_data(CG)
    # h0 = {y: y1 - y2 = y2 - y3}; (1,1,1) and (1,0,-1) span it
    span = [r[:] for r in cd.h0_basis]
    for v in ([Q(1), Q(1), Q(1)], [Q(1), Q(0), Q(-1)]):
        rows = [r[:] for r in span] + [v[:]]
        work = [r[:] for r in rows]
        rref_rows(work, 3)
        rank_with = sum(1 for r in work if any(r))
        assert rank_with == len(span)
    assert len(span) == 2


def test_cartan_data_empty():
    t = BDTriple.make(4)
    cd = cartan_data(t)
    assert all(not v for row in cd.z_grid for v in row)
    assert len(cd.h0_basis) == 4
    assert cd.h1_basis == []


def test_recorded_cg_theta_satisfies_conditions():
    assert theta_residuals(CG, CG_THETA) == []
    # its Y has equal first rows and equal second/third columns
    cd = cartan_data(CG)
    y = [
        [cd.z_grid[i][j] - Q(CG_THETA[i][j]) for j in range(3)]
        for i in range(3)
    ]
    want = [
        [Q(0), -H, -H],
        [Q(0), -H, -H],
        [-H, Q(0), Q(0)],
    ]
    assert y == [[Q(v) for v in row] for row in want]
    assert y[0] == y[1]
    assert [y[i][1] for i in range(3)] == [y[i][2] for i in range(3)]


def test_solve_theta_empty():
    sol = solve_theta(BDTriple.make(3))
    assert all(not v for row in sol.theta for v in row)


def test_solve_theta_cg():
    sol = solve_theta(CG)
    assert theta_residuals(CG, sol.theta) == []
    # condition (i) in matrix form: rows 1,2 of Y agree, columns 2,3 agree
    y = sol.y
    assert y[0] == y[1]
    assert [y[i][1] for i in range(3)] == [y[i][2] for i in range(3)]


@pytest.mark.parametrize("n", [2, 3, 4])
def test_solve_theta_all_triples(n):
    for t in enumerate_triples(n):
        sol = solve_theta(t)
        assert theta_residuals(t, sol.theta) == []


def test_enumerate_counts_small():
    assert len(enumerate_triples(2)) == 1  # only the empty triple
    names = {
        (t.gamma1, t.gamma2, t.tau_pairs) for t in enumerate_triples(3)
    }
    assert ((), (), ()) in names
    assert (((1,), (2,), ((1, 2),))) in names
    assert (((2,), (1,), ((2, 1),))) in names
    assert len(names) == 3


def test_untwisted_build():
    tw = untwisted(3)
    assert tw.j_vv == Matrix.identity(9, tw.field)
    assert tw.r_j.mat == standard_r(3, tw.field).mat
    assert p_vector(tw) == [0, 0, 0]


def test_build_cg_jprime():
    tw = build_twist(CG, CG_THETA)
    assert tw.field.root_order == 2
    lam = tw.field.q - tw.field.q_inv
    ti = TensorIndexing(3, 2)
    want = Matrix.identity(9, tw.field)
    r = ti.to_linear((2, 2))
    c = ti.to_linear((3, 1))
    want.entries[r][c] = lam
    assert tw.jprime_vv == want


def test_jprime_block_structure():
    # nonzero off-diagonal entries only where the first leg strictly
    # decreases row-to-column and the second strictly increases
    tw = build_twist(GL4, solve_theta(GL4))
    n = 4
    ti = TensorIndexing(n, 2)
    ident = Matrix.identity(n * n, tw.field)
    for r in range(n * n):
        for c in range(n * n):
            e = tw.jprime_vv.entries[r][c] - ident.entries[r][c]
            if e:
                a, cc = ti.from_linear(r)
                b, d = ti.from_linear(c)
                assert a < b and cc > d


def test_twist_classical_limit_and_conjugation():
    for tw in (build_twist(CG, CG_THETA), build_twist(GL4)):
        n = tw.n
        vals = tw.j_vv.evaluate(1)
        for i in range(n * n):
            for j in range(n * n):
                assert vals[i][j] == (1 if i == j else 0)
        # Rhat_J = J^{-1} Rhat J
        from qdq.linalg import gauss_invert

        rhat_j = r_hat(tw.r_j)
        std = standard_r(n, tw.field)
        jinv = gauss_invert(tw.j_vv)
        assert rhat_j == jinv * r_hat(std) * tw.j_vv


def test_twisted_r_passes_structure_checks():
    tw = build_twist(CG, CG_THETA)
    assert ybe_check(tw.r_j).passed
    rep = hecke_check(r_hat(tw.r_j), tw.field)
    assert rep.passed
    assert rep.details["eigenspace_dims"] == (6, 3)
    w = wedge_top(r_hat(tw.r_j), 3)
    assert sum(1 for c in w if c) >= 1  # dimension-1 assertion is inside


def test_cocycle_trivial_and_cg():
    assert cocycle_check(BDTriple.make(2)).passed
    assert cocycle_check(CG, CG_THETA).passed
    assert cocycle_check(CG).passed  # solver's own Theta


def test_cocycle_corrupted_theta_fails():
    bad = [row[:] for row in CG_THETA]
    bad[0][0] = bad[0][0] + 1  # breaks the mixed moment condition
    assert theta_residuals(CG, bad) != []
    rep = cocycle_check(CG, bad)
    assert not rep.passed
    assert rep.witness and rep.witness["lhs"] != rep.witness["rhs"]


def test_beta_extension():
    tw = build_twist(CG, CG_THETA, CG_BETA)
    assert cocycle_check(CG, CG_THETA, CG_BETA).passed
    # antisymmetric beta flips its p-vector contribution with its sign
    p0 = p_vector(build_twist(CG, CG_THETA))
    pp = p_vector(tw)
    neg = [[-v for v in row] for row in CG_BETA]
    pm = p_vector(build_twist(CG, CG_THETA, neg))
    diff_plus = [a - b for a, b in zip(pp, p0)]
    diff_minus = [a - b for a, b in zip(pm, p0)]
    assert diff_plus == [-v for v in diff_minus]


def test_beta_validation():
    sym = [[0, 1, 0], [1, 0, 0], [0, 0, 0]]
    with pytest.raises(BetaNotInH0Error):
        build_twist(CG, CG_THETA, sym)
    # antisymmetric but not supported on h0: u = (1,-1,0) is not in h0
    bad = [
        [0, 0, 1],
        [0, 0, -1],
        [-1, 1, 0],
    ]
    with pytest.raises(BetaNotInH0Error):
        build_twist(CG, CG_THETA, bad)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_cocycle_with_beta_across_triples(n):
    # a nonzero antisymmetric grid from the first two h0 directions
    for t in enumerate_triples(n):
        cd = cartan_data(t)
        if len(cd.h0_basis) < 2:
            continue
        u, v = cd.h0_basis[0], cd.h0_basis[1]
        beta = [
            [(u[i] * v[j] - v[i] * u[j]) / 2 for j in range(n)] for i in range(n)
        ]
        assert cocycle_check(t, None, beta).passed, (t, "beta cocycle")


def test_invalid_triples_raise_on_build():
    with pytest.raises(InvalidTripleError):
        build_twist(BDTriple.make(3, [1], [1], {1: 1}))
    with pytest.raises(OrderReversingError):
        build_twist(BDTriple.make(5, [1, 2], [3, 4], {1: 4, 2: 3}))


def test_p_vector_cg_recorded():
    tw = build_twist(CG, CG_THETA)
    assert p_vector(tw) == [H, 0, -H]


def test_theta_solution_object_accepted():
    sol = solve_theta(CG)
    assert isinstance(sol, ThetaSolution)
    tw = build_twist(CG, sol)
    assert cocycle_check(CG, sol.theta).passed
    assert tw.field.root_order == 2
