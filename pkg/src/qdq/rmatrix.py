"""The standard quantum gl_n R-matrix on V (x) V and its calculus.

Conventions (validated at runtime by the Yang-Baxter and Hecke checks):

    R(v_a (x) v_b) = q^[a=b] v_a (x) v_b + (q - 1/q) [a > b] v_b (x) v_a

i.e. R = sum_a q E_aa (x) E_aa + sum_{a != b} E_aa (x) E_bb
       + (q - 1/q) sum_{a < b} E_ab (x) E_ba,

with Rhat = flip . R satisfying (Rhat - q)(Rhat + 1/q) = 0.  The
antisymmetric eigenvalue is -1/q; the joint antisymmetric kernel in
V^(x)n is one-dimensional and realizes the quantum determinant comodule.
The classical limit pins the normalization: R at s = 1 is the identity.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .errors import WrongWedgeDimensionError
from .linalg import (
    BlockMatrix,
    Matrix,
    TensorIndexing,
    flip_perm,
    gauss_invert,
    kernel_basis,
    kernel_basis_grid,
    leg_embed,
)
from .report import Report, equality_report
from .scalars import ScalarField, as_rational, q_power


@dataclass
class RMatrix:
    """An invertible operator on V (x) V intended to satisfy the YBE."""

    n: int
    mat: Matrix
    field: ScalarField


def standard_r(n: int, field: ScalarField) -> RMatrix:
    """The vector-representation image of the universal R-matrix of gl_n."""
    d = n * n
    m = Matrix.zeros(d, d, field)
    one = field.one
    q = field.q
    lam = field.q - field.q_inv
    for a in range(n):
        for b in range(n):
            idx = a * n + b
            m.entries[idx][idx] = q if a == b else one
    for a in range(n):
        for b in range(a + 1, n):
            # E_ab (x) E_ba sends v_b (x) v_a to v_a (x) v_b
            m.entries[a * n + b][b * n + a] = lam
    return RMatrix(n, m, field)


def r_hat(r: RMatrix) -> Matrix:
    """flip . R, the Hecke-normalized braiding operator."""
    return flip_perm(r.n, r.field) * r.mat


def ybe_check(r: RMatrix) -> Report:
    """R12 R13 R23 = R23 R13 R12 on V^(x)3, exactly."""
    t0 = time.perf_counter()
    n = r.n
    r12 = leg_embed(r.mat, (1, 2), n, 3)
    r13 = leg_embed(r.mat, (1, 3), n, 3)
    r23 = leg_embed(r.mat, (2, 3), n, 3)
    lhs = r12 * r13 * r23
    rhs = r23 * r13 * r12
    return equality_report("ybe", {"n": n}, lhs, rhs, t0)


def hecke_check(rhat: Matrix, field: ScalarField) -> Report:
    """(Rhat - q)(Rhat + 1/q) = 0, with the two eigenspace dimensions."""
    t0 = time.perf_counter()
    d = rhat.rows
    n = round(d**0.5)
    ident = Matrix.identity(d, field)
    lhs = (rhat - ident.scale(field.q)) * (rhat + ident.scale(field.q_inv))
    rep = equality_report("hecke", {"dim": d}, lhs, Matrix.zeros(d, d, field), t0)
    sym = len(kernel_basis(rhat - ident.scale(field.q)))
    anti = len(kernel_basis(rhat + ident.scale(field.q_inv)))
    rep.details["eigenspace_dims"] = (sym, anti)
    rep.details["expected_dims"] = (n * (n + 1) // 2, n * (n - 1) // 2)
    rep.ms = (time.perf_counter() - t0) * 1000.0
    return rep


def wedge_top(rhat: Matrix, n: int):
    """Spanning vector of the joint antisymmetric kernel in V^(x)n.

    Computes the intersection of ker(Rhat_{i,i+1} + 1/q) over i = 1..n-1
    by one reduced-echelon pass over the stacked constraints; asserts the
    intersection is one-dimensional and normalizes the first nonzero
    coordinate (in lexicographic basis order) to 1.
    """
    field = rhat.field
    dim = n**n
    if n == 1:
        return [field.one]
    ident = Matrix.identity(n * n, field)
    constraint = rhat + ident.scale(field.q_inv)
    stacked = []
    for i in range(1, n):
        emb = leg_embed(constraint, (i, i + 1), n, n)
        stacked.extend(emb.entries)
    basis = kernel_basis_grid(stacked, dim, field.zero, field.one)
    if len(basis) != 1:
        raise WrongWedgeDimensionError(len(basis))
    return basis[0]


def wedge_coefficients(w, n: int):
    """Nonzero wedge coordinates keyed by 1-based multi-index."""
    ti = TensorIndexing(n, n)
    return {ti.from_linear(i): c for i, c in enumerate(w) if c}


def l_plus(r_j: RMatrix, k: int) -> BlockMatrix:
    """L+ acting on W = V^(x)k, read as an n x n block matrix over the
    first (matrix) leg: the flattened form is R_{0,k} ... R_{0,1} with leg 0
    the matrix leg (hexagon composition)."""
    n = r_j.n
    flat = None
    for j in range(k, 0, -1):
        factor = leg_embed(r_j.mat, (1, 1 + j), n, k + 1)
        flat = factor if flat is None else flat * factor
    return BlockMatrix.from_flat(flat, n, n)


def l_minus(r_j: RMatrix, k: int) -> BlockMatrix:
    """L- on V^(x)k: as L+ but built from R21^{-1} = flip . R^{-1} . flip."""
    n = r_j.n
    p = flip_perm(n, r_j.field)
    rt = p * gauss_invert(r_j.mat) * p
    flat = None
    for j in range(k, 0, -1):
        factor = leg_embed(rt, (1, 1 + j), n, k + 1)
        flat = factor if flat is None else flat * factor
    return BlockMatrix.from_flat(flat, n, n)


def cartan_exp(a_grid, field: ScalarField) -> Matrix:
    """Diagonal operator on V (x) V scaling v_k (x) v_l by q^{a_kl}.

    Every a_kl * root_order must be an integer."""
    n = len(a_grid)
    vals = []
    for k in range(n):
        if len(a_grid[k]) != n:
            raise ValueError("exponent grid must be square")
        for l in range(n):
            vals.append(q_power(as_rational(a_grid[k][l]), field))
    return Matrix.diag(vals, field)


def weight_exp(c, k: int, field: ScalarField) -> Matrix:
    """Diagonal operator on V^(x)k scaling v_{i1} ... v_{ik} by
    q^{c_{i1} + ... + c_{ik}}; Cartan weights add over tensor factors."""
    c = [as_rational(x) for x in c]
    n = len(c)
    ti = TensorIndexing(n, k)
    vals = []
    for multi in ti.all_multis():
        vals.append(q_power(sum(c[i - 1] for i in multi), field))
    return Matrix.diag(vals, field)
