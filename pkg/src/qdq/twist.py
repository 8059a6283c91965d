"""Belavin-Drinfeld-type diagram data and the triangular twist construction.

A datum is a pair of disjoint subsets Gamma1, Gamma2 of the simple roots
{1..n-1} of gl_n with an adjacency-preserving bijection tau: Gamma1 ->
Gamma2 that is order-preserving on every connected block.  From it we
build, entirely at the level of operators on V (x) V:

  * the Cartan tensor Z = (tau (x) 1) applied to the h1 Casimir,
  * a rational solution Theta of the two moment conditions

        (x (x) 1, Z - Theta) = (1 (x) tau(x), Z - Theta) = 0
        (tau(x) (x) 1 + 1 (x) x, Theta) = 0          for x in h1,

  * the unipotent part J' = 1 + (q - 1/q) sum E_{tau(i), tau(j)} (x) E_{j, i}
    over pairs i < j in each block's vertex interval,
  * the twist J = e^{h(Z - Theta)} J' e^{h beta} with beta an antisymmetric
    Cartan tensor supported on h0 (x) h0, h0 = {y : (y, x) = (y, tau(x))},
  * the twisted braiding R_J = flip J^{-1} flip . R . J.

The twist property itself is never assumed: cocycle_check evaluates both
sides of the coproduct identity on V (x) V (x) V exactly.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field as dc_field

from .errors import (
    BetaNotInH0Error,
    InvalidTripleError,
    NoSolutionError,
    OrderReversingError,
)
from .linalg import (
    Matrix,
    flip_perm,
    gauss_invert,
    kernel_basis_grid,
    leg_embed,
    rref_rows,
    solve_particular,
)
from .report import Report, equality_report
from .rmatrix import RMatrix, cartan_exp, standard_r
from .scalars import Q, ScalarField, as_rational, lcm_denominators

_Q0 = Q(0)
_Q1 = Q(1)


@dataclass(frozen=True)
class BDTriple:
    """(Gamma1, Gamma2, tau) with tau given as ordered pairs (a, tau(a))."""

    n: int
    gamma1: tuple
    gamma2: tuple
    tau_pairs: tuple

    @classmethod
    def make(cls, n, gamma1=(), gamma2=(), tau=None):
        g1 = tuple(sorted(set(int(a) for a in gamma1)))
        g2 = tuple(sorted(set(int(a) for a in gamma2)))
        tau = dict(tau or {})
        pairs = tuple(sorted((int(a), int(b)) for a, b in tau.items()))
        return cls(n, g1, g2, pairs)

    @property
    def tau(self) -> dict:
        return dict(self.tau_pairs)

    def blocks(self):
        """Connected components of gamma1 as (first_root, last_root) pairs."""
        out = []
        run = None
        for a in self.gamma1:
            if run is None:
                run = [a, a]
            elif a == run[1] + 1:
                run[1] = a
            else:
                out.append(tuple(run))
                run = [a, a]
        if run is not None:
            out.append(tuple(run))
        return out

    def is_empty(self):
        return not self.gamma1


def validate_triple(t: BDTriple) -> Report:
    """Clause-by-clause structural validation; report-valued."""
    t0 = time.perf_counter()
    failed = []
    tau = t.tau
    roots = set(range(1, t.n))
    if not set(t.gamma1) <= roots or not set(t.gamma2) <= roots:
        failed.append("RootRange")
    if set(tau.keys()) != set(t.gamma1) or set(tau.values()) != set(t.gamma2) or len(
        set(tau.values())
    ) != len(tau):
        failed.append("NotBijection")
    if set(t.gamma1) & set(t.gamma2):
        failed.append("NotDisjoint")
    if "NotBijection" not in failed and "RootRange" not in failed:
        adjacency_ok = True
        for a in t.gamma1:
            for b in t.gamma1:
                if (abs(a - b) == 1) != (abs(tau[a] - tau[b]) == 1):
                    adjacency_ok = False
        if not adjacency_ok:
            failed.append("AdjacencyBroken")
        else:
            for a in t.gamma1:
                if a + 1 in t.gamma1 and tau[a + 1] != tau[a] + 1:
                    failed.append("OrderReversing")
                    break
    rep = Report(
        "triple",
        {"n": t.n, "g1": t.gamma1, "g2": t.gamma2, "tau": t.tau_pairs},
        not failed,
        details={"failed_clauses": failed},
    )
    if failed:
        rep.witness = {"clauses": failed}
    rep.ms = (time.perf_counter() - t0) * 1000.0
    return rep


def require_valid(t: BDTriple):
    rep = validate_triple(t)
    if not rep.passed:
        clauses = rep.details["failed_clauses"]
        if clauses == ["OrderReversing"]:
            raise OrderReversingError(f"tau reverses a block of {t.gamma1}")
        raise InvalidTripleError(f"invalid triple: {', '.join(clauses)}")


@dataclass
class CartanData:
    """Exact rational data attached to a valid triple."""

    n: int
    tau_mat: list  # n x n, tau as a linear map on the Cartan algebra
    z_grid: list  # coefficients of Z in the H_i (x) H_j basis
    h1_basis: list
    h2_basis: list
    h1_perp_basis: list
    h2_perp_basis: list
    h0_basis: list


def _alpha(i: int, n: int):
    v = [_Q0] * n
    v[i - 1] = _Q1
    v[i] = -_Q1
    return v


def _echelon_rows(rows, n):
    work = [list(r) for r in rows]
    rref_rows(work, n)
    return [r for r in work if any(r)]


def _rational_inverse(grid):
    m = len(grid)
    aug = [list(r) + [_Q1 if i == j else _Q0 for j in range(m)] for i, r in enumerate(grid)]
    pivots = rref_rows(aug, 2 * m)
    if pivots[:m] != list(range(m)):
        raise NoSolutionError("Gram matrix is singular")
    return [r[m:] for r in aug]


def cartan_data(t: BDTriple) -> CartanData:
    require_valid(t)
    n = t.n
    tau = t.tau
    a1 = [_alpha(i, n) for i in t.gamma1]
    a1_tau = [_alpha(tau[i], n) for i in t.gamma1]
    a2 = [_alpha(i, n) for i in t.gamma2]
    if a1:
        gram = [[sum(x * y for x, y in zip(u, v)) for v in a1] for u in a1]
        ginv = _rational_inverse(gram)
        # tau_mat = B_tau Ginv B^T ; basis-independent, kills h1-perp
        tau_mat = [
            [
                sum(
                    a1_tau[i][k] * ginv[i][j] * a1[j][l]
                    for i in range(len(a1))
                    for j in range(len(a1))
                )
                for l in range(n)
            ]
            for k in range(n)
        ]
    else:
        tau_mat = [[_Q0] * n for _ in range(n)]
    # Z = (tau (x) 1) of the h1 Casimir; in H-grid coordinates this is tau_mat
    z_grid = [row[:] for row in tau_mat]
    h0_rows = [
        [x - y for x, y in zip(_alpha(i, n), _alpha(tau[i], n))] for i in t.gamma1
    ]
    return CartanData(
        n=n,
        tau_mat=tau_mat,
        z_grid=z_grid,
        h1_basis=_echelon_rows(a1, n),
        h2_basis=_echelon_rows(a2, n),
        h1_perp_basis=kernel_basis_grid(a1, n, _Q0, _Q1) if a1 else _std_basis(n),
        h2_perp_basis=kernel_basis_grid(a2, n, _Q0, _Q1) if a2 else _std_basis(n),
        h0_basis=kernel_basis_grid(h0_rows, n, _Q0, _Q1) if h0_rows else _std_basis(n),
    )


def _std_basis(n):
    return [[_Q1 if j == i else _Q0 for j in range(n)] for i in range(n)]


@dataclass
class ThetaSolution:
    """A Cartan correction Theta with its residual companion Y = Z - Theta."""

    theta: list
    y: list


def _grid(values, n):
    return [[as_rational(values[i][j]) for j in range(n)] for i in range(n)]


def theta_residuals(t: BDTriple, theta) -> list:
    """Exact residuals of the two moment conditions; empty means solved."""
    cd = cartan_data(t)
    n = t.n
    th = _grid(theta, n)
    z = cd.z_grid
    tau = t.tau
    bad = []
    for a in t.gamma1:
        ta = tau[a]
        for j in range(n):
            r = (th[a - 1][j] - th[a][j]) - (z[a - 1][j] - z[a][j])
            if r:
                bad.append(("row-moment", a, j + 1, r))
        for i in range(n):
            r = (th[i][ta - 1] - th[i][ta]) - (z[i][ta - 1] - z[i][ta])
            if r:
                bad.append(("col-moment", a, i + 1, r))
        for k in range(n):
            r = (th[ta - 1][k] - th[ta][k]) + (th[k][a - 1] - th[k][a])
            if r:
                bad.append(("mixed-moment", a, k + 1, r))
    return bad


def solve_theta(t: BDTriple) -> ThetaSolution:
    """Deterministic rational solution of the moment conditions.

    Unknowns theta_ij are ordered lexicographically and solved by one
    reduced-echelon pass with free variables pinned to zero; solvability
    is guaranteed for valid triples, so inconsistency raises
    NoSolutionError as an internal fault.
    """
    require_valid(t)
    cd = cartan_data(t)
    n = t.n
    z = cd.z_grid
    tau = t.tau
    rows = []
    rhs = []

    def unk(i, j):
        # 1-based grid position -> flat index
        return (i - 1) * n + (j - 1)

    for a in t.gamma1:
        ta = tau[a]
        for j in range(1, n + 1):
            row = [_Q0] * (n * n)
            row[unk(a, j)] += _Q1
            row[unk(a + 1, j)] -= _Q1
            rows.append(row)
            rhs.append(z[a - 1][j - 1] - z[a][j - 1])
        for i in range(1, n + 1):
            row = [_Q0] * (n * n)
            row[unk(i, ta)] += _Q1
            row[unk(i, ta + 1)] -= _Q1
            rows.append(row)
            rhs.append(z[i - 1][ta - 1] - z[i - 1][ta])
        for k in range(1, n + 1):
            row = [_Q0] * (n * n)
            row[unk(ta, k)] += _Q1
            row[unk(ta + 1, k)] -= _Q1
            row[unk(k, a)] += _Q1
            row[unk(k, a + 1)] -= _Q1
            rows.append(row)
            rhs.append(_Q0)
    if not rows:
        theta = [[_Q0] * n for _ in range(n)]
        return ThetaSolution(theta, [r[:] for r in z])
    x = solve_particular(rows, rhs, _Q0)
    if x is None:
        raise NoSolutionError("moment conditions are inconsistent for a valid triple")
    theta = [[x[unk(i, j)] for j in range(1, n + 1)] for i in range(1, n + 1)]
    assert not theta_residuals(t, theta)
    y = [[z[i][j] - theta[i][j] for j in range(n)] for i in range(n)]
    return ThetaSolution(theta, y)


# ---------------------------------------------------------------------------
# Twist assembly
# ---------------------------------------------------------------------------

@dataclass
class Twist:
    """Assembled twist data in the vector representation."""

    triple: BDTriple
    cartan: CartanData
    theta: list
    beta: list
    y_grid: list
    a_grid: list  # Cartan exponent of J0, equal to Y + beta
    field: ScalarField
    jprime_vv: Matrix
    j_vv: Matrix
    rtilde_vv: Matrix  # e^{hZ} J', the mixed image of the sub-R-matrix
    r_j: RMatrix
    extras: dict = dc_field(default_factory=dict)

    @property
    def n(self):
        return self.triple.n


def _in_span(vec, basis_rows, n):
    if all(not x for x in vec):
        return True
    if not basis_rows:
        return False
    rows = [[basis_rows[b][k] for b in range(len(basis_rows))] for k in range(n)]
    return solve_particular(rows, list(vec), _Q0) is not None


def _check_beta(beta, cd: CartanData, n: int):
    for i in range(n):
        for j in range(n):
            if beta[i][j] + beta[j][i]:
                raise BetaNotInH0Error("beta must be antisymmetric")
    for i in range(n):
        if not _in_span(beta[i], cd.h0_basis, n):
            raise BetaNotInH0Error(f"row {i + 1} of beta leaves the h0 span")
        col = [beta[k][i] for k in range(n)]
        if not _in_span(col, cd.h0_basis, n):
            raise BetaNotInH0Error(f"column {i + 1} of beta leaves the h0 span")


def jprime_matrix(t: BDTriple, field: ScalarField) -> Matrix:
    """Unipotent part of the twist on V (x) V.

    One term per ordered pair i < j inside each block's vertex interval;
    the first leg carries the relabeled raising unit E_{tau(i), tau(j)},
    the second the lowering unit E_{j, i}.  Cross terms of the underlying
    exponential vanish on V (x) V because consecutive matrix units
    annihilate, so this closed form is exact.
    """
    n = t.n
    lam = field.q - field.q_inv
    m = Matrix.identity(n * n, field)
    tau = t.tau
    for start, end in t.blocks():
        verts = list(range(start, end + 2))
        shift = tau[start] - start
        for vi in verts:
            for vj in verts:
                if vi >= vj:
                    continue
                # E_{tau(vi), tau(vj)} (x) E_{vj, vi} with tau the vertex map
                a, b = vi + shift, vj + shift
                row = (a - 1) * n + (vj - 1)
                col = (b - 1) * n + (vi - 1)
                m.entries[row][col] = m.entries[row][col] + lam
    return m


def build_twist(t: BDTriple, theta=None, beta=None) -> Twist:
    """Assemble J and R_J on V (x) V from a triple, Theta, and beta.

    Theta defaults to the deterministic solver output and is otherwise
    taken as given (solutions form an affine family; callers may supply
    their own).  beta defaults to zero and must be antisymmetric with
    support in h0 (x) h0.
    """
    require_valid(t)
    cd = cartan_data(t)
    n = t.n
    if theta is None:
        theta = solve_theta(t).theta
    elif isinstance(theta, ThetaSolution):
        theta = theta.theta
    theta = _grid(theta, n)
    beta = _grid(beta, n) if beta is not None else [[_Q0] * n for _ in range(n)]
    _check_beta(beta, cd, n)
    z = cd.z_grid
    y = [[z[i][j] - theta[i][j] for j in range(n)] for i in range(n)]
    a_grid = [[y[i][j] + beta[i][j] for j in range(n)] for i in range(n)]
    # one root order for the whole session: every exponent grid must embed
    M = lcm_denominators(v for g in (z, theta, beta) for row in g for v in row)
    field = ScalarField(M)
    jp = jprime_matrix(t, field)
    j_vv = cartan_exp(y, field) * jp * cartan_exp(beta, field)
    rtilde = cartan_exp(z, field) * jp
    std = standard_r(n, field)
    p = flip_perm(n, field)
    rj_mat = p * gauss_invert(j_vv) * p * std.mat * j_vv
    return Twist(
        triple=t,
        cartan=cd,
        theta=theta,
        beta=beta,
        y_grid=y,
        a_grid=a_grid,
        field=field,
        jprime_vv=jp,
        j_vv=j_vv,
        rtilde_vv=rtilde,
        r_j=RMatrix(n, rj_mat, field),
    )


def untwisted(n: int) -> Twist:
    """The trivial twist (empty diagram data): J = Id, R_J the standard R."""
    return build_twist(BDTriple.make(n))


def cocycle_check(t: BDTriple, theta=None, beta=None) -> Report:
    """Both sides of the twist coproduct identity on V (x) V (x) V.

    Coproducts of the assembled element expand through the hexagon
    identities of the underlying R-matrix and the primitivity of the
    Cartan generators:

        (D (x) 1)(J) = e^{-h(Th13 + Th23)} Rt13 Rt23 e^{h(b13 + b23)}
        (1 (x) D)(J) = e^{-h(Th13 + Th12)} Rt13 Rt12 e^{h(b13 + b12)}

    with Rt = e^{hZ} J'.  The check is pass iff
    (D (x) 1)(J) J12 = (1 (x) D)(J) J23 exactly.
    """
    t0 = time.perf_counter()
    tw = build_twist(t, theta, beta) if not isinstance(t, Twist) else t
    n = tw.triple.n
    field = tw.field
    neg_theta = [[-v for v in row] for row in tw.theta]

    def ce(grid, legs):
        return leg_embed(cartan_exp(grid, field), legs, n, 3)

    rt13 = leg_embed(tw.rtilde_vv, (1, 3), n, 3)
    rt23 = leg_embed(tw.rtilde_vv, (2, 3), n, 3)
    rt12 = leg_embed(tw.rtilde_vv, (1, 2), n, 3)
    j12 = leg_embed(tw.j_vv, (1, 2), n, 3)
    j23 = leg_embed(tw.j_vv, (2, 3), n, 3)
    lhs = (
        ce(neg_theta, (1, 3))
        * ce(neg_theta, (2, 3))
        * rt13
        * rt23
        * ce(tw.beta, (1, 3))
        * ce(tw.beta, (2, 3))
        * j12
    )
    rhs = (
        ce(neg_theta, (1, 3))
        * ce(neg_theta, (1, 2))
        * rt13
        * rt12
        * ce(tw.beta, (1, 3))
        * ce(tw.beta, (1, 2))
        * j23
    )
    params = {
        "n": n,
        "g1": tw.triple.gamma1,
        "g2": tw.triple.gamma2,
        "tau": tw.triple.tau_pairs,
        "root_order": field.root_order,
    }
    return equality_report("cocycle", params, lhs, rhs, t0)


def p_vector(tw: Twist):
    """Cartan exponent of the grouplike normalization: column sums minus
    row sums of the twist's Cartan grid."""
    n = tw.n
    a = tw.a_grid
    return [
        sum(a[j][i] for j in range(n)) - sum(a[i][j] for j in range(n))
        for i in range(n)
    ]


def enumerate_triples(n: int):
    """All valid triples for gl_n, including the empty one."""
    from itertools import combinations, permutations

    roots = list(range(1, n))
    out = [BDTriple.make(n)]
    for size in range(1, len(roots) // 2 + 1):
        for g1 in combinations(roots, size):
            rest = [r for r in roots if r not in g1]
            for g2 in combinations(rest, size):
                for img in permutations(g2):
                    tau = dict(zip(g1, img))
                    t = BDTriple.make(n, g1, g2, tau)
                    if validate_triple(t).passed:
                        out.append(t)
    return out
