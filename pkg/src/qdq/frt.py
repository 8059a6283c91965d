"""Concrete FRT models and the determinant factorization verifier.

The generating matrix T is realized with operator entries

    T_ij = sum_k (L+)_ik (x) (L-)_kj  in  End(W1 (x) W2),

W1 = V^(x)k1, W2 = V^(x)k2, with L+/- built from the twisted braiding.
Equivalently, flatten(T) is the product of L+ and L- embedded along the
matrix leg; both routes are computed and compared in the tests.

The verifier checks, all by exact matrix identities:

  * the defining exchange relation R12 T13 T23 = T23 T13 R12,
  * the quantum determinant extracted through the coaction on the top
    wedge vector is one single operator D (proportionality across rows),
  * D equals the closed-form grouplike image built from the twist's
    Cartan exponents,
  * D equals every sigma-ordered product of corner quasiminors of T,
    whose factors commute pairwise.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, replace

from .errors import CoactionNotProportionalError
from .linalg import BlockMatrix, Matrix, first_mismatch, kron, leg_embed
from .quasidet import NCSquare, all_sigmas, check_sigma, corner_factors, det_sigma
from .report import Report, aggregate_report, equality_report
from .rmatrix import (
    hecke_check,
    l_minus,
    l_plus,
    r_hat,
    wedge_coefficients,
    wedge_top,
    weight_exp,
    ybe_check,
)
from .twist import Twist, cocycle_check, p_vector


@dataclass
class FRTModel:
    """A twisted quantum-matrix model on W1 (x) W2."""

    twist: Twist
    k1: int
    k2: int
    t_blocks: BlockMatrix

    @property
    def n(self):
        return self.twist.n

    @property
    def field(self):
        return self.twist.field

    def entry(self, i: int, j: int) -> Matrix:
        """T_ij as an operator on W1 (x) W2 (1-based)."""
        return self.t_blocks.blocks[i - 1][j - 1]


def build_T(tw: Twist, k1: int = 1, k2: int = 1) -> FRTModel:
    if k1 < 1 or k2 < 1:
        raise ValueError("tensor powers k1, k2 must be at least 1")
    lp = l_plus(tw.r_j, k1)
    lm = l_minus(tw.r_j, k2)
    n = tw.n
    blocks = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = None
            for k in range(n):
                a, b = lp.blocks[i][k], lm.blocks[k][j]
                if a.is_zero() or b.is_zero():
                    continue
                term = kron(a, b)
                acc = term if acc is None else acc + term
            if acc is None:
                d = n ** (k1 + k2)
                acc = Matrix.zeros(d, d, tw.field)
            row.append(acc)
        blocks.append(row)
    return FRTModel(tw, k1, k2, BlockMatrix(blocks, tw.field))


def flat_T_via_leg_product(tw: Twist, k1: int, k2: int) -> Matrix:
    """Independent route: L+ and L- embedded along the shared matrix leg."""
    n = tw.n
    ktot = 1 + k1 + k2
    lp_flat = l_plus(tw.r_j, k1).flatten()
    lm_flat = l_minus(tw.r_j, k2).flatten()
    lp_full = leg_embed(lp_flat, (1,) + tuple(range(2, k1 + 2)), n, ktot)
    lm_full = leg_embed(lm_flat, (1,) + tuple(range(k1 + 2, ktot + 1)), n, ktot)
    return lp_full * lm_full


def frt_check(m: FRTModel) -> Report:
    """R12 T13 T23 = T23 T13 R12 on V (x) V (x) W1 (x) W2, exactly."""
    t0 = time.perf_counter()
    n = m.n
    ktot = 2 + m.k1 + m.k2
    w_legs = tuple(range(3, ktot + 1))
    r12 = leg_embed(m.twist.r_j.mat, (1, 2), n, ktot)
    tflat = m.t_blocks.flatten()
    t13 = leg_embed(tflat, (1,) + w_legs, n, ktot)
    t23 = leg_embed(tflat, (2,) + w_legs, n, ktot)
    lhs = r12 * t13 * t23
    rhs = t23 * t13 * r12
    return equality_report(
        "frt", {"n": n, "k1": m.k1, "k2": m.k2}, lhs, rhs, t0
    )


def qdet_coaction(m: FRTModel) -> Matrix:
    """The quantum determinant image through the wedge coaction.

    With w = sum_K c_K v_K the top wedge vector of the twisted braiding,
    every multi-index I with c_I != 0 yields

        D_I = c_I^{-1} sum_K c_K T_{i1 k1} T_{i2 k2} ... T_{in kn}

    (products left to right in tensor-position order).  All D_I must
    coincide; the common value is returned.
    """
    n = m.n
    w = wedge_top(r_hat(m.twist.r_j), n)
    coeffs = wedge_coefficients(w, n)
    terms = sorted(coeffs.items())
    common = None
    for I, cI in terms:
        acc = None
        for K, cK in terms:
            prod = m.entry(I[0], K[0])
            for pos in range(1, n):
                prod = prod * m.entry(I[pos], K[pos])
            prod = prod.scale(cK)
            acc = prod if acc is None else acc + prod
        dI = acc.scale(cI.inv())
        if common is None:
            common = dI
        elif common != dI:
            loc = first_mismatch(common, dI)
            raise CoactionNotProportionalError(
                f"coaction rows disagree at multi-index {I}, entry {loc[:2]}"
            )
    return common


def f_of_D_image(tw: Twist, k1: int = 1, k2: int = 1) -> Matrix:
    """Closed form of the determinant's grouplike image on W1 (x) W2.

    The twist's Cartan grid determines a weight p (column sums minus row
    sums); the image is weight_exp(p + 1) (x) weight_exp(p - 1)."""
    p = p_vector(tw)
    plus = [x + 1 for x in p]
    minus = [x - 1 for x in p]
    return kron(
        weight_exp(plus, k1, tw.field), weight_exp(minus, k2, tw.field)
    )


def ncsquare_of(m: FRTModel) -> NCSquare:
    return NCSquare.from_block_matrix(m.t_blocks)


def detsigma_factors(m: FRTModel):
    """Corner quasiminor factors of T, shared across all orderings."""
    return corner_factors(ncsquare_of(m))


def detsigma_T(m: FRTModel, sigma, factors=None):
    """det_sigma of T in the operator entry ring; returns (value, factors)."""
    x = ncsquare_of(m)
    sigma = check_sigma(sigma, m.n)
    if factors is None:
        factors = corner_factors(x)
    return det_sigma(x, sigma, factors=factors), factors


def factors_commute(m: FRTModel, factors=None) -> Report:
    """Pairwise commutators of the quasiminor factors vanish exactly."""
    t0 = time.perf_counter()
    if factors is None:
        factors = detsigma_factors(m)
    for a in range(len(factors)):
        for b in range(a + 1, len(factors)):
            lhs = factors[a] * factors[b]
            rhs = factors[b] * factors[a]
            loc = first_mismatch(lhs, rhs)
            if loc is not None:
                rep = Report(
                    "factors-commute",
                    {"n": m.n, "k1": m.k1, "k2": m.k2},
                    False,
                    witness={
                        "coords": [a + 1, b + 1, loc[0], loc[1]],
                        "lhs": loc[2],
                        "rhs": loc[3],
                    },
                )
                rep.ms = (time.perf_counter() - t0) * 1000.0
                return rep
    rep = Report("factors-commute", {"n": m.n, "k1": m.k1, "k2": m.k2}, True)
    rep.ms = (time.perf_counter() - t0) * 1000.0
    return rep


def verify_factorization(
    tw: Twist, k1: int = 1, k2: int = 1, sigmas=None
) -> Report:
    """Full exact battery for one twist and one (k1, k2) probe.

    Aggregates: Yang-Baxter and Hecke checks for the twisted braiding, the
    twist cocycle, the exchange relations for T, commutativity of the
    quasiminor factors, agreement of det_sigma across the requested
    orderings, and equality of the common value with both determinant
    images.
    """
    t0 = time.perf_counter()
    n = tw.n
    if sigmas is None:
        sigmas = all_sigmas(n)
    sigmas = [check_sigma(s, n) for s in sigmas]
    params = {
        "n": n,
        "g1": tw.triple.gamma1,
        "g2": tw.triple.gamma2,
        "tau": tw.triple.tau_pairs,
        "k1": k1,
        "k2": k2,
        "sigmas": len(sigmas),
        "beta": any(v for row in tw.beta for v in row),
        "root_order": tw.field.root_order,
    }
    subreports = [
        ybe_check(tw.r_j),
        hecke_check(r_hat(tw.r_j), tw.field),
        cocycle_check(tw),
    ]
    model = build_T(tw, k1, k2)
    subreports.append(frt_check(model))
    factors = detsigma_factors(model)
    subreports.append(factors_commute(model, factors))

    ref, _ = detsigma_T(model, sigmas[0], factors)
    sigma_rep = Report("det-sigma-consistency", {"sigmas": len(sigmas)}, True)
    ts = time.perf_counter()
    for sigma in sigmas[1:]:
        val, _ = detsigma_T(model, sigma, factors)
        loc = first_mismatch(ref, val)
        if loc is not None:
            sigma_rep.passed = False
            sigma_rep.witness = {
                "sigma": list(sigma),
                "coords": [loc[0], loc[1]],
                "lhs": loc[2],
                "rhs": loc[3],
            }
            break
    sigma_rep.ms = (time.perf_counter() - ts) * 1000.0
    subreports.append(sigma_rep)

    coact = qdet_coaction(model)
    subreports.append(
        equality_report("qdet-equals-detsigma", {}, coact, ref, time.perf_counter())
    )
    image = f_of_D_image(tw, k1, k2)
    subreports.append(
        equality_report("qdet-equals-grouplike-image", {}, coact, image, time.perf_counter())
    )
    return aggregate_report("main", params, subreports, t0)


def perturbed(m: FRTModel, i: int = 1, j: int = 1, delta=None) -> FRTModel:
    """Copy of the model with one entry of one block shifted (negative control)."""
    f = m.field
    blocks = [[b.copy() for b in row] for row in m.t_blocks.blocks]
    d = delta if delta is not None else f.one
    blocks[i - 1][j - 1].entries[0][0] = blocks[i - 1][j - 1].entries[0][0] + d
    return replace(m, t_blocks=BlockMatrix(blocks, f))
