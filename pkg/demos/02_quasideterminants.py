"""Quasideterminants on commutative and genuinely noncommutative matrices.

A quasideterminant |X|_ij is attached to a position, not just to the
matrix: for commutative entries it recovers the signed ratio of the
determinant to the complementary minor, and an ordered product of nested
corner quasiminors recovers the determinant itself, independently of the
ordering whenever the factors commute.
"""

import random
from fractions import Fraction

from qdq import (
    Matrix,
    NCSquare,
    ScalarField,
    all_sigmas,
    corner_factors,
    det_sigma,
    inverse_via_quasiminors,
    quasideterminant,
)

F = ScalarField(1)


def square(grid):
    return NCSquare([[F.from_rational(Fraction(v)) for v in row] for row in grid], F)


x = square([[1, 2], [3, 4]])
print("X = [[1,2],[3,4]]")
print("|X|_11 =", quasideterminant(x, 1, 1), "   (det X / det X^{11} = -2/4)")
print("|X|_22 =", quasideterminant(x, 2, 2))

print("\nordered corner products for every permutation:")
for sigma in all_sigmas(2):
    print(f"  sigma = {sigma}: det_sigma =", det_sigma(x, sigma))

print("\nquasiminor inverse of X:")
inv = inverse_via_quasiminors(x)
for row in inv.entries:
    print("  ", [str(e) for e in row])

# Operator entries: 2x2 blocks that do not commute.
rng = random.Random(3)
blocks = [
    [
        Matrix(
            2,
            2,
            [[F.from_rational(rng.randint(-2, 2)) for _ in range(2)] for _ in range(2)],
            F,
        )
        for _ in range(2)
    ]
    for _ in range(2)
]
for d in range(2):
    blocks[d][d] = blocks[d][d] + Matrix.identity(2, F).scale(F.from_rational(5))
xb = NCSquare(blocks, F)
print("\noperator entries: factors of the corner product")
for i, f in enumerate(corner_factors(xb), 1):
    print(f"  factor {i} =")
    for row in f.entries:
        print("    ", [str(e) for e in row])
print("here the factors need not commute, and det_sigma depends on sigma:")
for sigma in all_sigmas(2):
    val = det_sigma(xb, sigma)
    print(f"  sigma = {sigma}: entry (1,1) of the product =", val.entries[0][0])
