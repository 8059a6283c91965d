"""Tour of the exact arithmetic layer.

Everything in this package is computed over Q(s), the field of rational
functions in one indeterminate s, with the quantum parameter q = s^M.
No floating point, no series truncation: equality of canonical forms is
the only comparison ever made.
"""

from fractions import Fraction

from qdq import (
    Matrix,
    ScalarField,
    SingularMatrixError,
    gauss_invert,
    kernel_basis,
    kron,
    q_power,
)

# A field with root order 1: q is just s.
F = ScalarField(1)
q = F.q

print("q - 1/q                =", q - q.inv())
print("(q - 1/q)(q + 1/q)     =", (q - q.inv()) * (q + q.inv()))
print("inverse of (q - 1/q)   =", (q - q.inv()).inv())

# Root order 2 makes half-integer powers of q representable: q^(1/2) = s.
F2 = ScalarField(2)
print("\nat root order 2, q^(1/2) =", q_power(Fraction(1, 2), F2))
print("q^(3/2) * q^(-1/2)        =", q_power(Fraction(3, 2), F2) * q_power(Fraction(-1, 2), F2))

# Matrices are dense grids over Q(s); inversion and kernels are exact.
# This one has determinant 1 - q/q = 0, detected exactly, never "almost".
m = Matrix(2, 2, [[F.one, q], [q.inv(), F.one]], F)
print("\nm =")
print(m)
try:
    gauss_invert(m)
    print("m is invertible")
except SingularMatrixError as exc:
    print("inversion fails exactly:", exc)

# rank 1: the kernel is 1-dimensional, normalized deterministically
print("kernel basis:", [[str(c) for c in v] for v in kernel_basis(m)])

# Kronecker products follow the leftmost-most-significant convention.
a = Matrix.diag([q, F.one], F)
b = Matrix.diag([F.one, q], F)
print("\nkron(diag(q,1), diag(1,q)) diagonal:")
kk = kron(a, b)
print([str(kk.entries[i][i]) for i in range(4)])
