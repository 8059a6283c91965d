"""Quasideterminants and ordered quasiminor products.

The quasideterminant of a square matrix X over a (possibly noncommutative)
ring, attached to a position (i, j), is

    |X|_ij = x_ij - r (X^ij)^{-1} c

where X^ij removes row i and column j, r is row i without its j-th entry
and c is column j without its i-th entry; products are taken in the entry
ring in the written order.  An ordered product of nested corner
quasiminors recovers the determinant in the commutative case:

    det_sigma(X) = a_{sigma(1)} ... a_{sigma(n)},
    a_t = |X restricted to rows/cols 1..(n-t+1)| punctured at its corner.

Entries are either scalars (RatFunc) or operators (Matrix); submatrix
inversion goes through the flattening isomorphism for operator entries.
"""

from __future__ import annotations

from itertools import permutations

from .errors import SingularMatrixError, SubmatrixSingularError
from .linalg import BlockMatrix, Matrix, gauss_invert
from .scalars import ScalarField

SCALAR = "scalar"
OPERATOR = "operator"


class NCSquare:
    """Square matrix over the scalar or operator entry ring; 1-based labels."""

    __slots__ = ("m", "entries", "kind", "field", "inner")

    def __init__(self, entries, field: ScalarField):
        m = len(entries)
        if any(len(r) != m for r in entries):
            raise ValueError("NCSquare requires a square grid")
        self.m = m
        self.entries = entries
        self.field = field
        if isinstance(entries[0][0], Matrix):
            self.kind = OPERATOR
            self.inner = entries[0][0].rows
            for row in entries:
                for e in row:
                    if e.rows != self.inner or e.cols != self.inner:
                        raise ValueError("operator entries must share one square size")
        else:
            self.kind = SCALAR
            self.inner = 1

    @classmethod
    def from_block_matrix(cls, bm: BlockMatrix) -> NCSquare:
        if bm.block_rows != bm.block_cols:
            raise ValueError("block matrix is not square in blocks")
        return cls([list(r) for r in bm.blocks], bm.field)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i - 1][j - 1]

    def __eq__(self, other):
        if not isinstance(other, NCSquare):
            return NotImplemented
        return self.m == other.m and self.entries == other.entries

    # -- derived views ---------------------------------------------------------

    def minor(self, i: int, j: int) -> NCSquare:
        """Remove row i and column j (1-based)."""
        return NCSquare(
            [
                [e for c, e in enumerate(row, 1) if c != j]
                for r, row in enumerate(self.entries, 1)
                if r != i
            ],
            self.field,
        )

    def corner(self, l: int) -> NCSquare:
        """Keep rows and columns 1..l (erase l+1..m)."""
        return NCSquare([row[:l] for row in self.entries[:l]], self.field)

    # -- ring helpers ------------------------------------------------------------

    def ring_one(self):
        if self.kind == OPERATOR:
            return Matrix.identity(self.inner, self.field)
        return self.field.one

    def entry_is_zero(self, e):
        return e.is_zero() if self.kind == OPERATOR else not e

    def invert_entry(self, e):
        if self.kind == OPERATOR:
            return gauss_invert(e)
        return e.inv()

    def ring_inverse(self) -> NCSquare:
        """Inverse in the matrix ring over the entry ring (via flattening)."""
        if self.kind == OPERATOR:
            return NCSquare.from_block_matrix(BlockMatrix(self.entries, self.field).inv())
        flat = Matrix(self.m, self.m, self.entries, self.field)
        inv = gauss_invert(flat)
        return NCSquare(inv.entries, self.field)

    def matmul(self, other: NCSquare) -> NCSquare:
        if self.m != other.m or self.kind != other.kind:
            raise ValueError("NCSquare product shape/kind mismatch")
        out = []
        for i in range(self.m):
            row = []
            for j in range(self.m):
                acc = None
                for k in range(self.m):
                    a, b = self.entries[i][k], other.entries[k][j]
                    if self.entry_is_zero(a) or other.entry_is_zero(b):
                        continue
                    t = a * b
                    acc = t if acc is None else acc + t
                if acc is None:
                    acc = (
                        Matrix.zeros(self.inner, self.inner, self.field)
                        if self.kind == OPERATOR
                        else self.field.zero
                    )
                row.append(acc)
            out.append(row)
        return NCSquare(out, self.field)

    def is_unitriangular(self, lower: bool) -> bool:
        one = self.ring_one()
        for i in range(self.m):
            for j in range(self.m):
                e = self.entries[i][j]
                if i == j:
                    if e != one:
                        return False
                elif (j > i) if lower else (j < i):
                    if not self.entry_is_zero(e):
                        return False
        return True


def check_sigma(sigma, m: int):
    sigma = tuple(sigma)
    if sorted(sigma) != list(range(1, m + 1)):
        raise ValueError(f"{sigma} is not a permutation of 1..{m}")
    return sigma


def all_sigmas(m: int):
    return [tuple(p) for p in permutations(range(1, m + 1))]


def quasideterminant(x: NCSquare, i: int, j: int):
    """|X|_ij; raises SubmatrixSingularError when X^ij is not invertible."""
    if not (1 <= i <= x.m and 1 <= j <= x.m):
        raise ValueError(f"puncture ({i},{j}) outside 1..{x.m}")
    if x.m == 1:
        return x[(1, 1)]
    try:
        inv = x.minor(i, j).ring_inverse()
    except SingularMatrixError as exc:
        raise SubmatrixSingularError(i, j) from exc
    row = [x.entries[i - 1][c] for c in range(x.m) if c != j - 1]
    col = [x.entries[r][j - 1] for r in range(x.m) if r != i - 1]
    corr = None
    for a, ra in enumerate(row):
        if x.entry_is_zero(ra):
            continue
        for b, cb in enumerate(col):
            if x.entry_is_zero(cb):
                continue
            mid = inv.entries[a][b]
            if x.entry_is_zero(mid):
                continue
            t = ra * mid * cb
            corr = t if corr is None else corr + t
    entry = x[(i, j)]
    return entry if corr is None else entry - corr


def corner_factors(x: NCSquare):
    """Nested corner quasiminors (|X|_mm, ..., x_11); order matches det_sigma."""
    factors = []
    for l in range(x.m, 0, -1):
        factors.append(quasideterminant(x.corner(l), l, l))
    return factors


def det_sigma(x: NCSquare, sigma, factors=None):
    """Ordered quasiminor product a_{sigma(1)} ... a_{sigma(m)}."""
    sigma = check_sigma(sigma, x.m)
    if factors is None:
        factors = corner_factors(x)
    out = factors[sigma[0] - 1]
    for t in sigma[1:]:
        out = out * factors[t - 1]
    return out


def inverse_via_quasiminors(x: NCSquare) -> NCSquare:
    """Entrywise inverse formula: (X^{-1})_ij = (|X|_ji)^{-1}.

    Independent of Gaussian elimination; used as a cross-check of the
    flattening-based inverses.  A singular punctured submatrix marks an
    entry whose quasiminor blows up (commutatively: a vanishing cofactor);
    such entries are taken as 0 and the multiply-back identity at the end
    justifies the convention instance by instance.
    """
    zero = (
        Matrix.zeros(x.inner, x.inner, x.field)
        if x.kind == OPERATOR
        else x.field.zero
    )
    undefined = []
    out = []
    for i in range(1, x.m + 1):
        row = []
        for j in range(1, x.m + 1):
            try:
                row.append(x.invert_entry(quasideterminant(x, j, i)))
            except SubmatrixSingularError:
                row.append(zero)
                undefined.append((j, i))
        out.append(row)
    inv = NCSquare(out, x.field)
    one = x.ring_one()
    for prod in (x.matmul(inv), inv.matmul(x)):
        for r in range(x.m):
            for c in range(x.m):
                e = prod.entries[r][c]
                ok = e == one if r == c else x.entry_is_zero(e)
                if not ok:
                    if undefined:
                        raise SubmatrixSingularError(*undefined[0])
                    raise SingularMatrixError(
                        "quasiminor inverse failed the multiply-back identity"
                    )
    return inv


def scalar_to_operator(x: NCSquare, inner: int) -> NCSquare:
    """Lift scalar entries to inner x inner scalar multiples of the identity."""
    if x.kind == OPERATOR:
        return x
    ident = Matrix.identity(inner, x.field)
    return NCSquare(
        [[ident.scale(e) for e in row] for row in x.entries], x.field
    )


def triangular_invariance_check(x: NCSquare, z: NCSquare, y: NCSquare, sigma) -> bool:
    """det_sigma(Z X Y) == det_sigma(X) for unitriangular Z (lower), Y (upper)."""
    if x.kind == OPERATOR:
        z = scalar_to_operator(z, x.inner)
        y = scalar_to_operator(y, x.inner)
    if not z.is_unitriangular(lower=True):
        raise ValueError("Z must be lower triangular with ones on the diagonal")
    if not y.is_unitriangular(lower=False):
        raise ValueError("Y must be upper triangular with ones on the diagonal")
    zxy = z.matmul(x).matmul(y)
    return det_sigma(zxy, sigma) == det_sigma(x, sigma)
