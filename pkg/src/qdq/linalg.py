"""Dense exact linear algebra over Q(s) and tensor-leg operator calculus.

Matrices are dense row-major grids of RatFunc sharing one ScalarField.
Tensor powers of the n-dimensional space V use the convention that the
leftmost factor is the most significant index digit:

    v_{i1} (x) ... (x) v_{ik}  ->  sum_j (i_j - 1) * n^(k-j)

with 1-based factor indices in interfaces and 0-based linear indices
internally.  This makes leg embeddings (superscript notation such as T13)
pure index bookkeeping.

Generic reduced-echelon helpers at the bottom work over any exact field
elements supporting +,-,*,/ and truthiness; they serve both RatFunc grids
and plain rational grids.
"""

from __future__ import annotations

from itertools import product

from .errors import SingularMatrixError
from .scalars import RatFunc, ScalarField


class Matrix:
    """Dense matrix over Q(s); immutable by convention."""

    __slots__ = ("rows", "cols", "entries", "field")

    def __init__(self, rows: int, cols: int, entries, field: ScalarField):
        if len(entries) != rows or any(len(r) != cols for r in entries):
            raise ValueError("entry grid does not match declared shape")
        self.rows = rows
        self.cols = cols
        self.entries = entries
        self.field = field

    # -- constructors --------------------------------------------------------

    @classmethod
    def zeros(cls, rows, cols, field):
        z = field.zero
        return cls(rows, cols, [[z] * cols for _ in range(rows)], field)

    @classmethod
    def identity(cls, n, field):
        z, o = field.zero, field.one
        return cls(n, n, [[o if i == j else z for j in range(n)] for i in range(n)], field)

    @classmethod
    def diag(cls, values, field):
        values = list(values)
        n = len(values)
        z = field.zero
        return cls(n, n, [[values[i] if i == j else z for j in range(n)] for i in range(n)], field)

    @classmethod
    def unit(cls, rows, cols, i, j, field, value=None):
        """Matrix unit E_ij (1-based) times an optional value."""
        m = cls.zeros(rows, cols, field)
        m.entries[i - 1][j - 1] = field.one if value is None else value
        return m

    def copy(self):
        return Matrix(self.rows, self.cols, [list(r) for r in self.entries], self.field)

    # -- ring operations ------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch in matrix addition")
        return Matrix(
            self.rows,
            self.cols,
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.entries, other.entries)
            ],
            self.field,
        )

    def __sub__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch in matrix subtraction")
        return Matrix(
            self.rows,
            self.cols,
            [
                [a - b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.entries, other.entries)
            ],
            self.field,
        )

    def __neg__(self):
        return Matrix(
            self.rows, self.cols, [[-a for a in r] for r in self.entries], self.field
        )

    def scale(self, c: RatFunc):
        return Matrix(
            self.rows, self.cols, [[c * a for a in r] for r in self.entries], self.field
        )

    def __mul__(self, other):
        if isinstance(other, RatFunc):
            return self.scale(other)
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError("shape mismatch in matrix product")
        zero = self.field.zero
        a, b = self.entries, other.entries
        out = [[zero] * other.cols for _ in range(self.rows)]
        for i in range(self.rows):
            ai = a[i]
            oi = out[i]
            for k in range(self.cols):
                aik = ai[k]
                if not aik:
                    continue
                bk = b[k]
                for j in range(other.cols):
                    bkj = bk[j]
                    if bkj:
                        oi[j] = oi[j] + aik * bkj
        return Matrix(self.rows, other.cols, out, self.field)

    def __rmul__(self, other):
        if isinstance(other, RatFunc):
            return self.scale(other)
        return NotImplemented

    # -- predicates ------------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def is_zero(self):
        return all(not e for r in self.entries for e in r)

    def is_identity(self):
        if self.rows != self.cols:
            return False
        for i in range(self.rows):
            for j in range(self.cols):
                e = self.entries[i][j]
                if i == j:
                    if not e.is_one():
                        return False
                elif e:
                    return False
        return True

    def transpose(self):
        return Matrix(
            self.cols,
            self.rows,
            [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)],
            self.field,
        )

    def inv(self):
        return gauss_invert(self)

    def evaluate(self, x):
        """Entrywise exact evaluation at a rational point."""
        return [[e.evaluate(x) for e in row] for row in self.entries]

    def __repr__(self):
        return f"Matrix({self.rows}x{self.cols}, M={self.field.root_order})"

    def __str__(self):
        return "\n".join("[" + ", ".join(str(e) for e in r) + "]" for r in self.entries)


def first_mismatch(a: Matrix, b: Matrix):
    """Row-major scan; returns (i, j, a_ij, b_ij) or None when equal."""
    if (a.rows, a.cols) != (b.rows, b.cols):
        return (0, 0, None, None)
    for i in range(a.rows):
        ra, rb = a.entries[i], b.entries[i]
        for j in range(a.cols):
            if ra[j] != rb[j]:
                return (i, j, ra[j], rb[j])
    return None


def mat_vec(m: Matrix, v):
    zero = m.field.zero
    out = [zero] * m.rows
    for i in range(m.rows):
        acc = zero
        row = m.entries[i]
        for j, x in enumerate(v):
            if x and row[j]:
                acc = acc + row[j] * x
        out[i] = acc
    return out


def kron(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker product; left factor is the most significant index."""
    if a.field.root_order != b.field.root_order:
        raise ValueError("kron operands carry different scalar fields")
    zero = a.field.zero
    R, C = a.rows * b.rows, a.cols * b.cols
    out = [[zero] * C for _ in range(R)]
    for i in range(a.rows):
        for j in range(a.cols):
            aij = a.entries[i][j]
            if not aij:
                continue
            for k in range(b.rows):
                bk = b.entries[k]
                orow = out[i * b.rows + k]
                base = j * b.cols
                for l in range(b.cols):
                    if bk[l]:
                        orow[base + l] = aij * bk[l]
    return Matrix(R, C, out, a.field)


class TensorIndexing:
    """Index conventions on V^(x)k with dim V = n."""

    __slots__ = ("n", "legs")

    def __init__(self, n: int, legs: int):
        self.n = n
        self.legs = legs

    @property
    def dim(self):
        return self.n**self.legs

    def to_linear(self, multi) -> int:
        """1-based factor indices -> 0-based linear index."""
        if len(multi) != self.legs:
            raise ValueError("wrong number of factor indices")
        idx = 0
        for i in multi:
            if not 1 <= i <= self.n:
                raise ValueError(f"factor index {i} out of range 1..{self.n}")
            idx = idx * self.n + (i - 1)
        return idx

    def from_linear(self, idx: int):
        digits = []
        for _ in range(self.legs):
            digits.append(idx % self.n + 1)
            idx //= self.n
        return tuple(reversed(digits))

    def all_multis(self):
        return product(range(1, self.n + 1), repeat=self.legs)


def flip_perm(n: int, field: ScalarField) -> Matrix:
    """The permutation operator v_i (x) v_j -> v_j (x) v_i on V (x) V."""
    d = n * n
    m = Matrix.zeros(d, d, field)
    one = field.one
    for i in range(n):
        for j in range(n):
            m.entries[j * n + i][i * n + j] = one
    return m


def leg_embed(op: Matrix, legs, n: int, k: int) -> Matrix:
    """Extend an operator on the named tensor legs by the identity elsewhere.

    legs are 1-based positions in V^(x)k, in the order matching op's own
    factors; duplicates and out-of-range positions are rejected.
    """
    legs = tuple(legs)
    if len(set(legs)) != len(legs):
        raise ValueError(f"duplicate legs in {legs}")
    if any(not 1 <= p <= k for p in legs):
        raise ValueError(f"legs {legs} out of range 1..{k}")
    L = len(legs)
    if op.rows != n**L or op.cols != n**L:
        raise ValueError("operator size does not match the named legs")
    if L == k and legs == tuple(range(1, k + 1)):
        return op
    weight = [n ** (k - p) for p in range(1, k + 1)]
    leg_w = [weight[p - 1] for p in legs]
    rest_w = [weight[p - 1] for p in range(1, k + 1) if p not in legs]
    dim = n**k
    out = Matrix.zeros(dim, dim, op.field)
    ent = out.entries
    ti = TensorIndexing(n, L)
    offsets = [
        sum(a * w for a, w in zip(assign, rest_w))
        for assign in product(range(n), repeat=k - L)
    ]
    for r in range(op.rows):
        row = op.entries[r]
        rmulti = ti.from_linear(r)
        rbase = sum((d - 1) * w for d, w in zip(rmulti, leg_w))
        for c in range(op.cols):
            e = row[c]
            if not e:
                continue
            cmulti = ti.from_linear(c)
            cbase = sum((d - 1) * w for d, w in zip(cmulti, leg_w))
            for off in offsets:
                ent[rbase + off][cbase + off] = e
    return out


def gauss_invert(a: Matrix) -> Matrix:
    """Exact inverse by Gauss-Jordan elimination.

    Pivot selection takes the first nonzero entry in the column: magnitude
    is undefined over Q(s) and this keeps the elimination deterministic.
    """
    if a.rows != a.cols:
        raise ValueError("only square matrices can be inverted")
    n = a.rows
    zero, one = a.field.zero, a.field.one
    work = [list(r) for r in a.entries]
    right = [[one if i == j else zero for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = None
        for r in range(col, n):
            if work[r][col]:
                piv = r
                break
        if piv is None:
            raise SingularMatrixError(f"rank deficiency found at column {col}")
        if piv != col:
            work[col], work[piv] = work[piv], work[col]
            right[col], right[piv] = right[piv], right[col]
        p = work[col][col]
        if not p.is_one():
            pinv = p.inv()
            work[col] = [x * pinv for x in work[col]]
            right[col] = [x * pinv for x in right[col]]
        wc, rc = work[col], right[col]
        for r in range(n):
            if r == col:
                continue
            f = work[r][col]
            if not f:
                continue
            wr, rr = work[r], right[r]
            for j in range(col, n):
                if wc[j]:
                    wr[j] = wr[j] - f * wc[j]
            for j in range(n):
                if rc[j]:
                    rr[j] = rr[j] - f * rc[j]
    return Matrix(n, n, right, a.field)


def kernel_basis(a: Matrix):
    """Deterministic exact basis of the right kernel.

    Reduced echelon form with first-nonzero pivoting; one basis vector per
    free column in ascending column order, each normalized so its first
    nonzero coordinate is 1.  Full rank gives the empty list.
    """
    vecs = kernel_basis_grid(
        [list(r) for r in a.entries], a.cols, a.field.zero, a.field.one
    )
    return vecs


class BlockMatrix:
    """Matrix whose entries are themselves square matrices of one size.

    Flattening to a plain matrix over Q(s) is a ring isomorphism; inversion
    goes through the flattened form.
    """

    __slots__ = ("block_rows", "block_cols", "inner", "blocks", "field")

    def __init__(self, blocks, field: ScalarField):
        self.block_rows = len(blocks)
        self.block_cols = len(blocks[0])
        inner = blocks[0][0].rows
        for row in blocks:
            if len(row) != self.block_cols:
                raise ValueError("ragged block grid")
            for b in row:
                if b.rows != inner or b.cols != inner:
                    raise ValueError("blocks must share one square inner dimension")
        self.inner = inner
        self.blocks = blocks
        self.field = field

    @classmethod
    def identity(cls, n, inner, field):
        blocks = [
            [
                Matrix.identity(inner, field) if i == j else Matrix.zeros(inner, inner, field)
                for j in range(n)
            ]
            for i in range(n)
        ]
        return cls(blocks, field)

    def flatten(self) -> Matrix:
        d = self.inner
        R, C = self.block_rows * d, self.block_cols * d
        zero = self.field.zero
        out = [[zero] * C for _ in range(R)]
        for I in range(self.block_rows):
            for J in range(self.block_cols):
                blk = self.blocks[I][J].entries
                for r in range(d):
                    orow = out[I * d + r]
                    brow = blk[r]
                    base = J * d
                    for c in range(d):
                        if brow[c]:
                            orow[base + c] = brow[c]
        return Matrix(R, C, out, self.field)

    @classmethod
    def from_flat(cls, m: Matrix, block_rows: int, block_cols: int):
        if m.rows % block_rows or m.cols % block_cols:
            raise ValueError("matrix shape is not divisible into the block grid")
        d = m.rows // block_rows
        if m.cols // block_cols != d:
            raise ValueError("blocks must be square")
        blocks = [
            [
                Matrix(
                    d,
                    d,
                    [row[J * d : (J + 1) * d] for row in m.entries[I * d : (I + 1) * d]],
                    m.field,
                )
                for J in range(block_cols)
            ]
            for I in range(block_rows)
        ]
        return cls(blocks, m.field)

    def __mul__(self, other):
        if not isinstance(other, BlockMatrix):
            return NotImplemented
        if self.block_cols != other.block_rows or self.inner != other.inner:
            raise ValueError("block shape mismatch")
        out = []
        for i in range(self.block_rows):
            row = []
            for j in range(other.block_cols):
                acc = Matrix.zeros(self.inner, self.inner, self.field)
                for k in range(self.block_cols):
                    a = self.blocks[i][k]
                    b = other.blocks[k][j]
                    if not a.is_zero() and not b.is_zero():
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return BlockMatrix(out, self.field)

    def __add__(self, other):
        if not isinstance(other, BlockMatrix):
            return NotImplemented
        return BlockMatrix(
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.blocks, other.blocks)
            ],
            self.field,
        )

    def __sub__(self, other):
        if not isinstance(other, BlockMatrix):
            return NotImplemented
        return BlockMatrix(
            [
                [a - b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.blocks, other.blocks)
            ],
            self.field,
        )

    def __eq__(self, other):
        if not isinstance(other, BlockMatrix):
            return NotImplemented
        return (
            self.block_rows == other.block_rows
            and self.block_cols == other.block_cols
            and self.blocks == other.blocks
        )

    def inv(self) -> BlockMatrix:
        """Block-structured inverse through the flattening isomorphism."""
        return BlockMatrix.from_flat(
            gauss_invert(self.flatten()), self.block_rows, self.block_cols
        )

    def __repr__(self):
        return (
            f"BlockMatrix({self.block_rows}x{self.block_cols} of "
            f"{self.inner}x{self.inner})"
        )


block_invert = BlockMatrix.inv


# ---------------------------------------------------------------------------
# Generic reduced-echelon machinery (any exact field entries)
# ---------------------------------------------------------------------------

def rref_rows(rows, ncols):
    """In-place reduced row echelon form; returns the pivot column list."""
    pivots = []
    r = 0
    nrows = len(rows)
    for col in range(ncols):
        piv = None
        for i in range(r, nrows):
            if rows[i][col]:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        lead = prow[col]
        if lead != lead / lead:
            rows[r] = prow = [x / lead for x in prow]
        for i in range(nrows):
            if i == r:
                continue
            f = rows[i][col]
            if not f:
                continue
            ri = rows[i]
            for j in range(col, ncols):
                if prow[j]:
                    ri[j] = ri[j] - f * prow[j]
        pivots.append(col)
        r += 1
        if r == nrows:
            break
    return pivots


def kernel_basis_grid(rows, ncols, zero, one):
    """Kernel basis of a raw grid; see kernel_basis for the conventions."""
    work = [list(r) for r in rows]
    pivots = rref_rows(work, ncols)
    pivset = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = [zero] * ncols
        v[f] = one
        for r, pc in enumerate(pivots):
            if work[r][f]:
                v[pc] = -work[r][f]
        lead = None
        for c in v:
            if c:
                lead = c
                break
        if lead != one:
            v = [c / lead if c else c for c in v]
        basis.append(v)
    return basis


def solve_particular(rows, rhs, zero):
    """One exact solution of A x = b with free variables set to zero.

    Returns None when the system is inconsistent.
    """
    ncols = len(rows[0]) if rows else 0
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    pivots = rref_rows(aug, ncols + 1)
    if ncols in pivots:
        return None
    x = [zero] * ncols
    for r, pc in enumerate(pivots):
        x[pc] = aug[r][ncols]
    return x
