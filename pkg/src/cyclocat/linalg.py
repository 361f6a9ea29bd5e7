"""Dense exact matrices over a cyclotomic field, with Gauss-Jordan elimination."""

from cyclocat.arith import CyclotomicScalar


class Matrix:
    """Immutable dense matrix; ``rows`` is a tuple of tuples of scalars."""

    __slots__ = ("field", "nrows", "ncols", "rows")

    def __init__(self, field, rows, ncols=None):
        rows = tuple(tuple(field.coerce(x) if not isinstance(x, CyclotomicScalar) else x for x in r) for r in rows)
        if ncols is None:
            if not rows:
                raise ValueError("ncols is required for a matrix without rows")
            ncols = len(rows[0])
        for r in rows:
            if len(r) != ncols:
                raise ValueError("ragged matrix rows")
        self.field = field
        self.nrows = len(rows)
        self.ncols = ncols
        self.rows = rows

    @classmethod
    def _raw(cls, field, rows, ncols):
        self = object.__new__(cls)
        self.field = field
        self.nrows = len(rows)
        self.ncols = ncols
        self.rows = rows
        return self

    @classmethod
    def zeros(cls, field, nrows, ncols):
        z = field.zero
        return cls._raw(field, tuple((z,) * ncols for _ in range(nrows)), ncols)

    @classmethod
    def identity(cls, field, n):
        z, o = field.zero, field.one
        return cls._raw(field, tuple(tuple(o if i == j else z for j in range(n)) for i in range(n)), n)

    @classmethod
    def scalar(cls, field, n, c):
        z = field.zero
        c = field.coerce(c)
        return cls._raw(field, tuple(tuple(c if i == j else z for j in range(n)) for i in range(n)), n)

    @classmethod
    def from_columns(cls, field, columns, nrows):
        cols = [tuple(c) for c in columns]
        rows = tuple(tuple(col[i] for col in cols) for i in range(nrows))
        return cls._raw(field, rows, len(cols))

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def column(self, j):
        return tuple(r[j] for r in self.rows)

    def columns(self):
        return [self.column(j) for j in range(self.ncols)]

    def is_zero(self):
        return all(x.is_zero() for r in self.rows for x in r)

    def is_rational(self):
        return all(x.is_rational() for r in self.rows for x in r)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    def __hash__(self):
        return hash((self.shape, self.rows))

    def __repr__(self):
        body = "; ".join(", ".join(str(x) for x in r) for r in self.rows)
        return f"Matrix({self.nrows}x{self.ncols}: [{body}])"

    def __add__(self, other):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} + {other.shape}")
        return Matrix._raw(
            self.field,
            tuple(tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(self.rows, other.rows)),
            self.ncols,
        )

    def __sub__(self, other):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} - {other.shape}")
        return Matrix._raw(
            self.field,
            tuple(tuple(a - b for a, b in zip(ra, rb)) for ra, rb in zip(self.rows, other.rows)),
            self.ncols,
        )

    def __neg__(self):
        return Matrix._raw(self.field, tuple(tuple(-a for a in r) for r in self.rows), self.ncols)

    def scale(self, c):
        c = self.field.coerce(c)
        if c.is_one():
            return self
        return Matrix._raw(self.field, tuple(tuple(c * a for a in r) for r in self.rows), self.ncols)

    def __matmul__(self, other):
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        z = self.field.zero
        out = []
        ocols = other.ncols
        orows = other.rows
        for r in self.rows:
            acc = [z] * ocols
            for k, a in enumerate(r):
                if a.is_zero():
                    continue
                brow = orows[k]
                if a.is_one():
                    for j in range(ocols):
                        b = brow[j]
                        if not b.is_zero():
                            acc[j] = acc[j] + b
                else:
                    for j in range(ocols):
                        b = brow[j]
                        if not b.is_zero():
                            acc[j] = acc[j] + a * b
            out.append(tuple(acc))
        return Matrix._raw(self.field, tuple(out), ocols)

    def apply(self, vec):
        """Matrix times column vector (a tuple of scalars)."""
        z = self.field.zero
        out = []
        for r in self.rows:
            acc = z
            for a, b in zip(r, vec):
                if not a.is_zero() and not b.is_zero():
                    acc = acc + a * b
            out.append(acc)
        return tuple(out)

    @property
    def T(self):
        if self.nrows == 0:
            return Matrix.zeros(self.field, self.ncols, 0)
        return Matrix._raw(self.field, tuple(zip(*self.rows)), self.nrows)

    def submatrix(self, row_idx, col_idx):
        return Matrix._raw(self.field, tuple(tuple(self.rows[i][j] for j in col_idx) for i in row_idx), len(col_idx))


def hstack(field, mats, nrows):
    rows = [()] * nrows
    ncols = 0
    for m in mats:
        if m.nrows != nrows:
            raise ValueError("hstack row mismatch")
        rows = [a + b for a, b in zip(rows, m.rows)]
        ncols += m.ncols
    return Matrix._raw(field, tuple(rows), ncols)


def vstack(field, mats, ncols):
    rows = []
    for m in mats:
        if m.ncols != ncols:
            raise ValueError("vstack column mismatch")
        rows.extend(m.rows)
    return Matrix._raw(field, tuple(rows), ncols)


def block_diag(field, mats):
    nr = sum(m.nrows for m in mats)
    nc = sum(m.ncols for m in mats)
    z = field.zero
    rows = []
    off = 0
    for m in mats:
        for r in m.rows:
            rows.append((z,) * off + r + (z,) * (nc - off - m.ncols))
        off += m.ncols
    return Matrix._raw(field, tuple(rows), nc) if nr else Matrix.zeros(field, 0, nc)


def kron(a, b):
    """Kronecker product; row index i*b.nrows + k, column j*b.ncols + l."""
    field = a.field
    z = field.zero
    rows = []
    for ra in a.rows:
        for rb in b.rows:
            row = []
            for x in ra:
                if x.is_zero():
                    row.extend((z,) * b.ncols)
                elif x.is_one():
                    row.extend(rb)
                else:
                    row.extend(x * y for y in rb)
            rows.append(tuple(row))
    return Matrix._raw(field, tuple(rows), a.ncols * b.ncols)


def _pivot_cost(x):
    if x.is_one():
        return 0
    if x.is_rational():
        return 1
    return 2


def rref(mat):
    """Reduced row echelon form: returns (rows as lists, pivot column list)."""
    field = mat.field
    rows = [list(r) for r in mat.rows]
    nr, nc = mat.nrows, mat.ncols
    pivots = []
    r = 0
    for c in range(nc):
        if r >= nr:
            break
        best = None
        best_cost = 3
        for i in range(r, nr):
            x = rows[i][c]
            if not x.is_zero():
                cost = _pivot_cost(x)
                if cost < best_cost:
                    best, best_cost = i, cost
                    if cost == 0:
                        break
        if best is None:
            continue
        rows[r], rows[best] = rows[best], rows[r]
        prow = rows[r]
        p = prow[c]
        if not p.is_one():
            inv = p.inverse()
            prow = [x * inv if not x.is_zero() else x for x in prow]
            rows[r] = prow
        nz = [j for j in range(c, nc) if not prow[j].is_zero()]
        for i in range(nr):
            if i == r:
                continue
            f = rows[i][c]
            if f.is_zero():
                continue
            row = rows[i]
            for j in nz:
                row[j] = row[j] - f * prow[j]
        pivots.append(c)
        r += 1
    return rows, pivots


def rank(mat):
    if mat.nrows == 0 or mat.ncols == 0:
        return 0
    return len(rref(mat)[1])


def nullspace(mat):
    """Basis of {v : mat v = 0} as a list of column tuples."""
    field = mat.field
    nc = mat.ncols
    if mat.nrows == 0:
        return [tuple(field.one if i == j else field.zero for i in range(nc)) for j in range(nc)]
    rows, pivots = rref(mat)
    pivset = set(pivots)
    basis = []
    for free in range(nc):
        if free in pivset:
            continue
        v = [field.zero] * nc
        v[free] = field.one
        for i, pc in enumerate(pivots):
            x = rows[i][free]
            if not x.is_zero():
                v[pc] = -x
        basis.append(tuple(v))
    return basis


def solve(a, b):
    """Some X with a @ X == b, or None when the system is inconsistent."""
    field = a.field
    if a.nrows != b.nrows:
        raise ValueError("solve: row mismatch")
    n, k = a.ncols, b.ncols
    if a.nrows == 0:
        return Matrix.zeros(field, n, k)
    aug = hstack(field, [a, b], a.nrows)
    rows, pivots = rref(aug)
    for i, pc in enumerate(pivots):
        if pc >= n:
            return None
    x = [[field.zero] * k for _ in range(n)]
    for i, pc in enumerate(pivots):
        for j in range(k):
            x[pc][j] = rows[i][n + j]
    return Matrix._raw(field, tuple(tuple(r) for r in x), k)


def inverse(a):
    if a.nrows != a.ncols:
        raise ValueError("inverse of a non-square matrix")
    x = solve(a, Matrix.identity(a.field, a.nrows))
    if x is None or a @ x != Matrix.identity(a.field, a.nrows):
        raise ZeroDivisionError("singular matrix")
    return x


class Subspace:
    """Incrementally maintained span of vectors in k^dim (kept in reduced echelon form)."""

    __slots__ = ("field", "dim", "rows", "pivots")

    def __init__(self, field, dim, vectors=()):
        self.field = field
        self.dim = dim
        self.rows = []
        self.pivots = []
        for v in vectors:
            self.add(v)

    def __len__(self):
        return len(self.rows)

    def reduce(self, v):
        v = list(v)
        for row, p in zip(self.rows, self.pivots):
            c = v[p]
            if not c.is_zero():
                for j in range(self.dim):
                    x = row[j]
                    if not x.is_zero():
                        v[j] = v[j] - c * x
        return v

    def contains(self, v):
        return all(x.is_zero() for x in self.reduce(v))

    def add(self, v):
        """Add v to the span; returns True iff the dimension grew."""
        w = self.reduce(v)
        p = None
        best = 3
        for j, x in enumerate(w):
            if not x.is_zero():
                cost = _pivot_cost(x)
                if cost < best:
                    p, best = j, cost
                    if cost == 0:
                        break
        if p is None:
            return False
        inv = w[p].inverse()
        w = [x * inv if not x.is_zero() else x for x in w]
        for row in self.rows:
            c = row[p]
            if not c.is_zero():
                for j in range(self.dim):
                    if not w[j].is_zero():
                        row[j] = row[j] - c * w[j]
        self.rows.append(w)
        self.pivots.append(p)
        return True

    def complement_basis(self):
        """Standard basis indices completing the span to the whole space."""
        piv = set(self.pivots)
        return [j for j in range(self.dim) if j not in piv]
