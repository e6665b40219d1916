"""Exact linear algebra over the rationals.

Everything downstream reduces to row reduction of matrices with
Fraction entries: kernels, solves, quotients and maps induced on
quotients.  All results are exact, and all bases are canonical
(reduced row echelon form, leftmost pivot first), so repeated runs of
any computation produce byte-identical output.

Matrices act on column vectors; vectors are plain lists of Fractions.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import NotWellDefinedError

Q = Fraction


def frac(x) -> Fraction:
    """Coerce ints, floats are rejected, strings like '2/3' allowed."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floating point input is not allowed in exact arithmetic")
    return Fraction(x)


def frac_str(x) -> str:
    """Serialise a rational as 'p/q', or just 'p' when q = 1."""
    x = frac(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def vec(entries) -> list:
    return [frac(e) for e in entries]


def zero_vec(n) -> list:
    return [Q(0)] * n


def unit_vec(n, i) -> list:
    v = [Q(0)] * n
    v[i] = Q(1)
    return v


def vec_add(u, v):
    return [a + b for a, b in zip(u, v)]


def vec_sub(u, v):
    return [a - b for a, b in zip(u, v)]


def vec_scale(c, u):
    return [c * a for a in u]


def vec_is_zero(u):
    return all(a == 0 for a in u)


class Matrix:
    """Dense matrix of Fractions.  Rows are lists; shape is fixed."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows, ncols=None):
        self.rows = [[frac(x) for x in row] for row in rows]
        self.nrows = len(self.rows)
        if self.nrows:
            self.ncols = len(self.rows[0])
            if any(len(r) != self.ncols for r in self.rows):
                raise ValueError("ragged rows")
        else:
            if ncols is None:
                raise ValueError("empty matrix needs an explicit column count")
            self.ncols = ncols
        if ncols is not None and self.nrows and ncols != self.ncols:
            raise ValueError("column count mismatch")

    @classmethod
    def identity(cls, n):
        return cls([unit_vec(n, i) for i in range(n)], ncols=n)

    @classmethod
    def zeros(cls, nrows, ncols):
        return cls([zero_vec(ncols) for _ in range(nrows)], ncols=ncols)

    @classmethod
    def from_cols(cls, cols, nrows=None):
        if not cols:
            if nrows is None:
                raise ValueError("empty column list needs a row count")
            return cls.zeros(nrows, 0)
        n = len(cols[0])
        return cls([[frac(col[i]) for col in cols] for i in range(n)], ncols=len(cols))

    def copy(self):
        return Matrix([row[:] for row in self.rows], ncols=self.ncols)

    def col(self, j):
        return [row[j] for row in self.rows]

    def cols(self):
        return [self.col(j) for j in range(self.ncols)]

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.nrows == other.nrows
            and self.ncols == other.ncols
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.nrows, self.ncols, tuple(tuple(r) for r in self.rows)))

    def __repr__(self):
        if self.nrows == 0 or self.ncols == 0:
            return f"Matrix(<{self.nrows}x{self.ncols}>)"
        body = "; ".join(" ".join(frac_str(x) for x in row) for row in self.rows)
        return f"Matrix([{body}])"

    def __add__(self, other):
        if self.nrows != other.nrows or self.ncols != other.ncols:
            raise ValueError("shape mismatch")
        return Matrix(
            [vec_add(r, s) for r, s in zip(self.rows, other.rows)], ncols=self.ncols
        )

    def __sub__(self, other):
        if self.nrows != other.nrows or self.ncols != other.ncols:
            raise ValueError("shape mismatch")
        return Matrix(
            [vec_sub(r, s) for r, s in zip(self.rows, other.rows)], ncols=self.ncols
        )

    def __neg__(self):
        return self.scale(Q(-1))

    def scale(self, c):
        c = frac(c)
        return Matrix([vec_scale(c, r) for r in self.rows], ncols=self.ncols)

    def __matmul__(self, other):
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.ncols} vs {other.nrows}")
        out = []
        orows = other.rows
        for row in self.rows:
            acc = zero_vec(other.ncols)
            for k, c in enumerate(row):
                if c:
                    ork = orows[k]
                    for j in range(other.ncols):
                        if ork[j]:
                            acc[j] += c * ork[j]
            out.append(acc)
        return Matrix(out, ncols=other.ncols)

    def apply(self, v):
        """Matrix times column vector; iterates the nonzeros of v."""
        if len(v) != self.ncols:
            raise ValueError("length mismatch")
        support = [(j, b) for j, b in enumerate(v) if b]
        out = []
        for row in self.rows:
            s = Q(0)
            for j, b in support:
                a = row[j]
                if a:
                    s += a * b
            out.append(s)
        return out

    def transpose(self):
        return Matrix(
            [[self.rows[i][j] for i in range(self.nrows)] for j in range(self.ncols)],
            ncols=self.nrows,
        )

    def hstack(self, other):
        if self.nrows != other.nrows:
            raise ValueError("row count mismatch")
        return Matrix(
            [r + s for r, s in zip(self.rows, other.rows)],
            ncols=self.ncols + other.ncols,
        )

    def vstack(self, other):
        if self.ncols != other.ncols:
            raise ValueError("column count mismatch")
        return Matrix(
            [r[:] for r in self.rows] + [r[:] for r in other.rows], ncols=self.ncols
        )

    def kron(self, other):
        """Kronecker product, index (i,j) -> i * other_dim + j."""
        out = []
        for r in self.rows:
            for s in other.rows:
                row = []
                for a in r:
                    if a:
                        row.extend(a * b for b in s)
                    else:
                        row.extend([Q(0)] * other.ncols)
                out.append(row)
        return Matrix(out, ncols=self.ncols * other.ncols)

    def is_zero(self):
        return all(vec_is_zero(r) for r in self.rows)

    def rref(self):
        """Reduced row echelon form.  Returns (rref_matrix, pivot_columns)."""
        m = [row[:] for row in self.rows]
        nrows, ncols = self.nrows, self.ncols
        pivots = []
        r = 0
        for c in range(ncols):
            if r >= nrows:
                break
            pivot_row = None
            for i in range(r, nrows):
                if m[i][c] != 0:
                    pivot_row = i
                    break
            if pivot_row is None:
                continue
            m[r], m[pivot_row] = m[pivot_row], m[r]
            pv = m[r][c]
            if pv != 1:
                inv = Q(1) / pv
                m[r] = [x * inv for x in m[r]]
            row_r = m[r]
            for i in range(nrows):
                if i != r and m[i][c]:
                    f = m[i][c]
                    mi = m[i]
                    for j in range(c, ncols):
                        if row_r[j]:
                            mi[j] -= f * row_r[j]
            pivots.append(c)
            r += 1
        return Matrix(m, ncols=ncols), pivots

    def rank(self):
        return len(self.rref()[1])

    def kernel(self):
        """Canonical basis of the right kernel, rows of the result.

        The basis derived from the rref free columns is itself put in
        rref so that equal kernels always get equal bases.
        """
        R, pivots = self.rref()
        pivot_set = set(pivots)
        free = [j for j in range(self.ncols) if j not in pivot_set]
        basis = []
        for j in free:
            v = zero_vec(self.ncols)
            v[j] = Q(1)
            for r_idx, p in enumerate(pivots):
                v[p] = -R.rows[r_idx][j]
            basis.append(v)
        if not basis:
            return Matrix([], ncols=self.ncols)
        return Matrix(basis, ncols=self.ncols).rref()[0].strip_zero_rows()

    def strip_zero_rows(self):
        kept = [r for r in self.rows if not vec_is_zero(r)]
        return Matrix(kept, ncols=self.ncols)

    def solve(self, b):
        """Canonical solution v of self @ v = b, or None.

        Free variables are set to zero in rref coordinates.
        """
        sols = self.solve_matrix(Matrix.from_cols([b], nrows=self.nrows))
        if sols is None:
            return None
        return sols.col(0)

    def solve_matrix(self, B):
        """Solve self @ X = B column by column; None if any is inconsistent."""
        if B.nrows != self.nrows:
            raise ValueError("shape mismatch")
        aug = self.hstack(B)
        R, pivots = aug.rref()
        n = self.ncols
        for r_idx, p in enumerate(pivots):
            if p >= n:
                return None
        cols = []
        for k in range(B.ncols):
            x = zero_vec(n)
            for r_idx, p in enumerate(pivots):
                x[p] = R.rows[r_idx][n + k]
            cols.append(x)
        return Matrix.from_cols(cols, nrows=n)

    def inverse(self):
        if self.nrows != self.ncols:
            raise ValueError("not square")
        inv = self.solve_matrix(Matrix.identity(self.nrows))
        if inv is None:
            raise ValueError("matrix is singular")
        return inv

    def to_json(self):
        return [[frac_str(x) for x in row] for row in self.rows]

    @classmethod
    def from_json(cls, data, ncols=None):
        return cls([[frac(x) for x in row] for row in data], ncols=ncols)


class Subspace:
    """Row space with canonical rref basis."""

    __slots__ = ("ambient_dim", "basis", "pivots")

    def __init__(self, ambient_dim, basis_matrix=None):
        self.ambient_dim = ambient_dim
        if basis_matrix is None or basis_matrix.nrows == 0:
            self.basis = Matrix([], ncols=ambient_dim)
            self.pivots = []
        else:
            R, pivots = basis_matrix.rref()
            self.basis = R.strip_zero_rows()
            self.pivots = pivots

    @classmethod
    def from_vectors(cls, vectors, ambient_dim):
        if not vectors:
            return cls(ambient_dim)
        return cls(ambient_dim, Matrix(vectors, ncols=ambient_dim))

    @property
    def dim(self):
        return self.basis.nrows

    def reduce(self, v):
        """Subtract the projection onto the subspace, using pivot columns."""
        v = list(v)
        for row, p in zip(self.basis.rows, self.pivots):
            c = v[p]
            if c:
                for j in range(p, self.ambient_dim):
                    if row[j]:
                        v[j] -= c * row[j]
        return v

    def contains(self, v):
        return vec_is_zero(self.reduce(v))

    def coordinates(self, v):
        """Coefficients of v on the rref basis, or None if v is outside."""
        coords = []
        v = list(v)
        for row, p in zip(self.basis.rows, self.pivots):
            c = v[p]
            coords.append(c)
            if c:
                for j in range(p, self.ambient_dim):
                    if row[j]:
                        v[j] -= c * row[j]
        if not vec_is_zero(v):
            return None
        return coords

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.ambient_dim == other.ambient_dim
            and self.basis == other.basis
        )

    def __repr__(self):
        return f"Subspace(dim {self.dim} of {self.ambient_dim})"


class QuotientSpace:
    """Ambient space modulo a relation subspace.

    Canonical representatives are the standard basis vectors at the
    non-pivot columns of the relation rref; project and lift are then
    mutually inverse on coordinates by construction.
    """

    __slots__ = ("ambient_dim", "relations", "reps")

    def __init__(self, ambient_dim, relations: Subspace):
        if relations.ambient_dim != ambient_dim:
            raise ValueError("relation ambient mismatch")
        self.ambient_dim = ambient_dim
        self.relations = relations
        pivot_set = set(relations.pivots)
        self.reps = [j for j in range(ambient_dim) if j not in pivot_set]

    @classmethod
    def from_relation_vectors(cls, ambient_dim, vectors):
        return cls(ambient_dim, Subspace.from_vectors(vectors, ambient_dim))

    @property
    def dim(self):
        return len(self.reps)

    def project(self, v):
        reduced = self.relations.reduce(v)
        return [reduced[j] for j in self.reps]

    def lift(self, coords):
        v = zero_vec(self.ambient_dim)
        for j, c in zip(self.reps, coords):
            v[j] = c
        return v

    def project_matrix(self):
        return Matrix.from_cols(
            [self.project(unit_vec(self.ambient_dim, i)) for i in range(self.ambient_dim)],
            nrows=self.dim,
        )

    def lift_matrix(self):
        return Matrix.from_cols(
            [self.lift(unit_vec(self.dim, k)) for k in range(self.dim)],
            nrows=self.ambient_dim,
        )

    def __repr__(self):
        return f"QuotientSpace(dim {self.dim} = {self.ambient_dim} ambient mod {self.relations.dim})"


def quotient(ambient_dim, relation_vectors):
    """Quotient of the ambient coordinate space by the span of the relations."""
    return QuotientSpace.from_relation_vectors(ambient_dim, relation_vectors)


def induced_map(f: Matrix, source: QuotientSpace, target: QuotientSpace) -> Matrix:
    """Matrix of the map induced by f on quotient coordinates.

    Raises NotWellDefinedError unless f maps the source relations into
    the target relations.
    """
    if f.ncols != source.ambient_dim or f.nrows != target.ambient_dim:
        raise ValueError("ambient shape mismatch")
    for row in source.relations.basis.rows:
        img = f.apply(row)
        if not target.relations.contains(img):
            raise NotWellDefinedError("map does not preserve the relation subspace")
    cols = [target.project(f.apply(source.lift(unit_vec(source.dim, k)))) for k in range(source.dim)]
    return Matrix.from_cols(cols, nrows=target.dim)


# ---------------------------------------------------------------------------
# sparse rows: dict {column: Fraction}.  Used where ambient dimensions are
# too large for dense elimination (bar complexes of group algebras).


def sparse_axpy(target, c, source):
    """target += c * source, dropping zeros; mutates and returns target."""
    for j, a in source.items():
        s = target.get(j, 0) + c * a
        if s:
            target[j] = s
        else:
            target.pop(j, None)
    return target


class SparseReducer:
    """Incremental row reduction for sparse rational rows.

    Maintains rows normalised to a leading 1 at their pivot column.
    add() reduces the incoming row against the current basis, adds the
    remainder if nonzero, and returns it.
    """

    def __init__(self):
        self.pivot_rows = {}

    @property
    def rank(self):
        return len(self.pivot_rows)

    def reduce(self, row):
        row = dict(row)
        while row:
            p = min(row)
            pivot = self.pivot_rows.get(p)
            if pivot is None:
                return row, p
            sparse_axpy(row, -row[p], pivot)
        return row, None

    def add(self, row):
        row, p = self.reduce(row)
        if p is not None:
            c = row[p]
            if c != 1:
                inv = Q(1) / c
                row = {j: inv * a for j, a in row.items()}
            self.pivot_rows[p] = row
        return row

    def contains(self, row):
        reduced, p = self.reduce(row)
        return p is None


def sparse_rank(rows):
    red = SparseReducer()
    for row in rows:
        red.add(row)
    return red.rank
