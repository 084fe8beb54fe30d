"""Dense exact linear algebra with deterministic basis choices.

Conventions fixed here and relied on everywhere downstream:

* rref scans columns left to right and normalizes pivots to 1, so every
  "chosen basis" (kernels, quotient bases, solved functional spaces) is
  deterministic.
* Kernel bases use the free-column convention: the basis vector for free
  column c has a 1 at c and zeros at every other free column.  Hence the
  coordinates of a kernel element in that basis can be read off the free
  columns directly.
* Tensor (Kronecker) bases are ordered e_i (x) e_j with i major, j minor.
* Quotient spaces choose the classes of non-pivot ambient coordinates, in
  ascending index order, as their basis; the section sends a class to its
  representative coordinate vector.
"""

from __future__ import annotations

from dataclasses import dataclass

from corings.scalars import DimensionMismatch, Field, FieldMismatch


@dataclass(frozen=True)
class Mat:
    """Immutable dense matrix over an exact field, row-major entries."""

    field: Field
    rows: int
    cols: int
    data: tuple

    def __post_init__(self):
        if len(self.data) != self.rows * self.cols:
            raise DimensionMismatch(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} entries, got {len(self.data)}"
            )

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_rows(cls, field: Field, rows) -> "Mat":
        rows = [list(r) for r in rows]
        nrows = len(rows)
        ncols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != ncols:
                raise DimensionMismatch("ragged rows")
        data = tuple(field.of(x) for r in rows for x in r)
        return cls(field, nrows, ncols, data)

    @classmethod
    def identity(cls, field: Field, n: int) -> "Mat":
        one, zero = field.one, field.zero
        data = tuple(one if i == j else zero for i in range(n) for j in range(n))
        return cls(field, n, n, data)

    @classmethod
    def zeros(cls, field: Field, rows: int, cols: int) -> "Mat":
        return cls(field, rows, cols, (field.zero,) * (rows * cols))

    @classmethod
    def from_cols(cls, field: Field, cols) -> "Mat":
        cols = [list(c) for c in cols]
        ncols = len(cols)
        nrows = len(cols[0]) if cols else 0
        data = tuple(field.of(cols[j][i]) for i in range(nrows) for j in range(ncols))
        return cls(field, nrows, ncols, data)

    @classmethod
    def col_vector(cls, field: Field, v) -> "Mat":
        v = list(v)
        return cls(field, len(v), 1, tuple(field.of(x) for x in v))

    # -- access ------------------------------------------------------------

    def at(self, i: int, j: int):
        return self.data[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.data[i * self.cols : (i + 1) * self.cols]

    def col(self, j: int) -> tuple:
        return tuple(self.data[i * self.cols + j] for i in range(self.rows))

    def row_lists(self) -> list:
        return [list(self.row(i)) for i in range(self.rows)]

    # -- algebra -----------------------------------------------------------

    def _check_field(self, other: "Mat"):
        if self.field != other.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")

    def __add__(self, other: "Mat") -> "Mat":
        self._check_field(other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatch("shape mismatch in addition")
        add = self.field.add
        return Mat(self.field, self.rows, self.cols,
                   tuple(add(a, b) for a, b in zip(self.data, other.data)))

    def __sub__(self, other: "Mat") -> "Mat":
        self._check_field(other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatch("shape mismatch in subtraction")
        sub = self.field.sub
        return Mat(self.field, self.rows, self.cols,
                   tuple(sub(a, b) for a, b in zip(self.data, other.data)))

    def scale(self, c) -> "Mat":
        c = self.field.of(c)
        mul = self.field.mul
        return Mat(self.field, self.rows, self.cols, tuple(mul(c, a) for a in self.data))

    def __matmul__(self, other: "Mat") -> "Mat":
        self._check_field(other)
        if self.cols != other.rows:
            raise DimensionMismatch(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        F = self.field
        zero = F.zero
        n, m, k = self.rows, other.cols, self.cols
        odata = other.data
        out = []
        for i in range(n):
            base = i * k
            row_entries = [(t, self.data[base + t]) for t in range(k) if self.data[base + t]]
            acc = [zero] * m
            for t, a in row_entries:
                obase = t * m
                for j in range(m):
                    b = odata[obase + j]
                    if b:
                        acc[j] = F.add(acc[j], F.mul(a, b))
            out.extend(acc)
        return Mat(F, n, m, tuple(out))

    def apply(self, vec) -> tuple:
        """Matrix times column vector, given and returned as a tuple."""
        vec = tuple(vec)
        if len(vec) != self.cols:
            raise DimensionMismatch(f"vector length {len(vec)} vs {self.cols} columns")
        F = self.field
        out = []
        for i in range(self.rows):
            base = i * self.cols
            s = F.zero
            for j, v in enumerate(vec):
                if v:
                    a = self.data[base + j]
                    if a:
                        s = F.add(s, F.mul(a, v))
            out.append(s)
        return tuple(out)

    def transpose(self) -> "Mat":
        return Mat(self.field, self.cols, self.rows,
                   tuple(self.at(i, j) for j in range(self.cols) for i in range(self.rows)))

    def is_zero(self) -> bool:
        return not any(self.data)

    def __repr__(self):
        fmt = self.field.format
        rows = ["[" + ", ".join(fmt(self.at(i, j)) for j in range(self.cols)) + "]"
                for i in range(self.rows)]
        return "Mat[" + "; ".join(rows) + "]"


# -- stacking ---------------------------------------------------------------

def hstack(mats) -> Mat:
    mats = list(mats)
    F = mats[0].field
    rows = mats[0].rows
    for m in mats:
        if m.rows != rows:
            raise DimensionMismatch("hstack row mismatch")
        if m.field != F:
            raise FieldMismatch("hstack field mismatch")
    data = []
    for i in range(rows):
        for m in mats:
            data.extend(m.row(i))
    return Mat(F, rows, sum(m.cols for m in mats), tuple(data))


def vstack(mats) -> Mat:
    mats = list(mats)
    F = mats[0].field
    cols = mats[0].cols
    for m in mats:
        if m.cols != cols:
            raise DimensionMismatch("vstack column mismatch")
        if m.field != F:
            raise FieldMismatch("vstack field mismatch")
    data = []
    for m in mats:
        data.extend(m.data)
    return Mat(F, sum(m.rows for m in mats), cols, tuple(data))


# -- gaussian elimination ----------------------------------------------------

def _rref_rows(field: Field, rows: list) -> tuple[list, list]:
    """In-place reduced row echelon form; returns (rows, pivot column list)."""
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        sel = None
        for i in range(r, nrows):
            if rows[i][c]:
                sel = i
                break
        if sel is None:
            continue
        rows[r], rows[sel] = rows[sel], rows[r]
        inv = field.inv(rows[r][c])
        if inv != field.one:
            rows[r] = [field.mul(inv, x) for x in rows[r]]
        prow = rows[r]
        for i in range(nrows):
            if i == r:
                continue
            f = rows[i][c]
            if f:
                tgt = rows[i]
                for j in range(c, ncols):
                    pv = prow[j]
                    if pv:
                        tgt[j] = field.sub(tgt[j], field.mul(f, pv))
        pivots.append(c)
        r += 1
    return rows, pivots


def rref_pivots(m: Mat) -> tuple[Mat, tuple]:
    rows, pivots = _rref_rows(m.field, m.row_lists())
    data = tuple(x for row in rows for x in row)
    return Mat(m.field, m.rows, m.cols, data), tuple(pivots)


def rref(m: Mat) -> Mat:
    """Reduced row echelon form (pivots are leading 1s, pivot columns cleared)."""
    return rref_pivots(m)[0]


def rank(m: Mat) -> int:
    return len(rref_pivots(m)[1])


def row_space(m: Mat) -> Mat:
    """Canonical basis of the row space: rref with zero rows dropped.

    Two matrices span the same row space iff their row_space outputs are
    equal, so this doubles as the subspace-equality test.
    """
    r, pivots = rref_pivots(m)
    k = len(pivots)
    return Mat(m.field, k, m.cols, r.data[: k * m.cols])


def kernel(m: Mat) -> Mat:
    """Basis of the right null space, one row per basis vector.

    Row count is cols - rank.  The basis vector for free column c carries
    a 1 at position c and zeros at all other free columns.
    """
    r, pivots = rref_pivots(m)
    pivset = set(pivots)
    free = [c for c in range(m.cols) if c not in pivset]
    F = m.field
    rows = []
    for c in free:
        v = [F.zero] * m.cols
        v[c] = F.one
        for i, pc in enumerate(pivots):
            x = r.at(i, c)
            if x:
                v[pc] = F.neg(x)
        rows.append(v)
    if not rows:
        return Mat(F, 0, m.cols, ())
    return Mat(F, len(rows), m.cols, tuple(x for row in rows for x in row))


def solve(m: Mat, b) -> tuple | None:
    """Some x with m @ x = b, or None when inconsistent.

    Free variables are set to 0 under the rref pivot order, which makes the
    answer deterministic.
    """
    b = tuple(b)
    if len(b) != m.rows:
        raise DimensionMismatch(f"rhs length {len(b)} vs {m.rows} rows")
    F = m.field
    aug_rows = [list(m.row(i)) + [F.of(b[i])] for i in range(m.rows)]
    rows, pivots = _rref_rows(F, aug_rows) if aug_rows else ([], [])
    ncols = m.cols
    x = [F.zero] * ncols
    for i, pc in enumerate(pivots):
        if pc == ncols:
            return None  # pivot in the augmented column: inconsistent
        x[pc] = rows[i][ncols]
    return tuple(x)


def inverse(m: Mat) -> Mat:
    if m.rows != m.cols:
        raise DimensionMismatch("inverse of non-square matrix")
    F = m.field
    n = m.rows
    aug = [list(m.row(i)) + [F.one if i == j else F.zero for j in range(n)] for i in range(n)]
    rows, pivots = _rref_rows(F, aug)
    if list(pivots) != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    data = tuple(rows[i][n + j] for i in range(n) for j in range(n))
    return Mat(F, n, n, data)


def coords_in_rowspace(basis: Mat, v) -> tuple | None:
    """Coordinates of vector v in the span of basis rows, or None if outside."""
    v = tuple(v)
    if len(v) != basis.cols:
        raise DimensionMismatch("vector length vs basis width")
    return solve(basis.transpose(), v)


# -- tensor product over the base field --------------------------------------

def tensor_k(f: Mat, g: Mat) -> Mat:
    """Kronecker product: the matrix of f (x) g in the lexicographic basis
    e_i (x) e_j (i major, j minor) on both sides."""
    if f.field != g.field:
        raise FieldMismatch("tensor over mismatched fields")
    F = f.field
    mul = F.mul
    rows = f.rows * g.rows
    cols = f.cols * g.cols
    data = [F.zero] * (rows * cols)
    for i in range(f.rows):
        for k in range(f.cols):
            a = f.at(i, k)
            if not a:
                continue
            for j in range(g.rows):
                rbase = (i * g.rows + j) * cols
                gbase = j * g.cols
                for l in range(g.cols):
                    b = g.data[gbase + l]
                    if b:
                        data[rbase + k * g.cols + l] = mul(a, b)
    return Mat(F, rows, cols, tuple(data))


def tensor_vec(field: Field, u, v) -> tuple:
    """u (x) v as a coordinate tuple in the lexicographic basis."""
    mul = field.mul
    return tuple(mul(a, b) for a in u for b in v)


# -- quotient spaces ----------------------------------------------------------

@dataclass(frozen=True)
class QuotientSpace:
    """Ambient space modulo the row span of `relations`.

    proj maps ambient coordinates onto quotient coordinates, sect picks the
    canonical representative of each class; proj @ sect is the identity and
    proj annihilates every relation row.
    """

    field: Field
    ambient_dim: int
    relations: Mat  # canonical (row_space) form
    proj: Mat       # dim x ambient_dim
    sect: Mat       # ambient_dim x dim
    dim: int

    def project(self, v) -> tuple:
        return self.proj.apply(v)


def quotient_by(field: Field, ambient_dim: int, relations: Mat | None) -> QuotientSpace:
    """Quotient of k^ambient_dim by the row span of `relations`.

    The quotient basis consists of the classes of the non-pivot ambient
    coordinates in ascending order.
    """
    if relations is None or relations.rows == 0:
        relations = Mat(field, 0, ambient_dim, ())
    if relations.cols != ambient_dim:
        raise DimensionMismatch("relation width vs ambient dimension")
    r, pivots = rref_pivots(relations)
    canon = Mat(field, len(pivots), ambient_dim, r.data[: len(pivots) * ambient_dim])
    pivset = set(pivots)
    free = [c for c in range(ambient_dim) if c not in pivset]
    dim = len(free)
    F = field
    # proj: e_free -> corresponding class; e_pivot -> -sum of rref tail over free cols
    proj_rows = [[F.zero] * ambient_dim for _ in range(dim)]
    for qi, c in enumerate(free):
        proj_rows[qi][c] = F.one
    for i, pc in enumerate(pivots):
        for qi, c in enumerate(free):
            x = canon.at(i, c)
            if x:
                proj_rows[qi][pc] = F.neg(x)
    proj = Mat(F, dim, ambient_dim, tuple(x for row in proj_rows for x in row))
    sect_rows = [[F.zero] * dim for _ in range(ambient_dim)]
    for qi, c in enumerate(free):
        sect_rows[c][qi] = F.one
    sect = Mat(F, ambient_dim, dim, tuple(x for row in sect_rows for x in row))
    return QuotientSpace(F, ambient_dim, canon, proj, sect, dim)


def balanced_quotient(field: Field, dim_m: int, dim_n: int,
                      right_acts, left_acts) -> QuotientSpace:
    """Quotient of k^(dim_m * dim_n) by middle relations (m.u)(x)n - m(x)(u.n).

    right_acts[t] is the matrix of the right action of the t-th middle basis
    element on the left factor, left_acts[t] the left action on the right
    factor.  Relation generators over basis triples suffice by bilinearity.
    """
    F = field
    rows = []
    zero_row = [F.zero] * (dim_m * dim_n)
    for R, L in zip(right_acts, left_acts):
        for i in range(dim_m):
            mcol = R.col(i)
            for k in range(dim_n):
                ncol = L.col(k)
                row = list(zero_row)
                for a, x in enumerate(mcol):
                    if x:
                        row[a * dim_n + k] = F.add(row[a * dim_n + k], x)
                for b, y in enumerate(ncol):
                    if y:
                        row[i * dim_n + b] = F.sub(row[i * dim_n + b], y)
                if any(row):
                    rows.append(row)
    if rows:
        rel = Mat(F, len(rows), dim_m * dim_n, tuple(x for row in rows for x in row))
    else:
        rel = None
    return quotient_by(F, dim_m * dim_n, rel)


def triple_balanced_quotient(field: Field, d1: int, d2: int, d3: int,
                             acts12, acts23) -> QuotientSpace:
    """Quotient of k^(d1*d2*d3) by middle relations at both junctions.

    acts12 = (right action mats on factor 1, left action mats on factor 2),
    acts23 = (right action mats on factor 2, left action mats on factor 3).
    """
    F = field
    total = d1 * d2 * d3
    rows = []
    r12, l12 = acts12
    for R, L in zip(r12, l12):
        for i in range(d1):
            mcol = R.col(i)
            for k in range(d2):
                ncol = L.col(k)
                base = [F.zero] * (d1 * d2)
                for a, x in enumerate(mcol):
                    if x:
                        base[a * d2 + k] = F.add(base[a * d2 + k], x)
                for b, y in enumerate(ncol):
                    if y:
                        base[i * d2 + b] = F.sub(base[i * d2 + b], y)
                if any(base):
                    for w in range(d3):
                        row = [F.zero] * total
                        for idx, v in enumerate(base):
                            if v:
                                row[idx * d3 + w] = v
                        rows.append(row)
    r23, l23 = acts23
    for R, L in zip(r23, l23):
        for k in range(d2):
            mcol = R.col(k)
            for w in range(d3):
                ncol = L.col(w)
                base = [F.zero] * (d2 * d3)
                for a, x in enumerate(mcol):
                    if x:
                        base[a * d3 + w] = F.add(base[a * d3 + w], x)
                for b, y in enumerate(ncol):
                    if y:
                        base[k * d3 + b] = F.sub(base[k * d3 + b], y)
                if any(base):
                    for u in range(d1):
                        row = [F.zero] * total
                        off = u * d2 * d3
                        for idx, v in enumerate(base):
                            if v:
                                row[off + idx] = v
                        rows.append(row)
    if rows:
        rel = Mat(F, len(rows), total, tuple(x for row in rows for x in row))
    else:
        rel = None
    return quotient_by(F, total, rel)


def sandwich_operator(P: Mat, S: Mat, fn: int, fm: int) -> Mat:
    """Matrix of the linear operator F -> P @ F @ S on row-major vec(F),
    where F is fn x fm.  Output rows index the flattened result."""
    if P.cols != fn or S.rows != fm:
        raise DimensionMismatch("sandwich operator shape mismatch")
    F = P.field
    out_rows = P.rows * S.cols
    cols = []
    for n in range(fn):
        pcol = P.col(n)
        for u in range(fm):
            srow = S.row(u)
            col = [F.zero] * out_rows
            for r, pv in enumerate(pcol):
                if pv:
                    base = r * S.cols
                    for c0, sv in enumerate(srow):
                        if sv:
                            col[base + c0] = F.mul(pv, sv)
            cols.append(col)
    return Mat.from_cols(F, cols)


def tensor_slice_operator(P: Mat, S: Mat, c: int, fn: int, fm: int) -> Mat:
    """Matrix of F -> P @ (F tensor I_c) @ S on row-major vec(F).

    F is fn x fm, so F tensor I_c is (fn*c) x (fm*c); P consumes its rows
    and S feeds its columns.  Column (n, u) of the operator is the flattened
    product of the n-th column slice of P with the u-th row slice of S.
    """
    if P.cols != fn * c or S.rows != fm * c:
        raise DimensionMismatch("tensor slice operator shape mismatch")
    F = P.field
    cols = []
    for n in range(fn):
        pslice = Mat.from_cols(F, [P.col(n * c + k) for k in range(c)])
        for u in range(fm):
            sslice = Mat(F, c, S.cols, S.data[(u * c) * S.cols:(u * c + c) * S.cols])
            cols.append((pslice @ sslice).data)
    return Mat.from_cols(F, cols)


def random_invertible(field: Field, n: int, rng) -> Mat:
    """Deterministic (seeded) invertible matrix with small entries."""
    while True:
        data = tuple(field.random(rng) for _ in range(n * n))
        m = Mat(field, n, n, data)
        if rank(m) == n:
            return m
