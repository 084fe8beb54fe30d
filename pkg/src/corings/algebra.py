"""Finite-dimensional unital algebras, bimodules and their tensor calculus.

An algebra is a structure-constant table c[i][j] = coordinates of e_i e_j
plus the coordinates of its unit.  Bimodules carry one action matrix per
algebra basis element on each side; a module that only has one side sets
the other to None.  The tensor product over the algebra is realized as an
explicit quotient of the tensor product over the base field, with the
deterministic projection/section pair from `linalg.quotient_by`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from corings.linalg import (
    Mat,
    QuotientSpace,
    balanced_quotient,
    coords_in_rowspace,
    kernel,
    rank,
    row_space,
    solve,
    tensor_k,
    tensor_vec,
    vstack,
)
from corings.report import CheckReport
from corings.scalars import Field


class BaseMismatch(ValueError):
    """Raised when two modules do not share the base algebra."""


class MissingDualBasis(ValueError):
    """Raised when an operation needs a dual basis that does not exist."""


@dataclass(frozen=True)
class Algebra:
    """Unital associative algebra by structure constants over an exact field."""

    field: Field
    dim: int
    mul: tuple   # mul[i][j] = coordinate tuple of e_i * e_j
    unit: tuple  # coordinates of 1

    @classmethod
    def from_tables(cls, field: Field, mul, unit) -> "Algebra":
        dim = len(unit)
        mul_t = tuple(
            tuple(tuple(field.of(x) for x in mul[i][j]) for j in range(dim))
            for i in range(dim)
        )
        return cls(field, dim, mul_t, tuple(field.of(x) for x in unit))

    def multiply(self, x, y) -> tuple:
        F = self.field
        acc = [F.zero] * self.dim
        for i, a in enumerate(x):
            if not a:
                continue
            row = self.mul[i]
            for j, b in enumerate(y):
                if not b:
                    continue
                ab = F.mul(a, b)
                for k, c in enumerate(row[j]):
                    if c:
                        acc[k] = F.add(acc[k], F.mul(ab, c))
        return tuple(acc)

    def left_mult(self, a) -> Mat:
        """Matrix of x -> a*x."""
        cols = [self.multiply(a, _basis_vec(self.field, self.dim, j)) for j in range(self.dim)]
        return Mat.from_cols(self.field, cols)

    def right_mult(self, a) -> Mat:
        """Matrix of x -> x*a."""
        cols = [self.multiply(_basis_vec(self.field, self.dim, j), a) for j in range(self.dim)]
        return Mat.from_cols(self.field, cols)

    @cached_property
    def left_mats(self) -> tuple:
        return tuple(self.left_mult(_basis_vec(self.field, self.dim, i)) for i in range(self.dim))

    @cached_property
    def right_mats(self) -> tuple:
        return tuple(self.right_mult(_basis_vec(self.field, self.dim, i)) for i in range(self.dim))

    def basis_vec(self, i: int) -> tuple:
        return _basis_vec(self.field, self.dim, i)


def _basis_vec(field: Field, dim: int, i: int) -> tuple:
    return tuple(field.one if j == i else field.zero for j in range(dim))


# -- algebra constructors -------------------------------------------------------

def field_algebra(field: Field) -> Algebra:
    return Algebra.from_tables(field, [[[1]]], [1])


def product_field_algebra(field: Field, n: int) -> Algebra:
    """The split product of n copies of the base field, e_i e_j = delta_ij e_i."""
    mul = [[[1 if (i == j and k == i) else 0 for k in range(n)] for j in range(n)] for i in range(n)]
    return Algebra.from_tables(field, mul, [1] * n)


def subalgebra(ambient: Algebra, basis: Mat) -> tuple[Algebra, Mat]:
    """Subalgebra of `ambient` spanned by the rows of `basis`.

    Returns the algebra in the given basis plus the inclusion matrix
    (ambient.dim x basis.rows).  Raises ValueError when the span is not
    closed under multiplication or misses the unit.
    """
    n = basis.rows
    unit = coords_in_rowspace(basis, ambient.unit)
    if unit is None:
        raise ValueError("span does not contain the unit")
    mul = []
    for i in range(n):
        row = []
        for j in range(n):
            prod = ambient.multiply(basis.row(i), basis.row(j))
            coords = coords_in_rowspace(basis, prod)
            if coords is None:
                raise ValueError(f"span not closed under multiplication at ({i},{j})")
            row.append(coords)
        mul.append(row)
    alg = Algebra.from_tables(ambient.field, mul, unit)
    incl = basis.transpose()
    return alg, incl


def validate_algebra(a: Algebra, suite: str = "algebra") -> CheckReport:
    rep = CheckReport(suite)
    ok_assoc = []
    for i in range(a.dim):
        for j in range(a.dim):
            for k in range(a.dim):
                lhs = a.multiply(a.multiply(a.basis_vec(i), a.basis_vec(j)), a.basis_vec(k))
                rhs = a.multiply(a.basis_vec(i), a.multiply(a.basis_vec(j), a.basis_vec(k)))
                if lhs != rhs:
                    ok_assoc.append((i, j, k))
    rep.add("algebra.associativity", "associativity on basis triples",
            not ok_assoc, f"failing triples: {ok_assoc}" if ok_assoc else "")
    bad_unit = []
    for i in range(a.dim):
        e = a.basis_vec(i)
        if a.multiply(a.unit, e) != e or a.multiply(e, a.unit) != e:
            bad_unit.append(i)
    rep.add("algebra.unit", "two-sided unit on basis elements",
            not bad_unit, f"failing indices: {bad_unit}" if bad_unit else "")
    return rep


# -- bimodules --------------------------------------------------------------------

@dataclass(frozen=True)
class Bimodule:
    """Module over `base` with optional left and right actions.

    left[i] / right[i] is the action matrix of the i-th algebra basis
    element; a one-sided module leaves the unused side as None.
    """

    base: Algebra
    dim: int
    left: tuple | None
    right: tuple | None

    @classmethod
    def regular(cls, a: Algebra) -> "Bimodule":
        return cls(a, a.dim, a.left_mats, a.right_mats)

    @classmethod
    def right_regular(cls, a: Algebra) -> "Bimodule":
        return cls(a, a.dim, None, a.right_mats)

    def left_act(self, a) -> Mat:
        return _act(self.left, a, self.base.field, self.dim)

    def right_act(self, a) -> Mat:
        return _act(self.right, a, self.base.field, self.dim)

    def with_trivial_left(self) -> "Bimodule":
        return Bimodule(self.base, self.dim, None, self.right)


def _act(mats, a, field, dim) -> Mat:
    if mats is None:
        raise ValueError("module has no action on this side")
    acc = Mat.zeros(field, dim, dim)
    for i, c in enumerate(a):
        if c:
            acc = acc + mats[i].scale(c)
    return acc


def validate_bimodule(m: Bimodule, suite: str = "bimodule") -> CheckReport:
    rep = CheckReport(suite)
    A = m.base
    F = A.field
    ident = Mat.identity(F, m.dim)
    if m.left is not None:
        rep.add("bimodule.left.unital", "left action of the unit is the identity",
                m.left_act(A.unit) == ident)
        bad = []
        for i in range(A.dim):
            for j in range(A.dim):
                prod = m.left_act(A.multiply(A.basis_vec(i), A.basis_vec(j)))
                if prod != m.left[i] @ m.left[j]:
                    bad.append((i, j))
        rep.add("bimodule.left.associative", "left action respects multiplication",
                not bad, f"failing pairs: {bad}" if bad else "")
    if m.right is not None:
        rep.add("bimodule.right.unital", "right action of the unit is the identity",
                m.right_act(A.unit) == ident)
        bad = []
        for i in range(A.dim):
            for j in range(A.dim):
                prod = m.right_act(A.multiply(A.basis_vec(i), A.basis_vec(j)))
                if prod != m.right[j] @ m.right[i]:
                    bad.append((i, j))
        rep.add("bimodule.right.associative", "right action respects multiplication",
                not bad, f"failing pairs: {bad}" if bad else "")
    if m.left is not None and m.right is not None:
        bad = [
            (i, j)
            for i in range(A.dim)
            for j in range(A.dim)
            if m.left[i] @ m.right[j] != m.right[j] @ m.left[i]
        ]
        rep.add("bimodule.commuting", "left and right actions commute",
                not bad, f"failing pairs: {bad}" if bad else "")
    return rep


@dataclass(frozen=True)
class BimoduleMap:
    src: Bimodule
    dst: Bimodule
    mat: Mat  # dst.dim x src.dim


def validate_bimodule_map(f: BimoduleMap, suite: str = "bimodule-map") -> CheckReport:
    rep = CheckReport(suite)
    A = f.src.base
    if f.src.left is not None and f.dst.left is not None:
        bad = [i for i in range(A.dim) if f.mat @ f.src.left[i] != f.dst.left[i] @ f.mat]
        rep.add("map.left-linear", "commutes with the left action",
                not bad, f"failing basis indices: {bad}" if bad else "")
    if f.src.right is not None and f.dst.right is not None:
        bad = [i for i in range(A.dim) if f.mat @ f.src.right[i] != f.dst.right[i] @ f.mat]
        rep.add("map.right-linear", "commutes with the right action",
                not bad, f"failing basis indices: {bad}" if bad else "")
    return rep


def is_bimodule_iso(f: BimoduleMap) -> bool:
    return f.mat.rows == f.mat.cols and rank(f.mat) == f.mat.rows


# -- tensor product over the algebra ------------------------------------------------

@dataclass(frozen=True)
class TensorProduct:
    """M (x)_A N as an explicit quotient of M (x)_k N."""

    left: Bimodule
    right: Bimodule
    space: QuotientSpace
    module: Bimodule  # outer actions on the quotient

    def pure(self, mvec, nvec) -> tuple:
        """Class of the elementary tensor m (x) n."""
        return self.space.project(tensor_vec(self.space.field, mvec, nvec))


def tensor_over_algebra(m: Bimodule, n: Bimodule) -> TensorProduct:
    """Quotient of m (x)_k n by the middle relations m.a (x) n - m (x) a.n.

    The result keeps m's left action (when present) and n's right action;
    both are checked to descend to the quotient.
    """
    if m.base is not n.base and m.base != n.base:
        raise BaseMismatch("tensor factors over different base algebras")
    A = m.base
    F = A.field
    q = balanced_quotient(F, m.dim, n.dim, m.right, n.left)
    ident_m = Mat.identity(F, m.dim)
    ident_n = Mat.identity(F, n.dim)
    left = None
    if m.left is not None:
        left = tuple(q.proj @ tensor_k(L, ident_n) @ q.sect for L in m.left)
        _check_descends(q, [tensor_k(L, ident_n) for L in m.left], "left")
    right = None
    if n.right is not None:
        right = tuple(q.proj @ tensor_k(ident_m, R) @ q.sect for R in n.right)
        _check_descends(q, [tensor_k(ident_m, R) for R in n.right], "right")
    module = Bimodule(A, q.dim, left, right)
    return TensorProduct(m, n, q, module)


def _check_descends(q: QuotientSpace, ambient_mats, side: str) -> None:
    if q.relations.rows == 0:
        return
    rel_t = q.relations.transpose()
    for t, mat in enumerate(ambient_mats):
        if not (q.proj @ mat @ rel_t).is_zero():
            raise ValueError(f"{side} action does not descend to the tensor quotient (index {t})")


def induced_map(src: TensorProduct, dst: TensorProduct, f: Mat, g: Mat) -> Mat:
    """The map f (x)_A g between tensor quotients, computed through sections."""
    return dst.space.proj @ tensor_k(f, g) @ src.space.sect


# -- collapse and contraction helpers ----------------------------------------------

def collapse_right(m: Bimodule) -> Mat:
    """M (x)_k A -> M, m (x) a -> m.a  (columns indexed m-major)."""
    F = m.base.field
    cols = []
    for i in range(m.dim):
        for k in range(m.base.dim):
            cols.append(m.right[k].col(i))
    return Mat.from_cols(F, cols)


def collapse_left(m: Bimodule) -> Mat:
    """A (x)_k M -> M, a (x) m -> a.m  (columns indexed a-major)."""
    F = m.base.field
    cols = []
    for k in range(m.base.dim):
        for i in range(m.dim):
            cols.append(m.left[k].col(i))
    return Mat.from_cols(F, cols)


def contract_right(m: Bimodule, c_dim: int, functional: Mat) -> Mat:
    """M (x)_k C -> M, m (x) c -> m.functional(c), functional: C -> A."""
    return collapse_right(m) @ tensor_k(Mat.identity(m.base.field, m.dim), functional)


def contract_left(m: Bimodule, c_dim: int, functional: Mat) -> Mat:
    """C (x)_k M -> M, c (x) m -> functional(c).m."""
    return collapse_left(m) @ tensor_k(functional, Mat.identity(m.base.field, m.dim))


def embed_right(field: Field, dim_m: int, cvec) -> Mat:
    """M -> M (x)_k C, m -> m (x) c for the fixed vector c."""
    cvec = tuple(cvec)
    cols = []
    for i in range(dim_m):
        base = tuple(field.zero for _ in range(i * len(cvec)))
        tail = tuple(field.zero for _ in range((dim_m - 1 - i) * len(cvec)))
        cols.append(base + cvec + tail)
    return Mat.from_cols(field, cols)


# -- left duals and dual bases -------------------------------------------------------

def left_dual(m: Bimodule) -> tuple[Bimodule, tuple]:
    """The left dual *M of left-linear functionals M -> A.

    Functionals f satisfy f(a.m) = a f(m); the basis is the kernel-solved
    constraint space.  The bimodule structure is (a.f.b)(c) = f(c.a) b.
    Returns (dual module, tuple of functional matrices A.dim x M.dim).
    """
    A = m.base
    F = A.field
    n_unknowns = A.dim * m.dim  # f as a matrix, row-major
    rows = []
    for t in range(A.dim):
        # F @ L_t - left_mult(e_t) @ F = 0
        Lt = m.left[t]
        Gt = A.left_mats[t]
        for r in range(A.dim):
            for c in range(m.dim):
                row = [F.zero] * n_unknowns
                # (F @ Lt)[r][c] = sum_s F[r][s] Lt[s][c]
                for s in range(m.dim):
                    x = Lt.at(s, c)
                    if x:
                        row[r * m.dim + s] = F.add(row[r * m.dim + s], x)
                # (Gt @ F)[r][c] = sum_u Gt[r][u] F[u][c]
                for u in range(A.dim):
                    x = Gt.at(r, u)
                    if x:
                        row[u * m.dim + c] = F.sub(row[u * m.dim + c], x)
                if any(row):
                    rows.append(row)
    if rows:
        sys = Mat(F, len(rows), n_unknowns, tuple(x for row in rows for x in row))
    else:
        sys = Mat(F, 0, n_unknowns, ())
    basis = kernel(sys)
    functionals = tuple(
        Mat(F, A.dim, m.dim, basis.row(i)) for i in range(basis.rows)
    )
    dim = len(functionals)

    def func_coords(fmat: Mat):
        return coords_in_rowspace(basis, fmat.data)

    left = None
    if m.right is not None:
        # (e_t . f)(c) = f(c . e_t): f -> f @ R_t
        left = tuple(
            Mat.from_cols(F, [func_coords(functionals[u] @ m.right[t]) for u in range(dim)])
            for t in range(A.dim)
        )
    # (f . e_t)(c) = f(c) e_t: f -> right_mult(e_t) @ f
    right = tuple(
        Mat.from_cols(F, [func_coords(A.right_mats[t] @ functionals[u]) for u in range(dim)])
        for t in range(A.dim)
    )
    dual = Bimodule(A, dim, left, right)
    return dual, functionals


@dataclass(frozen=True)
class DualBasis:
    """Pairs (functional, element) with sum f_i(m) . m_i = m for all m."""

    module: Bimodule
    pairs: tuple  # of (Mat A.dim x M.dim, coordinate tuple in M)


def find_dual_basis(m: Bimodule) -> DualBasis | None:
    """Dual basis of m as a left module, or None when m is not finitely
    generated projective.  Decided by solving sum_i f_i(-) . m_i = id."""
    A = m.base
    F = A.field
    dual, functionals = left_dual(m)
    nd = len(functionals)
    if m.dim == 0 or nd == 0:
        return DualBasis(m, ()) if m.dim == 0 else None
    # unknowns t[u][c]: coefficient of functionals[u] (x) e_c
    n_unknowns = nd * m.dim
    # constraint: for each basis vector e_j of M: sum t[u][c] L(f_u(e_j)) e_c = e_j
    rows = []
    rhs = []
    for j in range(m.dim):
        cols_for_j = []
        for u in range(nd):
            a = functionals[u].col(j)  # f_u(e_j) in A
            Lmat = m.left_act(a)
            cols_for_j.append(Lmat)
        for r in range(m.dim):
            row = [F.zero] * n_unknowns
            for u in range(nd):
                for c in range(m.dim):
                    row[u * m.dim + c] = cols_for_j[u].at(r, c)
            rows.append(row)
            rhs.append(F.one if r == j else F.zero)
    sys = Mat(F, len(rows), n_unknowns, tuple(x for row in rows for x in row))
    sol = solve(sys, rhs)
    if sol is None:
        return None
    pairs = []
    for u in range(nd):
        for c in range(m.dim):
            t = sol[u * m.dim + c]
            if t:
                pairs.append((functionals[u].scale(t), _basis_vec(F, m.dim, c)))
    return DualBasis(m, tuple(pairs))


def check_dual_basis(db: DualBasis) -> bool:
    m = db.module
    F = m.base.field
    for j in range(m.dim):
        e = _basis_vec(F, m.dim, j)
        acc = [F.zero] * m.dim
        for f, vec in db.pairs:
            a = f.apply(e)
            img = m.left_act(a).apply(vec)
            acc = [F.add(x, y) for x, y in zip(acc, img)]
        if tuple(acc) != e:
            return False
    return True


# -- module predicates ------------------------------------------------------------

@dataclass(frozen=True)
class ModulePredicates:
    flat_projective: bool
    generator: bool
    faithfully_flat: bool
    progenerator: bool


def left_module_predicates(m: Bimodule) -> ModulePredicates:
    """Projectivity by dual-basis solvability, generator by trace ideal.

    Finite-dimensional convention over a field: flat = projective, and
    faithfully flat = projective generator.
    """
    A = m.base
    F = A.field
    db = find_dual_basis(m)
    projective = db is not None
    _, functionals = left_dual(m)
    trace_rows = []
    for f in functionals:
        for j in range(m.dim):
            v = f.col(j)
            if any(v):
                trace_rows.append(v)
    if trace_rows:
        span = Mat(F, len(trace_rows), A.dim, tuple(x for r in trace_rows for x in r))
        # saturate to the two-sided ideal generated by the trace values
        while True:
            extra = []
            sp = row_space(span)
            for i in range(sp.rows):
                v = sp.row(i)
                for t in range(A.dim):
                    for w in (A.left_mats[t].apply(v), A.right_mats[t].apply(v)):
                        if coords_in_rowspace(sp, w) is None:
                            extra.append(w)
            if not extra:
                span = sp
                break
            span = vstack([sp, Mat(F, len(extra), A.dim, tuple(x for r in extra for x in r))])
        generator = rank(span) == A.dim
    else:
        generator = False
    ff = projective and generator
    return ModulePredicates(projective, generator, ff, projective and generator)
