"""Group-indexed corings over an algebra: axioms, morphisms, cofree
construction and the packed (graded) form for finite index groups.

A coring here is a family of bimodules C_a, one per group element, with
comultiplications Delta[a,b]: C_{ab} -> C_a (x)_A C_b landing in the
computed tensor quotients, and a counit C_e -> A.  All structure maps are
stored as matrices in the deterministic quotient bases, so the axioms are
literal matrix identities.
"""

from __future__ import annotations

from corings.algebra import (
    Algebra,
    Bimodule,
    BimoduleMap,
    TensorProduct,
    contract_left,
    contract_right,
    is_bimodule_iso,
    tensor_over_algebra,
    validate_bimodule,
    validate_bimodule_map,
)
from corings.groups import TRIVIAL_GROUP, FiniteGroup
from corings.linalg import Mat, QuotientSpace, inverse, tensor_k, triple_balanced_quotient
from corings.report import CheckReport


class MissingCofreeWitness(ValueError):
    """Raised when an operation needs a cofree structure that was not given."""


class GroupCoring:
    """Family (C_a) with comultiplications into tensor quotients and counit."""

    def __init__(self, group: FiniteGroup, base: Algebra, comps, delta, counit: Mat):
        self.group = group
        self.base = base
        self.comps = tuple(comps)
        self.delta = dict(delta)   # (a, b) -> Mat: C_{ab} -> tensor(a,b).space.dim
        self.counit = counit       # base.dim x C_e.dim
        self._tensors: dict = {}
        self._triples: dict = {}

    # -- cached tensor quotients -------------------------------------------

    def tensor(self, a: int, b: int) -> TensorProduct:
        key = (a, b)
        if key not in self._tensors:
            self._tensors[key] = tensor_over_algebra(self.comps[a], self.comps[b])
        return self._tensors[key]

    def triple(self, a: int, b: int, c: int) -> QuotientSpace:
        key = (a, b, c)
        if key not in self._triples:
            ca, cb, cc = self.comps[a], self.comps[b], self.comps[c]
            self._triples[key] = triple_balanced_quotient(
                self.base.field, ca.dim, cb.dim, cc.dim,
                (ca.right, cb.left), (cb.right, cc.left),
            )
        return self._triples[key]

    # -- composite comultiplications -----------------------------------------

    def delta_left_lift(self, a: int, b: int) -> Mat:
        """C_{ab} -> C_a (x)_k C_b through the chosen section."""
        return self.tensor(a, b).space.sect @ self.delta[(a, b)]

    def double_delta(self, a: int, b: int, c: int) -> tuple[Mat, Mat]:
        """Both sides of coassociativity as maps C_{abc} -> triple quotient."""
        g = self.group
        ab = g.mul(a, b)
        bc = g.mul(b, c)
        tq3 = self.triple(a, b, c)
        idc = Mat.identity(self.base.field, self.comps[c].dim)
        ida = Mat.identity(self.base.field, self.comps[a].dim)
        lhs = tq3.proj @ tensor_k(self.delta_left_lift(a, b), idc) @ self.delta_left_lift(ab, c)
        rhs = tq3.proj @ tensor_k(ida, self.delta_left_lift(b, c)) @ self.delta_left_lift(a, bc)
        return lhs, rhs

    def e_slice(self) -> "GroupCoring":
        """The degree-e part as a coring over the trivial group."""
        e = self.group.identity
        return GroupCoring(
            TRIVIAL_GROUP, self.base, (self.comps[e],),
            {(0, 0): self.delta[(e, e)]}, self.counit,
        )


def validate_group_coring(c: GroupCoring, suite: str = "coring",
                          check_components: bool = True) -> CheckReport:
    rep = CheckReport(suite)
    g = c.group
    e = g.identity
    if check_components:
        for a in g.elements():
            rep.extend(validate_bimodule(c.comps[a]), prefix=f"comp[{a}].")
        for (a, b), mat in sorted(c.delta.items()):
            f = BimoduleMap(c.comps[g.mul(a, b)], c.tensor(a, b).module, mat)
            rep.extend(validate_bimodule_map(f), prefix=f"delta[{a},{b}].")
        eps = BimoduleMap(c.comps[e], Bimodule.regular(c.base), c.counit)
        rep.extend(validate_bimodule_map(eps), prefix="counit.")
    bad = []
    for a in g.elements():
        for b in g.elements():
            for d in g.elements():
                lhs, rhs = c.double_delta(a, b, d)
                if lhs != rhs:
                    bad.append((a, b, d))
    rep.add("coring.coassociativity", "comultiplication coassociativity",
            not bad, f"failing triples: {bad}" if bad else "")
    bad = []
    for a in g.elements():
        comp = c.comps[a]
        ident = Mat.identity(c.base.field, comp.dim)
        # (C_a (x) counit) o Delta_{a,e} = id
        right_side = contract_right(comp, c.comps[e].dim, c.counit) @ c.delta_left_lift(a, e)
        # (counit (x) C_a) o Delta_{e,a} = id
        left_side = contract_left(comp, c.comps[e].dim, c.counit) @ c.delta_left_lift(e, a)
        if right_side != ident or left_side != ident:
            bad.append(a)
    rep.add("coring.counit", "counit laws on every component",
            not bad, f"failing indices: {bad}" if bad else "")
    return rep


# -- morphisms -------------------------------------------------------------------

class GroupCoringMorphism:
    def __init__(self, src: GroupCoring, dst: GroupCoring, maps):
        self.src = src
        self.dst = dst
        self.maps = tuple(maps)  # per group element: Mat dst.comps[a].dim x src.comps[a].dim


def validate_coring_morphism(f: GroupCoringMorphism, suite: str = "coring-morphism") -> CheckReport:
    rep = CheckReport(suite)
    g = f.src.group
    for a in g.elements():
        bm = BimoduleMap(f.src.comps[a], f.dst.comps[a], f.maps[a])
        rep.extend(validate_bimodule_map(bm), prefix=f"component[{a}].")
    bad = []
    for a in g.elements():
        for b in g.elements():
            ab = g.mul(a, b)
            src_t = f.src.tensor(a, b)
            dst_t = f.dst.tensor(a, b)
            lhs = dst_t.space.proj @ tensor_k(f.maps[a], f.maps[b]) @ src_t.space.sect @ f.src.delta[(a, b)]
            rhs = f.dst.delta[(a, b)] @ f.maps[ab]
            if lhs != rhs:
                bad.append((a, b))
    rep.add("morphism.comultiplicative", "compatibility with comultiplication",
            not bad, f"failing pairs: {bad}" if bad else "")
    e = g.identity
    rep.add("morphism.counit", "compatibility with the counit",
            f.dst.counit @ f.maps[e] == f.src.counit)
    return rep


def is_coring_iso(f: GroupCoringMorphism) -> bool:
    return all(
        is_bimodule_iso(BimoduleMap(f.src.comps[a], f.dst.comps[a], f.maps[a]))
        for a in f.src.group.elements()
    )


# -- cofree corings -----------------------------------------------------------------

class CofreeWitness:
    """Isomorphisms gamma_a: C_e -> C_a compatible with comultiplication."""

    def __init__(self, coring: GroupCoring, gammas):
        self.coring = coring
        self.gammas = tuple(gammas)

    def gamma_inv(self, a: int) -> Mat:
        return inverse(self.gammas[a])


def cofree_coring(c_e: GroupCoring, group: FiniteGroup) -> tuple[GroupCoring, CofreeWitness]:
    """The coring with every component a tagged copy of the given
    one-component coring, comultiplications transported along the tags."""
    if c_e.group.order != 1:
        raise ValueError("cofree construction starts from a one-component coring")
    comp = c_e.comps[0]
    delta_ee = c_e.delta[(0, 0)]
    comps = tuple(comp for _ in group.elements())
    delta = {(a, b): delta_ee for a in group.elements() for b in group.elements()}
    cor = GroupCoring(group, c_e.base, comps, delta, c_e.counit)
    ident = Mat.identity(c_e.base.field, comp.dim)
    wit = CofreeWitness(cor, tuple(ident for _ in group.elements()))
    return cor, wit


def verify_cofree(c: GroupCoring, w: CofreeWitness, suite: str = "cofree") -> CheckReport:
    rep = CheckReport(suite)
    g = c.group
    e = g.identity
    bad_iso = []
    for a in g.elements():
        f = BimoduleMap(c.comps[e], c.comps[a], w.gammas[a])
        if not validate_bimodule_map(f).ok or not is_bimodule_iso(f):
            bad_iso.append(a)
    rep.add("cofree.iso", "each connecting map is a bimodule isomorphism",
            not bad_iso, f"failing indices: {bad_iso}" if bad_iso else "")
    rep.add("cofree.identity-tag", "the identity-degree connecting map is the identity",
            w.gammas[e] == Mat.identity(c.base.field, c.comps[e].dim))
    bad = []
    for a in g.elements():
        for b in g.elements():
            ab = g.mul(a, b)
            t = c.tensor(a, b)
            te = c.tensor(e, e)
            lhs = c.delta[(a, b)] @ w.gammas[ab]
            rhs = t.space.proj @ tensor_k(w.gammas[a], w.gammas[b]) @ te.space.sect @ c.delta[(e, e)]
            if lhs != rhs:
                bad.append((a, b))
    rep.add("cofree.compatible", "connecting maps intertwine comultiplication",
            not bad, f"failing pairs: {bad}" if bad else "")
    return rep


def check_cofree_counit_identities(c: GroupCoring, w: CofreeWitness,
                                   suite: str = "cofree-counit") -> CheckReport:
    """The two derived identities mixing counit and connecting maps:
    contracting the first leg of Delta_{a,b} with counit o gamma_a^{-1}
    recovers gamma_b o gamma_{ab}^{-1}, and symmetrically on the second leg."""
    rep = CheckReport(suite)
    g = c.group
    bad1, bad2 = [], []
    for a in g.elements():
        for b in g.elements():
            ab = g.mul(a, b)
            lift = c.delta_left_lift(a, b)
            t_a = c.counit @ w.gamma_inv(a)
            t_b = c.counit @ w.gamma_inv(b)
            lhs1 = contract_left(c.comps[b], c.comps[a].dim, t_a) @ lift
            rhs1 = w.gammas[b] @ w.gamma_inv(ab)
            if lhs1 != rhs1:
                bad1.append((a, b))
            lhs2 = contract_right(c.comps[a], c.comps[b].dim, t_b) @ lift
            rhs2 = w.gammas[a] @ w.gamma_inv(ab)
            if lhs2 != rhs2:
                bad2.append((a, b))
    rep.add("cofree.counit-first-leg", "counit contraction of the first leg",
            not bad1, f"failing pairs: {bad1}" if bad1 else "")
    rep.add("cofree.counit-second-leg", "counit contraction of the second leg",
            not bad2, f"failing pairs: {bad2}" if bad2 else "")
    return rep


# -- trivial coring ------------------------------------------------------------------

def trivial_coring(a: Algebra, group: FiniteGroup) -> tuple[GroupCoring, CofreeWitness]:
    """Every component the regular bimodule, comultiplication a -> a (x) 1."""
    reg = Bimodule.regular(a)
    one_comp = GroupCoring(TRIVIAL_GROUP, a, (reg,), {}, Mat.identity(a.field, a.dim))
    t = one_comp.tensor(0, 0)
    cols = [t.pure(a.basis_vec(i), a.unit) for i in range(a.dim)]
    one_comp.delta[(0, 0)] = Mat.from_cols(a.field, cols)
    return cofree_coring(one_comp, group)


# -- packed (graded) form --------------------------------------------------------------

class GradedCoring:
    """A single coring whose underlying bimodule carries a group grading."""

    def __init__(self, group: FiniteGroup, base: Algebra, total: Bimodule,
                 dims, delta: Mat, counit: Mat):
        self.group = group
        self.base = base
        self.total = total
        self.dims = tuple(dims)
        self.offsets = tuple(sum(dims[:i]) for i in range(len(dims)))
        self.delta = delta
        self.counit = counit
        self._tensor = None

    def tensor(self) -> TensorProduct:
        if self._tensor is None:
            self._tensor = tensor_over_algebra(self.total, self.total)
        return self._tensor

    def as_group_coring(self) -> GroupCoring:
        return GroupCoring(TRIVIAL_GROUP, self.base, (self.total,),
                           {(0, 0): self.delta}, self.counit)

    def block_injection(self, a: int) -> Mat:
        F = self.base.field
        rows = []
        for i in range(self.total.dim):
            row = [F.zero] * self.dims[a]
            if self.offsets[a] <= i < self.offsets[a] + self.dims[a]:
                row[i - self.offsets[a]] = F.one
            rows.append(row)
        return Mat.from_rows(F, rows)

    def block_projection(self, a: int) -> Mat:
        return self.block_injection(a).transpose()


def direct_sum_bimodule(comps) -> tuple[Bimodule, list, list]:
    """Block direct sum of bimodules over a common base; returns the sum
    plus the per-block injection and projection matrices."""
    base = comps[0].base
    F = base.field
    dims = [m.dim for m in comps]
    total = sum(dims)
    offsets = [sum(dims[:i]) for i in range(len(dims))]
    injections = []
    projections = []
    for k, m in enumerate(comps):
        rows = []
        for i in range(total):
            row = [F.zero] * m.dim
            if offsets[k] <= i < offsets[k] + m.dim:
                row[i - offsets[k]] = F.one
            rows.append(row)
        inj = Mat.from_rows(F, rows)
        injections.append(inj)
        projections.append(inj.transpose())
    left = None
    if all(m.left is not None for m in comps):
        left = tuple(
            sum((injections[k] @ comps[k].left[t] @ projections[k] for k in range(len(comps))),
                Mat.zeros(F, total, total))
            for t in range(base.dim)
        )
    right = None
    if all(m.right is not None for m in comps):
        right = tuple(
            sum((injections[k] @ comps[k].right[t] @ projections[k] for k in range(len(comps))),
                Mat.zeros(F, total, total))
            for t in range(base.dim)
        )
    return Bimodule(base, total, left, right), injections, projections


def pack_graded_coring(c: GroupCoring) -> GradedCoring:
    """Assemble the block-diagonal coring with counit supported on degree e."""
    g = c.group
    F = c.base.field
    total, inj, proj = direct_sum_bimodule(c.comps)
    packed = GradedCoring(g, c.base, total, [m.dim for m in c.comps],
                          Mat.zeros(F, 1, 1), Mat.zeros(F, 1, 1))
    t_tot = packed.tensor()
    delta = Mat.zeros(F, t_tot.space.dim, total.dim)
    for a in g.elements():
        for b in g.elements():
            ab = g.mul(a, b)
            t_ab = c.tensor(a, b)
            incl = t_tot.space.proj @ tensor_k(inj[a], inj[b]) @ t_ab.space.sect
            delta = delta + incl @ c.delta[(a, b)] @ proj[ab]
    packed.delta = delta
    packed.counit = c.counit @ proj[g.identity]
    return packed


def unpack_graded_coring(p: GradedCoring) -> GroupCoring:
    """Slice a graded coring back into its group-indexed family."""
    g = p.group
    F = p.base.field
    comps = []
    for a in g.elements():
        inj = p.block_injection(a)
        proj = p.block_projection(a)
        left = tuple(proj @ L @ inj for L in p.total.left)
        right = tuple(proj @ R @ inj for R in p.total.right)
        comps.append(Bimodule(p.base, p.dims[a], left, right))
    cor = GroupCoring(g, p.base, comps, {}, p.counit @ p.block_injection(g.identity))
    t_tot = p.tensor()
    for a in g.elements():
        for b in g.elements():
            ab = g.mul(a, b)
            t_ab = cor.tensor(a, b)
            extract = t_ab.space.proj @ tensor_k(p.block_projection(a), p.block_projection(b)) @ t_tot.space.sect
            cor.delta[(a, b)] = extract @ p.delta @ p.block_injection(ab)
    return cor


def group_corings_equal(c1: GroupCoring, c2: GroupCoring) -> bool:
    """Structural equality: same dims, same structure matrices per index."""
    g = c1.group
    if g.order != c2.group.order or g.table != c2.group.table:
        return False
    for a in g.elements():
        if c1.comps[a].dim != c2.comps[a].dim:
            return False
        if c1.comps[a].left != c2.comps[a].left or c1.comps[a].right != c2.comps[a].right:
            return False
    if c1.counit != c2.counit:
        return False
    for key in c1.delta:
        if c1.delta[key] != c2.delta[key]:
            return False
    return True
