"""The two comodule categories over a group coring and the functors
between them.

A plain comodule is one module with a coaction per group element; a
group-indexed comodule is a family of modules with a coaction per pair.
Packing a family into its direct sum and replicating a single comodule
into tagged copies form an adjoint pair, and for finite index groups a
Frobenius pair; both facts are verified on solved hom-space bases.  For
cofree corings the family category collapses onto comodules over the
degree-e slice, with explicit mutually inverse comparison maps.
"""

from __future__ import annotations

from corings.algebra import (
    Bimodule,
    TensorProduct,
    contract_right,
    tensor_over_algebra,
)
from corings.coring import (
    CofreeWitness,
    GroupCoring,
    MissingCofreeWitness,
    direct_sum_bimodule,
)
from corings.linalg import (
    Mat,
    QuotientSpace,
    hstack,
    kernel,
    sandwich_operator,
    tensor_k,
    tensor_slice_operator,
    triple_balanced_quotient,
    vstack,
)
from corings.report import CheckReport


class Comodule:
    """Right module with one coaction M -> M (x)_A C_a per group element."""

    def __init__(self, coring: GroupCoring, space: Bimodule, rho):
        self.coring = coring
        self.space = space
        self.rho = tuple(rho)
        self._tensors: dict = {}
        self._triples: dict = {}

    def tensor(self, a: int) -> TensorProduct:
        if a not in self._tensors:
            self._tensors[a] = tensor_over_algebra(self.space, self.coring.comps[a])
        return self._tensors[a]

    def triple(self, a: int, b: int) -> QuotientSpace:
        key = (a, b)
        if key not in self._triples:
            ca, cb = self.coring.comps[a], self.coring.comps[b]
            self._triples[key] = triple_balanced_quotient(
                self.coring.base.field, self.space.dim, ca.dim, cb.dim,
                (self.space.right, ca.left), (ca.right, cb.left),
            )
        return self._triples[key]


class GComodule:
    """Family of right modules with one coaction M_{ab} -> M_a (x)_A C_b per pair."""

    def __init__(self, coring: GroupCoring, comps, rho):
        self.coring = coring
        self.comps = tuple(comps)
        self.rho = dict(rho)
        self._tensors: dict = {}
        self._triples: dict = {}

    def tensor(self, a: int, b: int) -> TensorProduct:
        key = (a, b)
        if key not in self._tensors:
            self._tensors[key] = tensor_over_algebra(self.comps[a], self.coring.comps[b])
        return self._tensors[key]

    def triple(self, a: int, b: int, c: int) -> QuotientSpace:
        key = (a, b, c)
        if key not in self._triples:
            cb, cc = self.coring.comps[b], self.coring.comps[c]
            m = self.comps[a]
            self._triples[key] = triple_balanced_quotient(
                self.coring.base.field, m.dim, cb.dim, cc.dim,
                (m.right, cb.left), (cb.right, cc.left),
            )
        return self._triples[key]


# -- validators ---------------------------------------------------------------------

def validate_comodule(m: Comodule, suite: str = "comodule") -> CheckReport:
    rep = CheckReport(suite)
    c = m.coring
    g = c.group
    F = c.base.field
    bad_lin = []
    for a in g.elements():
        t = m.tensor(a)
        for j in range(c.base.dim):
            lhs = m.rho[a] @ m.space.right[j]
            rhs = t.module.right[j] @ m.rho[a]
            if lhs != rhs:
                bad_lin.append((a, j))
    rep.add("comodule.right-linear", "coactions are right-linear",
            not bad_lin, f"failing (degree, basis): {bad_lin}" if bad_lin else "")
    bad = []
    for a in g.elements():
        for b in g.elements():
            ab = g.mul(a, b)
            tq3 = m.triple(a, b)
            idm = Mat.identity(F, m.space.dim)
            idc = Mat.identity(F, c.comps[b].dim)
            lhs = tq3.proj @ tensor_k(idm, c.delta_left_lift(a, b)) @ m.tensor(ab).space.sect @ m.rho[ab]
            rhs = tq3.proj @ tensor_k(m.tensor(a).space.sect @ m.rho[a], idc) \
                @ m.tensor(b).space.sect @ m.rho[b]
            if lhs != rhs:
                bad.append((a, b))
    rep.add("comodule.coassociativity", "coaction coassociativity",
            not bad, f"failing pairs: {bad}" if bad else "")
    e = g.identity
    counit_side = contract_right(m.space, c.comps[e].dim, c.counit) \
        @ m.tensor(e).space.sect @ m.rho[e]
    rep.add("comodule.counit", "counit law",
            counit_side == Mat.identity(F, m.space.dim))
    return rep


def validate_g_comodule(m: GComodule, suite: str = "g-comodule") -> CheckReport:
    rep = CheckReport(suite)
    c = m.coring
    g = c.group
    F = c.base.field
    bad_lin = []
    for (a, b), mat in sorted(m.rho.items()):
        t = m.tensor(a, b)
        for j in range(c.base.dim):
            if mat @ m.comps[g.mul(a, b)].right[j] != t.module.right[j] @ mat:
                bad_lin.append((a, b, j))
    rep.add("g-comodule.right-linear", "coactions are right-linear",
            not bad_lin, f"failing (pair, basis): {bad_lin[:5]}" if bad_lin else "")
    bad = []
    for a in g.elements():
        for b in g.elements():
            for d in g.elements():
                ab = g.mul(a, b)
                bd = g.mul(b, d)
                tq3 = m.triple(a, b, d)
                idm = Mat.identity(F, m.comps[a].dim)
                idc = Mat.identity(F, c.comps[d].dim)
                lhs = tq3.proj @ tensor_k(idm, c.delta_left_lift(b, d)) \
                    @ m.tensor(a, bd).space.sect @ m.rho[(a, bd)]
                rhs = tq3.proj @ tensor_k(m.tensor(a, b).space.sect @ m.rho[(a, b)], idc) \
                    @ m.tensor(ab, d).space.sect @ m.rho[(ab, d)]
                if lhs != rhs:
                    bad.append((a, b, d))
    rep.add("g-comodule.coassociativity", "family coaction coassociativity",
            not bad, f"failing triples: {bad[:5]}" if bad else "")
    e = g.identity
    bad = []
    for a in g.elements():
        side = contract_right(m.comps[a], c.comps[e].dim, c.counit) \
            @ m.tensor(a, e).space.sect @ m.rho[(a, e)]
        if side != Mat.identity(F, m.comps[a].dim):
            bad.append(a)
    rep.add("g-comodule.counit", "counit law on every component",
            not bad, f"failing indices: {bad}" if bad else "")
    return rep


# -- canonical objects ----------------------------------------------------------------

def coring_as_gcomodule(c: GroupCoring) -> GComodule:
    """The coring over itself: components as right modules, coactions the
    comultiplications."""
    comps = tuple(m.with_trivial_left() for m in c.comps)
    gm = GComodule(c, comps, dict(c.delta))
    return gm


# -- the pack / replicate adjunction ---------------------------------------------------

def pack_gcomodule(m: GComodule) -> tuple[Comodule, list, list]:
    """Direct sum of the family with coactions shifted by the group action.

    Returns the comodule plus the block injection/projection matrices.
    """
    c = m.coring
    g = c.group
    F = c.base.field
    total, inj, proj = direct_sum_bimodule([mm.with_trivial_left() for mm in m.comps])
    packed = Comodule(c, total, [Mat.zeros(F, 1, 1)] * g.order)
    rho = []
    for a in g.elements():
        t_tot = packed.tensor(a)
        acc = Mat.zeros(F, t_tot.space.dim, total.dim)
        ainv = g.inv(a)
        idc = Mat.identity(F, c.comps[a].dim)
        for b in g.elements():
            src = g.mul(b, ainv)
            t_src = m.tensor(src, a)
            incl = t_tot.space.proj @ tensor_k(inj[src], idc) @ t_src.space.sect
            acc = acc + incl @ m.rho[(src, a)] @ proj[b]
        rho.append(acc)
    packed.rho = tuple(rho)
    return packed, inj, proj


def replicate_comodule(m: Comodule) -> GComodule:
    """Tagged copies of one comodule, coaction per pair read off degree two."""
    c = m.coring
    g = c.group
    comps = tuple(m.space for _ in g.elements())
    rho = {(a, b): m.rho[b] for a in g.elements() for b in g.elements()}
    return GComodule(c, comps, rho)


# -- hom-space solvers -------------------------------------------------------------------

def comodule_homs(m: Comodule, n: Comodule) -> list:
    """Basis of the space of comodule morphisms m -> n as matrices."""
    c = m.coring
    g = c.group
    F = c.base.field
    fn, fm = n.space.dim, m.space.dim
    rows = []
    idn = Mat.identity(F, fn)
    idm = Mat.identity(F, fm)
    for j in range(c.base.dim):
        op = sandwich_operator(idn, m.space.right[j], fn, fm) \
            - sandwich_operator(n.space.right[j], idm, fn, fm)
        rows.append(op)
    for a in g.elements():
        cdim = c.comps[a].dim
        lhs = tensor_slice_operator(n.tensor(a).space.proj,
                                    m.tensor(a).space.sect @ m.rho[a], cdim, fn, fm)
        rhs = sandwich_operator(n.rho[a], idm, fn, fm)
        rows.append(lhs - rhs)
    sys = vstack(rows)
    basis = kernel(sys)
    return [Mat(F, fn, fm, basis.row(i)) for i in range(basis.rows)]


def gcomodule_homs(m: GComodule, n: GComodule) -> list:
    """Basis of the morphism space m -> n; each element is a per-degree
    tuple of matrices, flattened over the block layout internally."""
    c = m.coring
    g = c.group
    F = c.base.field
    sizes = [(n.comps[a].dim, m.comps[a].dim) for a in g.elements()]
    offsets = []
    off = 0
    for fn, fm in sizes:
        offsets.append(off)
        off += fn * fm
    total = off

    def embed(op: Mat, a: int, out_rows: int) -> Mat:
        # place op's columns (acting on vec(F_a)) into the global unknown vector
        F_ = op.field
        cols = [[F_.zero] * out_rows for _ in range(total)]
        for local in range(op.cols):
            col = op.col(local)
            cols[offsets[a] + local][:] = list(col)
        return Mat.from_cols(F_, cols)

    rows = []
    for a in g.elements():
        fn, fm = sizes[a]
        idm = Mat.identity(F, fm)
        idn = Mat.identity(F, fn)
        for j in range(c.base.dim):
            op = sandwich_operator(idn, m.comps[a].right[j], fn, fm) \
                - sandwich_operator(n.comps[a].right[j], idm, fn, fm)
            rows.append(embed(op, a, op.rows))
    for a in g.elements():
        for b in g.elements():
            ab = g.mul(a, b)
            cdim = c.comps[b].dim
            fn_a, fm_a = sizes[a]
            fn_ab, fm_ab = sizes[ab]
            lhs = tensor_slice_operator(n.tensor(a, b).space.proj,
                                        m.tensor(a, b).space.sect @ m.rho[(a, b)],
                                        cdim, fn_a, fm_a)
            rhs = sandwich_operator(n.rho[(a, b)], Mat.identity(F, fm_ab), fn_ab, fm_ab)
            out_rows = lhs.rows
            rows.append(embed(lhs, a, out_rows) - embed(rhs, ab, out_rows))
    sys = vstack(rows)
    basis = kernel(sys)
    out = []
    for i in range(basis.rows):
        v = basis.row(i)
        fams = []
        for a in g.elements():
            fn, fm = sizes[a]
            fams.append(Mat(F, fn, fm, v[offsets[a]: offsets[a] + fn * fm]))
        out.append(tuple(fams))
    return out


def is_gcomodule_hom(m: GComodule, n: GComodule, fams) -> bool:
    c = m.coring
    g = c.group
    for a in g.elements():
        for j in range(c.base.dim):
            if fams[a] @ m.comps[a].right[j] != n.comps[a].right[j] @ fams[a]:
                return False
    for a in g.elements():
        for b in g.elements():
            ab = g.mul(a, b)
            cdim = c.comps[b].dim
            lhs = n.tensor(a, b).space.proj @ tensor_k(fams[a], Mat.identity(c.base.field, cdim)) \
                @ m.tensor(a, b).space.sect @ m.rho[(a, b)]
            if lhs != n.rho[(a, b)] @ fams[ab]:
                return False
    return True


# -- adjunction and Frobenius batteries ---------------------------------------------------

def check_pack_replicate_adjunction(pairs, suite: str = "adjunction") -> CheckReport:
    """For each (family, comodule) pair: the hom-space bijection in both
    directions plus the triangle identities of the adjunction."""
    rep = CheckReport(suite)
    for idx, (gm, n) in enumerate(pairs):
        c = gm.coring
        g = c.group
        F = c.base.field
        packed, inj, proj = pack_gcomodule(gm)
        h_packed = comodule_homs(packed, n)
        repl = replicate_comodule(n)
        h_family = gcomodule_homs(gm, repl)
        rep.add(f"adjunction[{idx}].dim", "hom spaces have equal dimension",
                len(h_packed) == len(h_family),
                f"{len(h_packed)} vs {len(h_family)}")

        def psi(f: Mat):
            return tuple(f @ inj[a] for a in g.elements())

        def phi(fams):
            acc = Mat.zeros(F, n.space.dim, packed.space.dim)
            for a in g.elements():
                acc = acc + fams[a] @ proj[a]
            return acc

        ok = all(phi(psi(f)) == f for f in h_packed)
        rep.add(f"adjunction[{idx}].retract", "hom transposition composes to the identity",
                ok)
        ok = all(tuple(psi(phi(fams))) == tuple(fams) for fams in h_family)
        rep.add(f"adjunction[{idx}].section", "reverse hom transposition composes to the identity",
                ok)
        ok = all(is_gcomodule_hom(gm, repl, psi(f)) for f in h_packed)
        rep.add(f"adjunction[{idx}].well-defined", "transposed maps are morphisms", ok)

        # triangle identities
        f1_eta = vstack([
            hstack([inj[a] if b == a else Mat.zeros(F, packed.space.dim, gm.comps[b].dim)
                    for b in g.elements()])
            for a in g.elements()
        ])
        eps_packed = hstack([Mat.identity(F, packed.space.dim) for _ in g.elements()])
        rep.add(f"adjunction[{idx}].triangle-left",
                "counit after packed unit is the identity",
                eps_packed @ f1_eta == Mat.identity(F, packed.space.dim))
        eta_repl_ok = True
        for b in g.elements():
            eta_b = vstack([Mat.identity(F, n.space.dim) if a == b else Mat.zeros(F, n.space.dim, n.space.dim)
                            for a in g.elements()])
            g1_eps_b = hstack([Mat.identity(F, n.space.dim) for _ in g.elements()])
            if g1_eps_b @ eta_b != Mat.identity(F, n.space.dim):
                eta_repl_ok = False
        rep.add(f"adjunction[{idx}].triangle-right",
                "replicated counit after unit is the identity", eta_repl_ok)
    return rep


def check_pack_replicate_frobenius(pairs, suite: str = "frobenius") -> CheckReport:
    """The second adjunction (replicate left adjoint of pack) on hom bases."""
    rep = CheckReport(suite)
    for idx, (gm, n) in enumerate(pairs):
        c = gm.coring
        g = c.group
        F = c.base.field
        packed, inj, proj = pack_gcomodule(gm)
        repl = replicate_comodule(n)
        h_rev_family = gcomodule_homs(repl, gm)   # replicate(N) -> family
        h_rev_packed = comodule_homs(n, packed)   # N -> packed

        rep.add(f"frobenius[{idx}].dim", "reverse hom spaces have equal dimension",
                len(h_rev_family) == len(h_rev_packed),
                f"{len(h_rev_family)} vs {len(h_rev_packed)}")

        def cap_phi(fams):
            return vstack([fams[a] for a in g.elements()])

        def cap_psi(f: Mat):
            return tuple(proj[a] @ f for a in g.elements())

        ok = all(tuple(cap_psi(cap_phi(fams))) == tuple(fams) for fams in h_rev_family)
        rep.add(f"frobenius[{idx}].retract", "hom transposition composes to the identity", ok)
        ok = all(cap_phi(cap_psi(f)) == f for f in h_rev_packed)
        rep.add(f"frobenius[{idx}].section", "reverse transposition composes to the identity", ok)
        ok = all(is_gcomodule_hom(repl, gm, cap_psi(f)) for f in h_rev_packed)
        rep.add(f"frobenius[{idx}].well-defined", "transposed maps are morphisms", ok)

        nu = vstack([Mat.identity(F, n.space.dim) for _ in g.elements()])
        zeta = tuple(proj[a] for a in g.elements())
        # pack(zeta) o nu_pack = id
        pack_zeta = hstack([
            vstack([zeta[b] if a == b else Mat.zeros(F, gm.comps[b].dim, packed.space.dim)
                    for b in g.elements()])
            for a in g.elements()
        ])
        nu_pack = vstack([Mat.identity(F, packed.space.dim) for _ in g.elements()])
        rep.add(f"frobenius[{idx}].triangle-left",
                "packed counit after unit is the identity",
                pack_zeta @ nu_pack == Mat.identity(F, packed.space.dim))
        tri_ok = True
        for b in g.elements():
            zeta_repl_b = hstack([
                Mat.identity(F, n.space.dim) if a == b else Mat.zeros(F, n.space.dim, n.space.dim)
                for a in g.elements()
            ])
            if zeta_repl_b @ nu != Mat.identity(F, n.space.dim):
                tri_ok = False
        rep.add(f"frobenius[{idx}].triangle-right",
                "replicated counit after unit is the identity", tri_ok)
    return rep


# -- the cofree equivalence -----------------------------------------------------------------

def cofree_extend(n: Comodule, c: GroupCoring, w: CofreeWitness) -> GComodule:
    """Extend a degree-e comodule to a family along a cofree witness."""
    if w is None:
        raise MissingCofreeWitness("extension needs a cofree witness")
    if n.coring.group.order != 1:
        raise ValueError("source must be a comodule over the degree-e slice")
    g = c.group
    F = c.base.field
    comps = tuple(n.space for _ in g.elements())
    out = GComodule(c, comps, {})
    e_t = n.tensor(0)
    rho = {}
    for a in g.elements():
        for b in g.elements():
            t = out.tensor(a, b)
            rho[(a, b)] = t.space.proj @ tensor_k(Mat.identity(F, n.space.dim), w.gammas[b]) \
                @ e_t.space.sect @ n.rho[0]
    out.rho = rho
    return out


def e_component(m: GComodule) -> Comodule:
    """The degree-e part as a comodule over the degree-e slice coring."""
    c = m.coring
    e = c.group.identity
    return Comodule(c.e_slice(), m.comps[e], (m.rho[(e, e)],))


def comodules_equal(m1: Comodule, m2: Comodule) -> bool:
    return (m1.space.dim == m2.space.dim
            and m1.space.right == m2.space.right
            and m1.rho == m2.rho)


def gcomodules_equal(m1: GComodule, m2: GComodule) -> bool:
    if len(m1.comps) != len(m2.comps):
        return False
    for a in range(len(m1.comps)):
        if m1.comps[a].dim != m2.comps[a].dim or m1.comps[a].right != m2.comps[a].right:
            return False
    return m1.rho == m2.rho


def check_cofree_equivalence(c: GroupCoring, w: CofreeWitness, objects,
                             suite: str = "cofree-equivalence") -> CheckReport:
    """Extend/restrict along the cofree witness and verify the comparison
    maps are mutually inverse morphisms on each supplied family."""
    rep = CheckReport(suite)
    g = c.group
    F = c.base.field
    for idx, gm in enumerate(objects):
        ncom = e_component(gm)
        back = cofree_extend(ncom, c, w)
        phis = []
        psis = []
        ok_inv = True
        for a in g.elements():
            t_a = gm.tensor(g.identity, a)
            func_a = c.counit @ w.gamma_inv(a)
            phi_a = contract_right(gm.comps[g.identity], c.comps[a].dim, func_a) \
                @ t_a.space.sect @ gm.rho[(g.identity, a)]
            ainv = g.inv(a)
            t_b = gm.tensor(a, ainv)
            func_b = c.counit @ w.gamma_inv(ainv)
            psi_a = contract_right(gm.comps[a], c.comps[ainv].dim, func_b) \
                @ t_b.space.sect @ gm.rho[(a, ainv)]
            phis.append(phi_a)
            psis.append(psi_a)
            if phi_a @ psi_a != Mat.identity(F, gm.comps[g.identity].dim):
                ok_inv = False
            if psi_a @ phi_a != Mat.identity(F, gm.comps[a].dim):
                ok_inv = False
        rep.add(f"cofree-equiv[{idx}].inverse", "comparison maps are mutually inverse", ok_inv)
        rep.add(f"cofree-equiv[{idx}].morphism",
                "comparison maps form a family morphism",
                is_gcomodule_hom(gm, back, tuple(phis)))
        rep.add(f"cofree-equiv[{idx}].restrict-extend",
                "restriction of the extension is the original comodule",
                comodules_equal(e_component(cofree_extend(ncom, c, w)), ncom))
    return rep
