"""Classical and graded Morita contexts, comparison isomorphisms and the
battery of equivalent Galois characterizations."""

import pytest

from corings.algebra import field_algebra
from corings.dualring import dual_ring, validate_graded_algebra
from corings.fixtures import fixture
from corings.galois import coinvariant_ring, galois_decomposition
from corings.linalg import Mat, rank, row_space, tensor_vec
from corings.morita import (
    MoritaContext,
    RingBimodule,
    canonical_graded_module,
    check_canonical_graded_action,
    check_group_ring_context_match,
    check_shift_fixed_points,
    check_standard_context_match,
    coefficient_ring,
    connecting_space,
    context_from_graded_module,
    galois_equivalence_battery,
    graded_end,
    graded_hom,
    graded_morita_context,
    group_ring_context,
    grouplike_character,
    is_strict,
    morita_context,
    slice_context,
    validate_graded_morita_context,
    validate_morita_context,
    weak_coinvariant_ring,
    HypothesisFailed,
    _ring_as_module,
)
from corings.scalars import QQ


def witness_of(name):
    fx = fixture(name)
    return fx.witness if fx.witness is not None else galois_decomposition(fx.grouplike)[0]


# -- grouplike character -----------------------------------------------------------

def test_character_laws_hold_on_all_fixtures():
    for name in ("trivial", "regular", "nongalois", "sweedler"):
        fx = fixture(name)
        r = dual_ring(fx.coring)
        chi, rep = grouplike_character(fx.grouplike, r)
        assert rep.ok, name


def test_character_of_trivial_coring_sums_evaluations():
    fx = fixture("trivial")
    r = dual_ring(fx.coring)
    chi, _ = grouplike_character(fx.grouplike, r)
    # every degree contributes the evaluation at 1
    assert chi == Mat.from_rows(QQ, [[1, 1]])


def test_character_unit_value():
    fx = fixture("regular")
    r = dual_ring(fx.coring)
    chi, _ = grouplike_character(fx.grouplike, r)
    packed = r.packed()
    unit_packed = packed.inject(0, r.unit_vec)
    assert chi.apply(unit_packed) == fx.coring.base.unit


# -- the coinvariant/connecting solution spaces ---------------------------------------

def test_strict_and_weak_spaces_agree():
    for name in ("trivial", "regular", "nongalois", "sweedler"):
        fx = fixture(name)
        r = dual_ring(fx.coring)
        t = coinvariant_ring(fx.grouplike)
        assert row_space(t.basis) == row_space(weak_coinvariant_ring(fx.grouplike, r)), name
        o1 = connecting_space(fx.grouplike, r, weak=False)
        o2 = connecting_space(fx.grouplike, r, weak=True)
        assert row_space(o1) == row_space(o2), name


def test_connecting_space_dimensions():
    # hand count on the regular fixture: the slice space has dimension two
    # and the family space matches it through the shifts
    fx = fixture("regular")
    r = dual_ring(fx.coring)
    assert connecting_space(fx.grouplike, r).rows == 2
    ctx_e, w_e, _ = slice_context(fx.grouplike)
    assert w_e.rows == 2


def test_classical_context_validates_but_is_not_strict():
    # the two connecting images cannot fill the packed dual ring once the
    # group has more than one element: the second map lands in a subspace of
    # dimension at most dim(connecting) * dim(base)
    for name, tau_surj in (("trivial", True), ("regular", True), ("nongalois", True)):
        fx = fixture(name)
        r = dual_ring(fx.coring)
        ctx, w, brep = morita_context(fx.grouplike, r)
        assert brep.ok, name
        assert validate_morita_context(ctx).ok, name
        verdict, rep = is_strict(ctx)
        assert not verdict, name
        mu_rank = rank(ctx.mu)
        assert mu_rank <= ctx.q.dim * ctx.p.dim < ctx.ring2.dim, name
        tau_item = next(it for it in rep.items if it.check_id == "strict.tau-surjective")
        assert f"value={tau_surj}" in tau_item.witness, name


def test_slice_context_is_strict_on_galois_fixtures():
    for name in ("trivial", "regular", "sweedler"):
        ctx_e, _, _ = slice_context(fixture(name).grouplike)
        assert validate_morita_context(ctx_e).ok, name
        verdict, _ = is_strict(ctx_e)
        assert verdict, name


def test_slice_context_not_strict_on_nongalois():
    ctx_e, _, _ = slice_context(fixture("nongalois").grouplike)
    verdict, _ = is_strict(ctx_e)
    assert not verdict


# -- coefficient rings -------------------------------------------------------------------

def test_coefficient_ring_fixed_points_and_agreement():
    for name in ("trivial", "regular", "nongalois", "sweedler"):
        fx = fixture(name)
        r = dual_ring(fx.coring)
        t = coinvariant_ring(fx.grouplike)
        s = coefficient_ring(fx.grouplike, r, t, weak=False)
        s_w = coefficient_ring(fx.grouplike, r, t, weak=True)
        assert row_space(s.basis) == row_space(s_w.basis), name
        assert check_shift_fixed_points(s, t).ok, name
        assert validate_graded_algebra(s.twisted).ok, name


def test_trivial_coefficient_ring_is_constant_families():
    fx = fixture("trivial")
    r = dual_ring(fx.coring)
    t = coinvariant_ring(fx.grouplike)
    s = coefficient_ring(fx.grouplike, r, t)
    assert s.algebra.dim == 1
    assert row_space(s.basis) == row_space(Mat.from_rows(QQ, [[1, 1]]))


def test_diagonal_map_is_iso_on_cofree_fixtures():
    for name in ("trivial", "regular", "sweedler"):
        fx = fixture(name)
        r = dual_ring(fx.coring)
        t = coinvariant_ring(fx.grouplike)
        s = coefficient_ring(fx.grouplike, r, t)
        assert s.diag.rows == s.diag.cols and rank(s.diag) == s.diag.cols, name


# -- graded contexts -----------------------------------------------------------------------

def test_graded_context_strictness_matches_galois():
    expected = {"trivial": True, "regular": True, "nongalois": False, "sweedler": True}
    for name, value in expected.items():
        fx = fixture(name)
        r = dual_ring(fx.coring)
        gctx, s, wq, brep = graded_morita_context(fx.grouplike, r)
        assert brep.ok, name
        assert validate_graded_morita_context(gctx).ok, name
        verdict, _ = is_strict(gctx.ctx)
        assert verdict == value, name


def test_weak_graded_context_equals_strict_one():
    fx = fixture("regular")
    r = dual_ring(fx.coring)
    g1, _, w1, _ = graded_morita_context(fx.grouplike, r, weak=False)
    g2, _, w2, _ = graded_morita_context(fx.grouplike, r, weak=True)
    assert w1 == w2
    assert g1.ctx.tau == g2.ctx.tau and g1.ctx.mu == g2.ctx.mu


def test_canonical_graded_module_action_formula():
    for name in ("trivial", "regular", "nongalois"):
        fx = fixture(name)
        r = dual_ring(fx.coring)
        agm = canonical_graded_module(fx.grouplike, r)
        assert check_canonical_graded_action(agm, fx.grouplike, r).ok, name


def test_identity_functional_fixes_canonical_module():
    fx = fixture("regular")
    r = dual_ring(fx.coring)
    agm = canonical_graded_module(fx.grouplike, r)
    g = fx.coring.group
    for a in g.elements():
        act = agm.act[(a, g.identity)]
        for i in range(fx.coring.base.dim):
            vec = act.apply(tensor_vec(QQ, tuple(
                QQ.one if k == i else QQ.zero for k in range(fx.coring.base.dim)), r.unit_vec))
            assert vec == tuple(QQ.one if k == i else QQ.zero
                                for k in range(fx.coring.base.dim))


# -- graded hom / end --------------------------------------------------------------------

def test_end_of_ring_over_itself_has_component_dims():
    fx = fixture("regular")
    r = dual_ring(fx.coring)
    rm = _ring_as_module(r)
    end = graded_end(rm)
    # degree-e endomorphisms of the ring over itself = left multiplications
    assert len(end.bases[0]) == r.dim(0)
    assert validate_graded_algebra(end.graded).ok


def test_hom_into_zero_module_is_zero():
    from corings.algebra import Bimodule
    from corings.dualring import GradedModule

    fx = fixture("regular")
    r = dual_ring(fx.coring)
    g = fx.coring.group
    zero = Bimodule(fx.coring.base, 0, None, (Mat.zeros(QQ, 0, 0),) * 2)
    comps = tuple(zero for _ in g.elements())
    act = {(a, b): Mat.zeros(QQ, 0, 0 * r.dim(b)) for a in g.elements() for b in g.elements()}
    zmod = GradedModule(r, comps, act)
    rm = _ring_as_module(r)
    for sigma in g.elements():
        assert graded_hom(rm, zmod, sigma) == []


def test_standard_context_of_ring_is_strict():
    fx = fixture("trivial")
    r = dual_ring(fx.coring)
    std, end, homs = context_from_graded_module(_ring_as_module(r))
    assert validate_graded_morita_context(std).ok
    verdict, _ = is_strict(std.ctx)
    assert verdict


def test_standard_context_matches_weak_graded_context():
    for name in ("trivial", "regular", "sweedler"):
        fx = fixture(name)
        r = dual_ring(fx.coring)
        assert check_standard_context_match(fx.grouplike, r).ok, name


# -- group-ring contexts ---------------------------------------------------------------------

def test_group_ring_extension_of_standard_context_is_strict():
    # the context of the base field over itself, extended over the group
    b = field_algebra(QQ)
    one = Mat.identity(QQ, 1)
    p = RingBimodule(b, b, 1, (one,), (one,))
    ctx = MoritaContext(b, b, p, p, one, one)
    assert validate_morita_context(ctx).ok
    from corings.groups import FiniteGroup

    gctx = group_ring_context(ctx, FiniteGroup.cyclic(2))
    assert validate_graded_morita_context(gctx).ok
    verdict, _ = is_strict(gctx.ctx)
    assert verdict


def test_zero_context_extends_to_zero_context():
    b = field_algebra(QQ)
    p = RingBimodule(b, b, 0, (Mat.zeros(QQ, 0, 0),), (Mat.zeros(QQ, 0, 0),))
    ctx = MoritaContext(b, b, p, p, Mat.zeros(QQ, 1, 0), Mat.zeros(QQ, 1, 0))
    from corings.groups import FiniteGroup

    gctx = group_ring_context(ctx, FiniteGroup.cyclic(2))
    assert gctx.ctx.p.dim == 0 and gctx.ctx.q.dim == 0


def test_graded_context_matches_group_ring_context_on_cofree_fixtures():
    for name in ("trivial", "regular", "sweedler"):
        fx = fixture(name)
        r = dual_ring(fx.coring)
        wit = witness_of(name)
        assert check_group_ring_context_match(fx.grouplike, r, wit).ok, name


# -- the equivalence battery -------------------------------------------------------------------

def test_battery_agreement_on_fixtures():
    expected = {"trivial": "(True, True, True, True)",
                "regular": "(True, True, True, True)",
                "nongalois": "(False, False, False, False)"}
    for name, want in expected.items():
        fx = fixture(name)
        rep = galois_equivalence_battery(fx.grouplike, fx.base)
        agree = next(it for it in rep.items if it.check_id == "battery.agreement")
        assert agree.passed and want in agree.witness, name


def test_battery_hypothesis_check():
    # a coring with a non-projective component must be rejected; build one
    # by hand over the two-dimensional nilpotent algebra
    from corings.algebra import Algebra, Bimodule
    from corings.coring import GroupCoring
    from corings.galois import GrouplikeFamily, RingMorphism
    from corings.groups import TRIVIAL_GROUP

    kx = Algebra.from_tables(QQ, [[[1, 0], [0, 1]], [[0, 1], [0, 0]]], [1, 0])
    # the rank-one module with the nilpotent acting by zero on both sides
    comp = Bimodule(kx, 1, (Mat.identity(QQ, 1), Mat.zeros(QQ, 1, 1)),
                    (Mat.identity(QQ, 1), Mat.zeros(QQ, 1, 1)))
    cor = GroupCoring(TRIVIAL_GROUP, kx, (comp,), {}, Mat.from_cols(QQ, [kx.unit]))
    t = cor.tensor(0, 0)
    cor.delta[(0, 0)] = Mat.from_cols(QQ, [t.pure((QQ.one,), (QQ.one,))])
    x = GrouplikeFamily(cor, ((QQ.one,),))
    b = RingMorphism(kx, kx, Mat.identity(QQ, 2))
    with pytest.raises(HypothesisFailed):
        galois_equivalence_battery(x, b)
