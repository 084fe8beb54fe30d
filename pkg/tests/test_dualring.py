"""The dual graded ring, its functors and the cofree group-ring form."""

import random

from corings.algebra import field_algebra
from corings.comodules import (
    coring_as_gcomodule,
    gcomodules_equal,
    pack_gcomodule,
    replicate_comodule,
)
from corings.coring import GroupCoringMorphism, trivial_coring
from corings.dualring import (
    check_component_bidual,
    check_dual_basis_comultiplication,
    check_functor_square,
    cofree_dual_group_ring_iso,
    comodule_to_module,
    dual_morphism,
    dual_ring,
    forget_grading,
    gcomodule_to_graded,
    graded_to_gcomodule,
    group_ring,
    induce_grading,
    is_graded_ring_iso,
    rmodules_equal,
    validate_graded_algebra,
    validate_graded_ring,
    validate_graded_ring_morphism,
    validate_graded_module,
    validate_rmodule,
)
from corings.fixtures import fixture
from corings.galois import (
    canonical_morphism,
    coinvariant_ring,
    comodule_from_grouplike,
    galois_decomposition,
    inclusion_morphism,
    random_comodule,
)
from corings.groups import FiniteGroup
from corings.linalg import Mat
from corings.scalars import QQ


def witness_of(name):
    fx = fixture(name)
    return fx.witness if fx.witness is not None else galois_decomposition(fx.grouplike)[0]


def test_dual_of_trivial_coring_is_the_group_ring():
    c, _ = trivial_coring(field_algebra(QQ), FiniteGroup.cyclic(2))
    r = dual_ring(c)
    assert validate_graded_ring(r).ok
    gr = group_ring(field_algebra(QQ), c.group)
    packed = r.packed()
    assert packed.algebra.mul == gr.algebra.mul
    assert packed.algebra.unit == gr.algebra.unit
    assert validate_graded_algebra(packed).ok


def test_dual_dimensions_of_twisted_fixture():
    fx = fixture("regular")
    r = dual_ring(fx.coring)
    assert [r.dim(a) for a in fx.coring.group.elements()] == [4, 4]
    assert validate_graded_ring(r).ok


def test_dual_ring_valid_on_all_fixtures():
    for name in ("trivial", "regular", "nongalois", "sweedler"):
        fx = fixture(name)
        r = dual_ring(fx.coring)
        assert validate_graded_ring(r).ok, name
        assert check_component_bidual(fx.coring, r).ok, name
        assert check_dual_basis_comultiplication(fx.coring, r).ok, name


def test_dual_of_identity_morphism_is_identity():
    fx = fixture("regular")
    ident = GroupCoringMorphism(fx.coring, fx.coring,
                                [Mat.identity(QQ, m.dim) for m in fx.coring.comps])
    dm = dual_morphism(ident)
    assert validate_graded_ring_morphism(dm).ok
    for a in fx.coring.group.elements():
        assert dm.maps[a] == Mat.identity(QQ, dm.src.dim(a))


def test_dual_of_canonical_morphism_is_graded_iso_when_galois():
    fx = fixture("regular")
    t = coinvariant_ring(fx.grouplike)
    can = canonical_morphism(fx.grouplike, inclusion_morphism(t, fx.coring.base))
    dm = dual_morphism(can.morphism)
    assert validate_graded_ring_morphism(dm).ok
    assert is_graded_ring_iso(dm)


def test_dual_of_component_zeroed_morphism_fails_unit():
    fx = fixture("regular")
    maps = [Mat.identity(QQ, m.dim) for m in fx.coring.comps]
    maps[0] = Mat.zeros(QQ, maps[0].rows, maps[0].cols)
    bad = GroupCoringMorphism(fx.coring, fx.coring, maps)
    dm = dual_morphism(bad)
    rep = validate_graded_ring_morphism(dm)
    assert any(it.check_id == "morphism.unit" and not it.passed for it in rep.items)


def test_graded_module_roundtrips():
    for name in ("trivial", "regular", "sweedler"):
        fx = fixture(name)
        r = dual_ring(fx.coring)
        cg = coring_as_gcomodule(fx.coring)
        gm = gcomodule_to_graded(cg, r)
        assert validate_graded_module(gm).ok, name
        assert gcomodules_equal(graded_to_gcomodule(gm, fx.coring), cg), name
        acom = comodule_from_grouplike(fx.grouplike)
        repl = replicate_comodule(acom)
        gm2 = gcomodule_to_graded(repl, r)
        assert gcomodules_equal(graded_to_gcomodule(gm2, fx.coring), repl), name


def test_zero_family_dualizes_to_zero_module():
    from corings.algebra import Bimodule
    from corings.comodules import GComodule

    fx = fixture("trivial")
    r = dual_ring(fx.coring)
    g = fx.coring.group
    zero = Bimodule(fx.coring.base, 0, None, tuple(Mat.zeros(QQ, 0, 0) for _ in range(1)))
    comps = tuple(zero for _ in g.elements())
    rho = {}
    gm = GComodule(fx.coring, comps, rho)
    for a in g.elements():
        for b in g.elements():
            t = gm.tensor(a, b)
            rho[(a, b)] = Mat.zeros(QQ, t.space.dim, 0)
    gm.rho = rho
    graded = gcomodule_to_graded(gm, r)
    assert all(c.dim == 0 for c in graded.comps)
    back = graded_to_gcomodule(graded, fx.coring)
    assert gcomodules_equal(back, gm)


def test_module_of_base_comodule_validates():
    for name in ("trivial", "regular"):
        fx = fixture(name)
        r = dual_ring(fx.coring)
        rm = comodule_to_module(comodule_from_grouplike(fx.grouplike), r)
        assert validate_rmodule(rm).ok, name


def test_forget_then_regrade_dimensions():
    fx = fixture("regular")
    r = dual_ring(fx.coring)
    gm = gcomodule_to_graded(coring_as_gcomodule(fx.coring), r)
    rm = forget_grading(gm)
    assert validate_rmodule(rm).ok
    regraded = induce_grading(rm)
    assert validate_graded_module(regraded).ok
    total = sum(c.dim for c in gm.comps)
    assert all(c.dim == total for c in regraded.comps)


def test_functor_square_commutes():
    rng = random.Random(3)
    for name in ("trivial", "regular", "nongalois"):
        fx = fixture(name)
        r = dual_ring(fx.coring)
        cg = coring_as_gcomodule(fx.coring)
        acom = comodule_from_grouplike(fx.grouplike)
        rnd = random_comodule(fx.grouplike, rng)
        rep = check_functor_square([cg, replicate_comodule(rnd)], [acom, rnd], r)
        assert rep.ok, name


def test_pack_equals_forget_on_the_nose():
    fx = fixture("regular")
    r = dual_ring(fx.coring)
    cg = coring_as_gcomodule(fx.coring)
    lhs = comodule_to_module(pack_gcomodule(cg)[0], r)
    rhs = forget_grading(gcomodule_to_graded(cg, r))
    assert rmodules_equal(lhs, rhs)


def test_cofree_dual_iso_identity_on_trivial():
    c, wit = trivial_coring(field_algebra(QQ), FiniteGroup.cyclic(2))
    r = dual_ring(c)
    sigmas, rep = cofree_dual_group_ring_iso(c, wit, r)
    assert rep.ok
    for s in sigmas:
        assert s == Mat.identity(QQ, 1)


def test_cofree_dual_iso_on_sweedler():
    fx = fixture("sweedler")
    r = dual_ring(fx.coring)
    sigmas, rep = cofree_dual_group_ring_iso(fx.coring, fx.witness, r)
    assert rep.ok
    assert all(s.rows == 4 for s in sigmas)


def test_cofree_dual_iso_on_galois_witness():
    fx = fixture("regular")
    r = dual_ring(fx.coring)
    wit = witness_of("regular")
    _, rep = cofree_dual_group_ring_iso(fx.coring, wit, r)
    assert rep.ok
