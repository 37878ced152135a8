"""Ring constructors, homs, radicals and spectra on the spec's worked cases."""

import pytest

from amalgam.rings import (
    BudgetExceededError,
    FiniteRing,
    HomomorphismError,
    ModuleSpec,
    RingConstructionError,
    RingHom,
    product,
    trivial_extension,
    trivial_extension_embedding,
    trunc_poly,
    verify_ring,
    zmod,
)
from amalgam.modules import ideal_span
from amalgam.spectrum import (
    idempotents,
    is_field,
    is_local,
    is_nilpotent,
    is_regular,
    maximal_ideals,
    nilradical,
    quotient_ring,
    residue_field,
    units,
)


from oracles import brute_maximal_ideals, ideal_elements


def test_zmod_shapes():
    z4 = zmod(4)
    assert z4.order() == 4
    assert verify_ring(z4).ok
    assert is_local(z4)[0]
    z2 = zmod(2)
    assert is_field(z2)
    z6 = zmod(6)
    assert not is_local(z6)[0]
    assert len(maximal_ideals(z6)) == 2
    with pytest.raises(RingConstructionError):
        zmod(1)


def test_zmod6_idempotents():
    z6 = zmod(6)
    vals = sorted(e.coords[0] for e in idempotents(z6))
    assert vals == [0, 1, 3, 4]


def test_units_and_regularity():
    z4 = zmod(4)
    assert not is_regular(z4.from_int(2))
    assert is_regular(z4.from_int(3))
    assert sorted(u.coords[0] for u in units(z4)) == [1, 3]
    # in a finite commutative ring regular == unit, exhaustively
    for ring in (zmod(6), zmod(8), trunc_poly(2, 3)):
        for x in ring.elements():
            inv_exists = any((x * y) == ring.one() for y in ring.elements())
            assert is_regular(x) == inv_exists


def test_verify_ring_catches_corruption():
    z4 = zmod(4)
    bad = FiniteRing.__new__(FiniteRing)
    for slot, val in (("char", 4), ("rank", 1), ("orders", (4,)),
                      ("labels", ("1",)), ("tensor", (((3,),),)),
                      ("unit", (1,)), ("name", "bad"), ("scale", (1,)),
                      ("_cache", {})):
        object.__setattr__(bad, slot, val)
    rep = verify_ring(bad)
    assert not rep.ok
    assert any(kind == "unit" for kind, _, _ in rep.failures)
    assert verify_ring(z4).ok


def test_product_ring():
    p = product(zmod(2), zmod(2))
    assert p.order() == 4
    assert verify_ring(p).ok
    assert len(idempotents(p)) == 4
    q = product(zmod(4), zmod(2))
    assert q.order() == 8
    assert verify_ring(q).ok
    assert len(maximal_ideals(q)) == 2


def test_product_mixed_characteristics():
    q = product(zmod(4), zmod(3))
    assert q.char == 12
    assert q.order() == 12
    assert verify_ring(q).ok
    # behaves like Z/12 spectrally
    assert len(maximal_ideals(q)) == 2


def test_trunc_poly():
    a = trunc_poly(2, 3)
    assert a.order() == 8
    assert verify_ring(a).ok
    x = a.basis_element(1)
    assert (x * x * x).is_zero()
    assert not (x * x).is_zero()
    local, mx = is_local(a)
    assert local and mx.size() == 4


def test_trivial_extension_z4_mod2():
    r = zmod(4)
    e = ModuleSpec(r, [2], [[[1]]])
    a = trivial_extension(r, e)
    assert a.order() == 8
    assert verify_ring(a).ok
    local, mx = is_local(a)
    assert local
    assert mx.size() == 4
    # the module part squares to zero: (0,e)(0,f) = (0,0)
    for i in range(1, 2):
        em = a.basis_element(r.rank)  # first module generator
        assert (em * em).is_zero()
    # 0 |x E is an ideal of square zero
    ideal_e = ideal_span(a, [a.basis_element(1)])
    for u in ideal_e.element_rows():
        for v in ideal_e.element_rows():
            assert (u * v).is_zero()


def test_trivial_extension_embedding_is_hom():
    r = zmod(4)
    e = ModuleSpec(r, [2], [[[1]]])
    a = trivial_extension(r, e)
    emb = trivial_extension_embedding(r, a)
    assert emb(r.one()) == a.one()
    for x in r.elements():
        for y in r.elements():
            assert emb(x * y) == emb(x) * emb(y)


def test_module_spec_validation():
    r = zmod(4)
    with pytest.raises(RingConstructionError):
        ModuleSpec(r, [3], [[[1]]])            # order does not divide char
    with pytest.raises(RingConstructionError):
        ModuleSpec(r, [2], [[[0]]])            # unit does not act as identity


def test_nilradical_examples():
    assert ideal_elements(nilradical(zmod(4))) == {(0,), (2,)}
    assert ideal_elements(nilradical(zmod(6))) == {(0,)}
    r = zmod(4)
    a = trivial_extension(r, ModuleSpec(r, [2], [[[1]]]))
    nil = nilradical(a)
    assert nil.size() == 4
    assert ideal_elements(nil) == {(0, 0), (0, 1), (2, 0), (2, 1)}


def test_nilradical_matches_bruteforce():
    z4 = zmod(4)
    rings = [z4, zmod(6), zmod(8), zmod(9), zmod(12), trunc_poly(2, 3),
             trunc_poly(3, 2), product(zmod(4), zmod(2)),
             trivial_extension(z4, ModuleSpec(z4, [2], [[[1]]]))]
    for ring in rings:
        nil = nilradical(ring)
        brute = {x.coords for x in ring.elements() if is_nilpotent(x)}
        assert {c for c in (v for v in ideal_elements(nil))} == brute


def test_maximal_ideals_against_bruteforce():
    z4 = zmod(4)
    rings = [z4, zmod(6), zmod(12), trunc_poly(2, 2),
             product(zmod(4), zmod(2)), product(zmod(2), zmod(2)),
             trivial_extension(z4, ModuleSpec(z4, [2], [[[1]]]))]
    for ring in rings:
        mine = {frozenset(ideal_elements(m)) for m in maximal_ideals(ring)}
        brute = brute_maximal_ideals(ring)
        assert mine == brute, ring.name


def test_maximal_ideals_budget_and_crt():
    big = zmod(2 * 3 * 5 * 7 * 11 * 13 * 17)  # order 510510 > default budget
    mx = maximal_ideals(big)
    assert len(mx) == 7
    sizes = sorted(m.size() for m in mx)
    assert sizes == sorted(510510 // p for p in (2, 3, 5, 7, 11, 13, 17))
    with pytest.raises(BudgetExceededError):
        idempotents(big)


def test_quotient_ring_and_residue_field():
    z4 = zmod(4)
    f, pi = residue_field(z4)
    assert f.order() == 2
    assert pi(z4.from_int(2)).is_zero()
    assert pi(z4.from_int(3)) == f.one()
    # quotient of the truncated polynomial ring by (x^2)
    a = trunc_poly(2, 3)
    x = a.basis_element(1)
    b, pi2 = quotient_ring(a, ideal_span(a, [x * x]))
    assert b.order() == 4
    assert verify_ring(b).ok
    assert pi2(x * x).is_zero()
    assert not pi2(x).is_zero()


def test_quotient_by_unit_ideal_rejected():
    z4 = zmod(4)
    with pytest.raises(RingConstructionError):
        quotient_ring(z4, ideal_span(z4, [z4.one()]))


def test_residue_field_of_duplication_ready_ring():
    r = zmod(4)
    a = trivial_extension(r, ModuleSpec(r, [2], [[[1]]]))
    f, pi = residue_field(a)
    assert f.order() == 2


def test_hom_validation():
    z4, z2 = zmod(4), zmod(2)
    f = RingHom(z4, z2, [(1,)])
    assert f(z4.from_int(3)) == z2.one()
    with pytest.raises(HomomorphismError):
        RingHom(z2, z4, [(1,)])  # 2*1 = 0 must map to 0, but 2*1 != 0 in Z/4
    a = trunc_poly(2, 3)
    b = trunc_poly(2, 2)
    f = RingHom(a, b, [(1, 0), (0, 1), (0, 0)])
    x = a.basis_element(1)
    assert f(x * x).is_zero()
    with pytest.raises(HomomorphismError):
        RingHom(a, b, [(1, 0), (1, 1), (0, 0)])  # not multiplicative


def test_zero_ring_disallowed():
    with pytest.raises(RingConstructionError):
        FiniteRing(4, (), (), ())
