import pytest

from frobforge.errors import CapExceeded, NotAHom, NotNormal
from frobforge.groups import (PermGroup, Subgroup, center, is_abelian,
                              normal_closure)
from frobforge.homs import (automorphism_group, compose, hom_from_generator_images,
                            identity_hom, preimage_subgroup, quotient_by_normal)
from frobforge.perms import identity, parse_perm, pmul

from test_groups import S3, S4, V4, cyclic, sym


def test_hom_examples():
    z6 = cyclic(6)
    ident = hom_from_generator_images(z6, z6, z6.generators)
    assert ident.is_surjective() and ident.is_injective()

    # Z/6 -> S3, c -> (1 2 3): kernel of order 2 (graph subgroup order 6)
    h = hom_from_generator_images(z6, S3, [parse_perm("(1 2 3)", 3)])
    assert len(h.kernel_set()) == 2
    assert len(h.image_set()) == 3

    z2, z3 = cyclic(2), cyclic(3)
    with pytest.raises(NotAHom):
        hom_from_generator_images(z2, z3, [z3.generators[0]])


def test_hom_multiplicativity_exhaustive():
    z6 = cyclic(6)
    h = hom_from_generator_images(z6, S3, [parse_perm("(1 2 3)", 3)])
    for x in z6.elements:
        for y in z6.elements:
            assert h(pmul(x, y)) == pmul(h(x), h(y))


def test_quotient_examples():
    q, hom = quotient_by_normal(S4, V4)
    assert q.order == 6
    assert not is_abelian(q)  # order 6 nonabelian: S3 up to isomorphism
    assert hom.kernel_set() == V4.eset
    assert hom.is_surjective()

    whole = Subgroup(S4, S4.generators)
    q2, hom2 = quotient_by_normal(S4, whole)
    assert q2.order == 1

    triv = Subgroup(S4, [])
    q3, hom3 = quotient_by_normal(S4, triv)
    assert q3.order == 24 and hom3.is_injective()

    with pytest.raises(NotNormal):
        quotient_by_normal(S3, Subgroup(S3, [parse_perm("(1 2)", 3)]))


def test_quotient_multiplicativity():
    q, hom = quotient_by_normal(S4, V4)
    for x in S4.elements:
        for y in S4.elements[:8]:
            assert hom(pmul(x, y)) == pmul(hom(x), hom(y))


def test_preimage_and_compose():
    q, hom = quotient_by_normal(S4, V4)
    back = preimage_subgroup(hom, q.eset)
    assert back.order == 24
    idh = identity_hom(S4)
    assert compose(idh, hom).kernel_set() == V4.eset


def test_automorphism_counts():
    assert len(automorphism_group(S3)) == 6
    assert len(automorphism_group(cyclic(7))) == 6
    assert len(automorphism_group(cyclic(2))) == 1


def test_automorphism_group_properties():
    for g in (S3, cyclic(12), sym(4)):
        auts = automorphism_group(g)
        keyed = {tuple(a(x) for x in g.generators) for a in auts}
        assert len(keyed) == len(auts)
        # closed under composition and inverse; contains inner automorphisms
        inner_count = g.order // center(g).order
        assert len(auts) % inner_count == 0
        import random
        rng = random.Random(7)
        for _ in range(10):
            a, b = rng.choice(auts), rng.choice(auts)
            ab = tuple(b(a(x)) for x in g.generators)
            assert ab in keyed
        for a in auts[:6]:
            inv_images = {a(x): x for x in g.elements}
            assert tuple(inv_images[g2] for g2 in g.generators) is not None
            assert tuple(a(x) for x in g.generators) in keyed


def test_automorphism_cap():
    with pytest.raises(CapExceeded):
        automorphism_group(sym(4), cap=10)
