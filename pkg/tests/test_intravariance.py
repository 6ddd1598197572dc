import pytest

from frobforge.constructions import (cyclic_group, symmetric_group,
                                     wreath_over_s3)
from frobforge.errors import BadPrime, HypothesisViolated, NotDirectProduct
from frobforge.groups import (PermGroup, Subgroup, direct_product, is_normal,
                              normalizer, sylow_subgroup)
from frobforge.homs import automorphism_group
from frobforge.intravariance import (IntravarianceCertificate,
                                     IntravarianceRefusal,
                                     c_compatible_representatives,
                                     centralizer_nontrivial_check,
                                     intravariance_check, normalized_sylow,
                                     product_intravariant_subgroup,
                                     validate_internal_direct_product)
from frobforge.perms import identity, parse_perm, pconj, pmul

from test_groups import S3, S4, V4, alt


def test_sylow_vs_automorphisms():
    auts = automorphism_group(S4)
    p2 = sylow_subgroup(S4, 2)
    cert = intravariance_check(S4, p2, auts)
    assert isinstance(cert, IntravarianceCertificate)
    assert cert.verify()
    assert len(cert.witnesses) == len(auts)


def test_semisimple_cyclic_in_pgl25():
    from frobforge.projective import full_automorphism_action, projective_group
    pg = projective_group(2, 5, "PGL")
    gamma = full_automorphism_action(pg)
    # a semisimple element: order prime to 5
    h = next(x for x in pg.group.elements
             if x != identity(pg.group.degree) and
             __import__("frobforge.perms", fromlist=["porder"]).porder(x) == 4)
    from frobforge.groups import cyclic_subgroup
    sub = cyclic_subgroup(pg.group, h)
    cert = intravariance_check(pg.group, sub, list(gamma.elements))
    assert isinstance(cert, IntravarianceCertificate)
    assert cert.verify()


def test_refusal_with_failing_actor():
    v4 = PermGroup(4, [parse_perm("(1 2)(3 4)", 4),
                       parse_perm("(1 3)(2 4)", 4)], name="V4")
    sub = Subgroup(v4, [parse_perm("(1 2)(3 4)", 4)])
    # the automorphism swapping the two named involutions cannot be inner:
    # V4 is abelian, so conjugation never moves a subgroup
    auts = automorphism_group(v4)
    moving = [a for a in auts
              if a(parse_perm("(1 2)(3 4)", 4)) != parse_perm("(1 2)(3 4)", 4)]
    assert moving
    res = intravariance_check(v4, sub, [moving[0]])
    assert isinstance(res, IntravarianceRefusal)
    assert res.failing_actor is moving[0]


def test_normalized_sylow_examples():
    a4 = Subgroup(S4, [parse_perm("(1 2 3)", 4), parse_perm("(1 2)(3 4)", 4)])
    assert a4.order == 12
    r = Subgroup(S4, [parse_perm("(1 2)", 4)])
    u = normalized_sylow(S4, a4, r)
    assert u.eset == V4.eset  # the unique Sylow 2-subgroup of A4

    # r does not divide |S|: Frattini branch
    from frobforge.frobenius import build_frobenius_group, is_c_frobenius, \
        kernel_subgroup
    cg = build_frobenius_group(6, 7)
    s = is_c_frobenius(cg)
    kern = kernel_subgroup(cg, s)
    from frobforge.perms import ppow
    r2 = Subgroup(cg.group, [ppow(cg.c, 3)])  # Sylow 2 of C
    u = normalized_sylow(cg.group, kern, r2, p=7)
    assert u.eset == kern.eset

    r3 = Subgroup(S4, [parse_perm("(1 2 3)", 4)])
    u = normalized_sylow(S4, a4, r3)
    assert u.order == 3
    assert r3.eset <= u.eset  # R normalizes (here: equals) the result

    with pytest.raises(BadPrime):
        normalized_sylow(cg.group, kern, r2)


def test_product_intravariant_degenerate():
    # t = 1: U = U1, G1 = G; U1 = a Sylow 3-subgroup of A4, intravariant
    # in A4 with witnesses inside A4
    g = S4
    a4 = Subgroup(g, [parse_perm("(1 2 3)", 4), parse_perm("(1 2)(3 4)", 4)])
    u1 = Subgroup(g, [parse_perm("(1 2 3)", 4)])
    u, cert = product_intravariant_subgroup(
        g, a4, [a4], u1, [identity(4)], witness_actors=g.elements)
    assert u.eset == u1.eset
    assert cert.verify()
    assert not is_normal(g, u)


def test_product_intravariant_whole_factors():
    # S3-top over Z7^3, U1 = the first factor: U = A, normal
    cg, product, factors = wreath_over_s3(cyclic_group(7))
    g = cg.group
    reps = c_compatible_representatives(g, product, factors, cg.c, factors[0])
    u, cert = product_intravariant_subgroup(g, product, factors, factors[0],
                                            reps)
    assert u.eset == product.eset
    assert cert.verify()
    assert is_normal(g, u)


def test_product_intravariant_swap_case():
    # Z2 swapping two S3 factors, U1 = <(1 2)> in the first: |U| = 4,
    # intravariant but not normal
    s3 = symmetric_group(3)
    prod = direct_product(s3, s3)
    swap = tuple(list(range(3, 6)) + list(range(3)))
    g = PermGroup(6, list(prod.generators) + [swap], name="Z2wrS3")
    assert g.order == 72
    a = Subgroup(g, prod.generators)
    f1 = Subgroup(g, [x for x in prod.generators[:2]])
    f2 = Subgroup(g, [x for x in prod.generators[2:]])
    u1 = Subgroup(g, [parse_perm("(1 2)", 6)])
    # reps: identity and the swap
    u, cert = product_intravariant_subgroup(
        g, a, [f1, f2], u1, [identity(6), swap],
        witness_actors=g.elements)
    assert u.order == 4
    assert cert.verify()
    assert not is_normal(g, u)
    # U is intravariant: N_G(U) * A = G by witness existence
    n = normalizer(g, u)
    assert n.order * a.order // len(n.eset & a.eset) == g.order


def test_validate_direct_product_refusals():
    s3 = symmetric_group(3)
    g = direct_product(s3, s3)
    whole = Subgroup(g, g.generators)
    f1 = Subgroup(g, g.generators[:2])
    with pytest.raises(NotDirectProduct):
        validate_internal_direct_product(g, whole, [f1, f1])


def test_c_compatible_reps_structure():
    # twisted wreath: base coset keeps identity, the free orbit is covered
    # by translates of its least element
    cg, product, factors = wreath_over_s3(symmetric_group(3),
                                          twist=parse_perm("(2 3)", 3))
    g = cg.group
    u1_els = [x for x in factors[0].elements if pconj(x, cg.c) == x]
    u1 = Subgroup.from_elements(g, u1_els)
    assert u1.order == 2
    reps = c_compatible_representatives(g, product, factors, cg.c, u1)
    assert len(reps) == 3
    assert identity(g.degree) in reps
    u, cert = product_intravariant_subgroup(g, product, factors, u1, reps)
    assert u.order == 8
    # C-invariance of the product subgroup
    assert frozenset(pconj(x, cg.c) for x in u.eset) == u.eset
    assert not is_normal(g, u)


def test_c_compatible_reps_hypothesis_violation():
    # U1 not invariant under the stabilizer part of C: refuse
    cg, product, factors = wreath_over_s3(symmetric_group(3),
                                          twist=parse_perm("(2 3)", 3))
    g = cg.group
    bad_u1 = Subgroup(g, [parse_perm("(1 2)", 9)])
    with pytest.raises(HypothesisViolated):
        c_compatible_representatives(g, product, factors, cg.c, bad_u1)


def test_centralizer_nontrivial_a5():
    rep = centralizer_nontrivial_check(alt(5))
    assert rep.automorphism_count == 120
    assert rep.all_nontrivial
    assert rep.min_centralizer_order > 1


def test_centralizer_check_rejects_solvable():
    with pytest.raises(HypothesisViolated):
        centralizer_nontrivial_check(S4)
