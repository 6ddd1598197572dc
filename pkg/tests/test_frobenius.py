import random

import pytest

from frobforge.errors import NotNormal
from frobforge.frobenius import (CGroup, FrobeniusRefusal, FrobeniusStructure,
                                 build_cyclic_semidirect, build_frobenius_group,
                                 definitional_frobenius_check, is_c_frobenius,
                                 kernel_subgroup, orbit_report, quotient_c_group,
                                 valid_action_exponents)
from frobforge.groups import PermGroup, Subgroup, all_subgroups, cyclic_subgroup
from frobforge.perms import parse_perm, pconj, pmul, porder

from test_groups import S3


def test_z6_z7_success():
    cg = build_frobenius_group(6, 7)
    s = is_c_frobenius(cg)
    assert isinstance(s, FrobeniusStructure)
    assert s.kernel_order == 7 and s.c_order == 6
    # 3 is the least element of multiplicative order 6 mod 7
    assert s.primes == {7: (7, 3)}
    assert definitional_frobenius_check(cg, kernel_subgroup(cg, s).eset)


def test_s3_as_c_group():
    cg = CGroup(S3, parse_perm("(1 2)", 3))
    s = is_c_frobenius(cg)
    assert isinstance(s, FrobeniusStructure)
    assert s.kernel_order == 3
    assert s.kernel_generator == parse_perm("(1 2 3)", 3)


def test_d4_refusal():
    d4 = build_cyclic_semidirect(2, 4, 3)  # inversion on Z/4
    s = is_c_frobenius(d4)
    assert isinstance(s, FrobeniusRefusal)
    assert s.reason == "complement-order-does-not-divide-p-minus-1"


def test_refusal_no_complement():
    # Z/4 with C = the order-2 subgroup: complement would need order 2 = |C| pos,
    # here F/|C| = 2 but the only order-2 subgroup meets C
    z4 = PermGroup(4, [parse_perm("(1 2 3 4)", 4)])
    cg = CGroup(z4, parse_perm("(1 3)(2 4)", 4))
    s = is_c_frobenius(cg)
    assert isinstance(s, FrobeniusRefusal)
    assert s.reason == "no-cyclic-normal-complement"


def test_unfaithful_refusal():
    # Z/2 x Z/3 = Z/6 with C the order-2 part: action trivial
    cg = build_cyclic_semidirect(2, 3, 1)
    s = is_c_frobenius(cg)
    assert isinstance(s, FrobeniusRefusal)
    assert s.reason == "unfaithful-p-action"


def test_equivalence_small_sample():
    # recognition agrees with the definitional oracle on a small catalog
    for n_c in (2, 3, 4, 6):
        for n_k in (3, 5, 7, 9, 13):
            for m in valid_action_exponents(n_c, n_k):
                if m == 0:
                    continue
                cg = build_cyclic_semidirect(n_c, n_k, m)
                kset = frozenset(
                    x for x in cg.group.elements
                    if x[:n_c] == tuple(range(n_c)))
                got = is_c_frobenius(cg)
                want = definitional_frobenius_check(cg, kset)
                assert isinstance(got, FrobeniusStructure) == want, (n_c, n_k, m)


def test_quotient_c_group_examples():
    cg = build_frobenius_group(6, 7)
    s = is_c_frobenius(cg)
    kern = kernel_subgroup(cg, s)
    res = quotient_c_group(cg, s, kern)
    assert res.kind == "quotient-of-C" and res.quotient.order == 6

    cg49 = build_frobenius_group(6, 49)
    s49 = is_c_frobenius(cg49)
    from frobforge.perms import ppow
    k7 = cyclic_subgroup(cg49.group, ppow(s49.kernel_generator, 7))
    assert k7.order == 7
    res = quotient_c_group(cg49, s49, k7)
    assert res.kind == "frobenius"
    assert res.quotient.order == 42
    assert res.structure.kernel_order == 7

    with pytest.raises(NotNormal):
        cg_s3 = CGroup(S3, parse_perm("(1 2)", 3))
        s3s = is_c_frobenius(cg_s3)
        quotient_c_group(cg_s3, s3s,
                         Subgroup(S3, [parse_perm("(1 2)", 3)]))


def test_orbit_report_s3_natural():
    cg = CGroup(S3, parse_perm("(1 2)", 3))
    s = is_c_frobenius(cg)
    rep = orbit_report(cg, s)
    # base point 3 (1-based) has stabilizer C; points 1,2 are free
    assert rep.base_point == 2
    assert len(rep.c1_elements) == 2 and len(rep.k1_elements) == 1
    assert rep.free_points == (0, 1)
    assert rep.c_orbit == (2,)


def test_orbit_report_single_point():
    cg = build_frobenius_group(6, 7)
    s = is_c_frobenius(cg)
    rep = orbit_report(cg, s, action_images=[(0,), (0,)], n_points=1)
    assert rep.base_point == 0
    assert len(rep.c1_elements) == 6 and len(rep.k1_elements) == 7


def test_orbit_report_coset_action():
    # F = Z/6 x| Z/7 on the 7 points of its kernel-translation action:
    # stabilizer of 0 is C, six free points
    cg = build_frobenius_group(6, 7)
    s = is_c_frobenius(cg)
    rep = orbit_report(cg, s)
    assert len(rep.c1_elements) == 6 and len(rep.k1_elements) == 1
    assert len(rep.free_points) == 6


def test_lemma_21g_property():
    # C1^f K1 meets K in K1; meets C in C1 exactly when f lies in C*K1
    rng = random.Random(20260809)
    for n_c, n_k in ((6, 7), (2, 9), (4, 5)):
        cg = build_frobenius_group(n_c, n_k)
        s = is_c_frobenius(cg)
        c_set = sorted(cg.c_set())
        k_set = sorted(kernel_subgroup(cg, s).eset)
        from frobforge.perms import ppow
        for _ in range(25):
            dc = rng.choice([d for d in range(1, n_c + 1) if n_c % d == 0])
            dk = rng.choice([d for d in range(1, n_k + 1) if n_k % d == 0])
            c1 = set(cyclic_subgroup(cg.group, ppow(cg.c, n_c // dc)).eset)
            k1 = set(cyclic_subgroup(
                cg.group, ppow(s.kernel_generator, n_k // dk)).eset)
            f = rng.choice(cg.group.elements)
            c1f = {pconj(x, f) for x in c1}
            prod = {pmul(a, b) for a in c1f for b in k1}
            assert prod & set(k_set) == k1
            in_ck1 = any(pmul(a, b) == f for a in c_set for b in k1)
            meet_c = prod & set(c_set)
            if in_ck1:
                assert meet_c == c1
            else:
                assert len(meet_c) == 1  # identity only


def test_lemma_21e_small():
    # every subgroup of a small recognized C-Frobenius group is a
    # conjugate of C1*K1
    for n_c, n_k in ((2, 3), (6, 7), (2, 9), (4, 5), (2, 15)):
        cg = build_frobenius_group(n_c, n_k)
        s = is_c_frobenius(cg)
        c_set = sorted(cg.c_set())
        k_els = sorted(kernel_subgroup(cg, s).eset)
        group = cg.group
        candidates = set()
        from frobforge.perms import ppow
        for dc in [d for d in range(1, n_c + 1) if n_c % d == 0]:
            c1 = set(cyclic_subgroup(group, ppow(cg.c, n_c // dc)).eset)
            for dk in [d for d in range(1, n_k + 1) if n_k % d == 0]:
                k1 = set(cyclic_subgroup(
                    group, ppow(s.kernel_generator, n_k // dk)).eset)
                base = frozenset(pmul(a, b) for a in c1 for b in k1)
                for f in group.elements:
                    candidates.add(frozenset(pconj(x, f) for x in base))
        for sub in all_subgroups(group):
            assert sub.eset in candidates
