import pytest

from frobforge.constructions import cgroup_times_group, cyclic_group
from frobforge.errors import DegenerateKernel, NotCEpimorphism, ValidationError
from frobforge.frobenius import (CGroup, build_frobenius_group, is_c_frobenius,
                                 kernel_subgroup)
from frobforge.groups import PermGroup, Subgroup
from frobforge.homs import GroupHom, identity_hom, quotient_by_normal
from frobforge.perms import parse_perm, ppow
from frobforge.towers import (PruneResult, QuotientTower,
                              free_product_epimorphism, lift_along_tower,
                              pop_certificate_data, prune_kernel_primes)


def seven_power_tower(levels=3):
    # lower levels are genuine quotients of the top group, so the reduction
    # maps are C-epimorphisms by construction
    top = build_frobenius_group(6, 7**levels)
    chain = [top]
    maps_down = []
    cur = top
    for j in range(levels, 1, -1):
        s = is_c_frobenius(cur)
        sub = Subgroup(cur.group, [ppow(s.kernel_generator, 7 ** (j - 1))])
        q, hom = quotient_by_normal(cur.group, sub)
        qcg = CGroup(q, hom(cur.c))
        chain.append(qcg)
        maps_down.append(hom)
        cur = qcg
    return QuotientTower.build(list(reversed(chain)), list(reversed(maps_down)))


def test_constant_tower():
    cg = build_frobenius_group(6, 7)
    tower = QuotientTower.build([cg, cg], [identity_hom(cg.group)])
    base = Subgroup(cg.group, cg.group.generators)
    reports = lift_along_tower(tower, base)
    assert len(reports) == 2
    for rep in reports:
        assert rep.subgroup.order == 42


def test_seven_power_tower():
    tower = seven_power_tower(3)
    base = Subgroup(tower.levels[0].group, tower.levels[0].group.generators)
    reports = lift_along_tower(tower, base)
    assert [r.subgroup.order for r in reports] == [42, 294, 2058]
    for r in reports:
        assert tuple(sorted(r.structure.primes)) == (7,)


def test_tower_map_validation():
    cg = build_frobenius_group(6, 7)
    cg49 = build_frobenius_group(6, 49)
    s49 = is_c_frobenius(cg49)
    bad = GroupHom(cg49.group, cg.group,
                   [cg.c if g == cg49.c else cg.group.identity()
                    for g in cg49.group.generators])
    with pytest.raises(NotCEpimorphism):
        QuotientTower.build([cg, cg49], [bad])


def test_prune_examples():
    cg = __import__("frobforge.constructions",
                    fromlist=["cyclic_on_cyclic_blocks"]) \
        .cyclic_on_cyclic_blocks(6, [(7, 3), (13, 4)])
    s = is_c_frobenius(cg)
    res = prune_kernel_primes(cg, s, (7,))
    assert not res.degenerate
    assert res.group.group.order == 42
    assert res.dropped == (13,)

    res2 = prune_kernel_primes(cg, s, (7, 13))
    assert not res2.degenerate
    assert res2.group.group.order == cg.group.order
    assert res2.dropped == ()

    res3 = prune_kernel_primes(cg, s, (5,))
    assert res3.degenerate
    assert res3.structure is None
    assert res3.group.group.order == 6


def test_free_product_epimorphism_examples():
    cg = build_frobenius_group(6, 7)
    z6 = cyclic_group(6)
    beta = GroupHom(z6, cg.group, [cg.c])
    res = free_product_epimorphism(z6, beta, cg)
    assert res.generates and res.commutator_generates
    # k^-1 k^c = k^(3-1) = k^2 generates Z/7
    assert res.witness["commutator_order"] == 7

    cg49 = build_frobenius_group(6, 49)
    beta49 = GroupHom(z6, cg49.group, [cg49.c])
    res49 = free_product_epimorphism(z6, beta49, cg49)
    assert res49.witness["commutator_order"] == 49

    z12 = cyclic_group(12)
    beta12 = GroupHom(z12, cg.group, [cg.c])  # mod-6 reduction
    res12 = free_product_epimorphism(z12, beta12, cg)
    assert res12.generates
    assert len(res12.hom_b.kernel_set()) == 2


def test_free_product_epimorphism_rejects_bad_beta():
    cg = build_frobenius_group(6, 7)
    z3 = cyclic_group(3)
    from frobforge.errors import NotSurjective
    beta = GroupHom(z3, cg.group, [ppow(cg.c, 2)])
    with pytest.raises(NotSurjective):
        free_product_epimorphism(z3, beta, cg)


def test_pop_level1():
    rep = pop_certificate_data(1)
    assert rep.embedded_order == 42
    assert rep.action_exponent == 3
    assert rep.intersection_order == 6
    assert len(rep.intersection_prime_powers) == 2  # 6 = 2 * 3
    assert not rep.contained_in_factor_conjugate
    assert rep.conjugates_scanned == 84
    assert rep.order_factorization == ((2, 2), (3, 3), (7, 7))


def test_pop_level2():
    rep = pop_certificate_data(2)
    assert rep.embedded_order == 294
    assert rep.intersection_order == 6
    assert not rep.contained_in_factor_conjugate


def test_pop_rejects_level0():
    with pytest.raises(ValidationError):
        pop_certificate_data(0)
