import itertools

import pytest
from hypothesis import given, settings, strategies as st

from frobforge.errors import CapExceeded, TrivialGroup
from frobforge.groups import (PermGroup, Subgroup, all_subgroups, centralizer,
                              center, conjugacy_classes, cyclic_subgroup,
                              direct_product, intersection, is_abelian,
                              is_normal, is_solvable, minimal_normal_subgroups,
                              normal_closure, normalizer, p_part,
                              sylow_subgroup)
from frobforge.perms import identity, parse_perm, pconj, pmul


def sym(n):
    gens = [parse_perm("(1 2)", n), tuple(list(range(1, n)) + [0])]
    return PermGroup(n, gens, name=f"S{n}")


def alt(n):
    three = parse_perm("(1 2 3)", n)
    if n % 2 == 1:
        big = tuple(list(range(1, n)) + [0])
    else:
        big = (0,) + tuple(list(range(2, n)) + [1])
    return PermGroup(n, [three, big], name=f"A{n}")


def cyclic(n):
    return PermGroup(n, [tuple(list(range(1, n)) + [0])], name=f"Z{n}")


S3 = sym(3)
S4 = sym(4)
V4 = Subgroup(S4, [parse_perm("(1 2)(3 4)", 4), parse_perm("(1 3)(2 4)", 4)])


def test_closure_examples():
    # <(1 2), (1 2 3)> on 3 points has order 6: oracle = all of Sym(3)
    g = PermGroup(3, [parse_perm("(1 2)", 3), parse_perm("(1 2 3)", 3)])
    brute = {p for p in itertools.permutations(range(3))}
    assert g.order == 6
    assert set(g.elements) == brute
    assert list(g.elements) == sorted(g.elements)

    assert PermGroup(4, []).order == 1
    assert PermGroup(5, [parse_perm("(1 2 3 4 5)", 5)]).order == 5


def test_closure_cap():
    with pytest.raises(CapExceeded):
        PermGroup(4, sym(4).generators, cap=10)


def test_sylow_examples():
    assert sylow_subgroup(S4, 2).order == p_part(24, 2) == 8
    assert sylow_subgroup(S4, 3).order == 3
    assert sylow_subgroup(S4, 5).order == 1


def test_sylow_membership_and_conjugacy():
    # deterministic result; conjugates are again Sylow and conjugate back
    p2 = sylow_subgroup(S4, 2)
    assert p2.eset <= S4.eset
    for g in S4.elements[:6]:
        cset = frozenset(pconj(x, g) for x in p2.eset)
        # brute-force: some element of S4 conjugates p2 onto cset
        assert any(frozenset(pconj(x, h) for x in p2.eset) == cset
                   for h in S4.elements)


def test_minimal_normal_subgroups():
    mins = minimal_normal_subgroups(S4)
    assert len(mins) == 1
    assert mins[0].eset == V4.eset

    a5 = alt(5)
    mins = minimal_normal_subgroups(a5)
    assert len(mins) == 1 and mins[0].order == 60

    z6 = cyclic(6)
    mins = minimal_normal_subgroups(z6)
    assert sorted(m.order for m in mins) == [2, 3]

    with pytest.raises(TrivialGroup):
        minimal_normal_subgroups(PermGroup(3, []))


def test_normalizer_examples():
    assert normalizer(S4, V4).order == 24
    assert normalizer(S3, Subgroup(S3, S3.generators)).order == 6
    t = Subgroup(S3, [parse_perm("(1 2)", 3)])
    assert normalizer(S3, t).eset == t.eset


def test_centralizer_examples():
    c = centralizer(S3, parse_perm("(1 2 3)", 3))
    assert c.order == 3
    assert centralizer(S3, identity(3)).order == 6
    c = centralizer(S4, parse_perm("(1 2)(3 4)", 4))
    assert c.order == 8


def test_solvable_and_abelian():
    assert is_solvable(S4)
    assert not is_solvable(alt(5))
    assert is_abelian(cyclic(12))
    assert not is_abelian(S3)


def test_center_and_classes():
    assert center(S3).order == 1
    assert center(cyclic(5)).order == 5
    classes = conjugacy_classes(S4)
    assert sorted(len(c) for c in classes) == [1, 3, 6, 6, 8]


def test_normal_closure():
    ncl = normal_closure(S4, [parse_perm("(1 2)(3 4)", 4)])
    assert ncl.eset == V4.eset
    assert is_normal(S4, ncl)


def test_direct_product_and_intersection():
    g = direct_product(S3, cyclic(2))
    assert g.order == 12 and g.degree == 5
    a = Subgroup.from_elements(S4, V4.eset)
    b = sylow_subgroup(S4, 2)
    inter = intersection(S4, a, b)
    assert inter.order == 4  # V4 lies in every Sylow 2-subgroup of S4


def test_all_subgroups_s3():
    subs = all_subgroups(S3)
    assert sorted(s.order for s in subs) == [1, 2, 2, 2, 3, 6]


@settings(max_examples=20, deadline=None)
@given(st.lists(st.permutations(range(5)).map(tuple), min_size=0, max_size=3))
def test_lagrange_property(gens):
    g = PermGroup(5, gens)
    assert 120 % g.order == 0
    for x in g.elements:
        sub = cyclic_subgroup(g, x)
        assert g.order % sub.order == 0


@settings(max_examples=10, deadline=None)
@given(st.permutations(range(6)).map(tuple))
def test_cyclic_subgroup_order(x):
    g = PermGroup(6, [x])
    from frobforge.perms import porder
    assert g.order == porder(x)
