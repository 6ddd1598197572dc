import pytest

from frobforge.errors import CapExceeded
from frobforge.groups import is_abelian
from frobforge.matrices import mat_inverse
from frobforge.perms import pconj, pinv, pmul, porder
from frobforge.projective import (full_automorphism_action, group_order_formula,
                                  matrix_to_perm, projective_group)


def test_orders_and_degrees():
    psl25 = projective_group(2, 5, "PSL")
    assert psl25.group.order == 60 and psl25.group.degree == 6

    pgl23 = projective_group(2, 3, "PGL")
    assert pgl23.group.order == 24 and pgl23.group.degree == 4

    psl32 = projective_group(3, 2, "PSL")
    assert psl32.group.order == 168 and psl32.group.degree == 7

    pgl24 = projective_group(2, 4, "PGL")
    assert pgl24.group.order == 60 and pgl24.group.degree == 5

    sl23 = projective_group(2, 3, "SL")
    assert sl23.group.order == 24 and sl23.group.degree == 8


def test_formula_cross_check():
    assert group_order_formula(2, 7, "PGL") == 336
    assert group_order_formula(2, 7, "PSL") == 168
    assert group_order_formula(3, 2, "GL") == 168
    assert group_order_formula(2, 4, "PSL") == 60


def test_sigma_properties():
    pg = projective_group(2, 4, "PSL")
    # sigma has order e = 2 and normalizes but does not lie in PSL(2,4)
    assert porder(pg.sigma) == 2
    assert pg.sigma not in pg.group.eset
    gamma = full_automorphism_action(pg)
    assert gamma.order == 120  # PGammaL(2,4) = S5 = Aut(A5)

    pg5 = projective_group(2, 5, "PGL")
    assert pg5.sigma == tuple(range(6))  # prime field: trivial
    assert full_automorphism_action(pg5).order == 120


def test_tau_induces_inverse_transpose():
    pg = projective_group(2, 7, "PGL")
    assert pg.tau is not None
    ctx = pg.field
    # conjugation by tau sends the permutation of M to that of M^-T
    for M in (((1, 1), (0, 1)), ((3, 0), (0, 1)), ((0, 1), (6, 2))):
        perm = matrix_to_perm(ctx, M, pg.points, projective=True)
        minv_t = tuple(zip(*mat_inverse(ctx, M)))
        perm_mt = matrix_to_perm(ctx, minv_t, pg.points, projective=True)
        assert pconj(perm, pg.tau) == perm_mt
    # tau is returned only when realizable on points
    assert projective_group(3, 2, "PSL").tau is None


def test_psl_32_simple_nonabelian():
    pg = projective_group(3, 2, "PSL")
    assert not is_abelian(pg.group)
    from frobforge.groups import minimal_normal_subgroups
    mins = minimal_normal_subgroups(pg.group)
    assert len(mins) == 1 and mins[0].order == 168


def test_full_aut_action_order():
    assert full_automorphism_action(projective_group(2, 7, "PGL")).order == 336


def test_cap():
    with pytest.raises(CapExceeded):
        projective_group(4, 5, "GL", cap=1000)
