"""Reusable group constructions for catalogs and tests.

Everything is built directly as permutations on explicit point sets and
re-closed, so a wrong relation shows up as a wrong order immediately.
"""

from __future__ import annotations

from typing import Optional, Sequence

from .errors import InternalInconsistency, ValidationError
from .frobenius import CGroup
from .groups import PermGroup, Subgroup, direct_product
from .perms import Perm, identity, parse_perm, pmul, porder


def cyclic_group(n: int) -> PermGroup:
    return PermGroup(n, [tuple(list(range(1, n)) + [0])], name=f"Z{n}")


def symmetric_group(n: int) -> PermGroup:
    if n < 2:
        return PermGroup(max(n, 1), [], name=f"S{n}")
    gens = [parse_perm("(1 2)", n), tuple(list(range(1, n)) + [0])]
    return PermGroup(n, gens, name=f"S{n}")


def alternating_group(n: int) -> PermGroup:
    three = parse_perm("(1 2 3)", n)
    if n % 2 == 1:
        big = tuple(list(range(1, n)) + [0])
    else:
        big = (0,) + tuple(list(range(2, n)) + [1])
    return PermGroup(n, [three, big], name=f"A{n}")


def cyclic_on_cyclic_blocks(n_c: int, blocks: Sequence[tuple],
                            name: str = "") -> CGroup:
    """C = Z/n_c acting on a product of cyclic groups Z/n_i by k -> k^(m_i).

    A separate n_c-cycle block is prepended only when the action alone is
    unfaithful, keeping degrees minimal and deterministic.
    """
    for n, m in blocks:
        if pow(m, n_c, n) != 1 % n:
            raise ValidationError(f"exponent {m} invalid on Z/{n}")
    from math import lcm

    def mult_order(m, n):
        if n == 1:
            return 1
        o, acc = 1, m % n
        while acc != 1:
            acc = (acc * m) % n
            o += 1
        return o

    faithful = lcm(1, *(mult_order(m, n) for n, m in blocks)) == n_c
    offs = []
    deg = 0
    if not faithful:
        deg = n_c
    for n, _ in blocks:
        offs.append(deg)
        deg += n
    c_images = list(range(deg))
    if not faithful:
        for i in range(n_c):
            c_images[i] = (i + 1) % n_c
    for (n, m), off in zip(blocks, offs):
        for j in range(n):
            c_images[off + j] = off + (j * m) % n
    c = tuple(c_images)
    if porder(c) != n_c:
        raise InternalInconsistency("distinguished generator has wrong order")
    gens = [c]
    for (n, _), off in zip(blocks, offs):
        images = list(range(deg))
        for j in range(n):
            images[off + j] = off + (j + 1) % n
        gens.append(tuple(images))
    total = n_c
    for n, _ in blocks:
        total *= n
    group = PermGroup(deg, gens, name=name)
    if group.order != total:
        raise InternalInconsistency(
            f"semidirect construction: order {group.order}, wanted {total}")
    return CGroup(group, c)


def block_subgroup(cg: CGroup, block_index: int,
                   blocks: Sequence[tuple]) -> Subgroup:
    """The Z/n_i factor of a cyclic_on_cyclic_blocks group as a subgroup."""
    gens = cg.group.generators
    return Subgroup(cg.group, [gens[1 + block_index]])


def wreath_over_s3(base: PermGroup, twist: Optional[Perm] = None,
                   name: str = "") -> tuple:
    """S3-shaped top acting on three copies of a base group.

    The rotation cycles the blocks 0 -> 1 -> 2; the flip fixes block 0 and
    swaps blocks 1 and 2, applying ``twist`` (an involution of the base
    points normalizing the base group, identity when None) inside every
    block; applying it everywhere is what makes the relations close over
    the base product.  Returns (CGroup with c = the flip, base product
    Subgroup, factor list).
    """
    m = base.degree
    deg = 3 * m
    if twist is None:
        twist = identity(m)
    if len(twist) != m:
        raise ValidationError("twist degree must match the base group")
    if pmul(twist, twist) != identity(m):
        raise ValidationError("twist must be an involution")
    for g in base.generators:
        from .perms import pconj
        if pconj(g, twist) not in base.eset:
            raise ValidationError("twist must normalize the base group")
    rot = tuple((b * m + x) for b in (1, 2, 0) for x in range(m))
    flip = tuple([twist[x] for x in range(m)] +
                 [2 * m + twist[x] for x in range(m)] +
                 [m + twist[x] for x in range(m)])
    a_gens = []
    for b in range(3):
        for g in base.generators:
            images = list(range(deg))
            for x in range(m):
                images[b * m + x] = b * m + g[x]
            a_gens.append(tuple(images))
    group = PermGroup(deg, a_gens + [rot, flip], name=name)
    want = 6 * base.order**3
    if group.order != want:
        raise InternalInconsistency(
            f"wreath construction: order {group.order}, wanted {want}")
    product = Subgroup(group, a_gens)
    factors = []
    for b in range(3):
        fgens = []
        for g in base.generators:
            images = list(range(deg))
            for x in range(m):
                images[b * m + x] = b * m + g[x]
            fgens.append(tuple(images))
        factors.append(Subgroup(group, fgens))
    return CGroup(group, flip), product, factors


def cgroup_times_group(cg: CGroup, extra: PermGroup, name: str = "") -> CGroup:
    """Direct product with the distinguished generator extended by identity."""
    group = direct_product(cg.group, extra, name=name)
    c = cg.c + tuple(range(cg.group.degree, cg.group.degree + extra.degree))
    return CGroup(group, c)


def embed_left(g1_degree: int, total_degree: int, perm: Perm) -> Perm:
    return perm + tuple(range(g1_degree, total_degree))


def embed_right(offset: int, total_degree: int, perm: Perm) -> Perm:
    return tuple(range(offset)) + tuple(v + offset for v in perm)
