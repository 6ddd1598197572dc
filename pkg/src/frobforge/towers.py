"""Quotient towers, kernel pruning, and free-product shadows.

A tower is a finite chain of groups-with-C and validated C-epimorphisms;
lifting walks it level by level, applying the quotient-lifting engine to
the preimage of the current Frobenius subgroup and pruning kernel primes
foreign to the base level.  The free-product side never materializes an
actual free product: a shadow is a finite group receiving both factors
injectively, with the generation witness recorded.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .caps import get_caps
from .errors import (CapExceeded, DegenerateKernel, EmptyKernel,
                     InternalInconsistency, NotCEpimorphism, NotSurjective,
                     ValidationError)
from .frobenius import (CGroup, FrobeniusRefusal, FrobeniusStructure,
                        cyclic_power_set, is_c_frobenius, kernel_subgroup)
from .groups import (PermGroup, Subgroup, cyclic_subgroup, p_part,
                     prime_factors, subgroup_closure)
from .homs import GroupHom, preimage_subgroup, quotient_by_normal
from .lifting import LiftInstance, lift_frobenius, revalidate
from .perms import Perm, identity, pconj, pinv, pmul, porder, ppow


@dataclass(frozen=True)
class QuotientTower:
    levels: tuple  # CGroup per level, T0 first
    maps: tuple    # maps[i]: GroupHom T_{i+1} -> T_i

    @classmethod
    def build(cls, levels: Sequence[CGroup],
              maps: Sequence[GroupHom]) -> "QuotientTower":
        if len(maps) != len(levels) - 1:
            raise ValidationError("need one map per adjacent level pair")
        for i, hom in enumerate(maps):
            upper, lower = levels[i + 1], levels[i]
            if hom.source.eset != upper.group.eset or \
                    hom.target.eset != lower.group.eset:
                raise ValidationError(f"map {i} does not connect the levels")
            if not hom.is_surjective():
                raise NotCEpimorphism(f"map {i} is not surjective")
            if hom(upper.c) != lower.c:
                raise NotCEpimorphism(
                    f"map {i} does not send the distinguished generator to "
                    "the distinguished generator")
        return cls(levels=tuple(levels), maps=tuple(maps))


@dataclass(frozen=True)
class TowerLevelReport:
    subgroup: Subgroup
    structure: FrobeniusStructure
    pruned_primes: tuple
    trace: tuple


def lift_along_tower(tower: QuotientTower, base: Subgroup) -> list:
    """Frobenius subgroups F_i per level with pi_i(F_{i+1}) = F_i,
    kernel primes pinned to those of the base level."""
    level0 = tower.levels[0]
    f0_cg = CGroup(PermGroup.from_elements(level0.group.degree, base.eset),
                   level0.c)
    s0 = is_c_frobenius(f0_cg)
    if isinstance(s0, FrobeniusRefusal):
        raise ValidationError(f"base subgroup not C-Frobenius: {s0.reason}")
    allowed = tuple(sorted(s0.primes))
    reports = [TowerLevelReport(subgroup=base, structure=s0,
                                pruned_primes=(), trace=())]
    for i, hom in enumerate(tower.maps):
        upper = tower.levels[i + 1]
        current = reports[-1]
        g_sub = preimage_subgroup(hom, current.subgroup.eset)
        a_sub = Subgroup.from_elements(g_sub.group, hom.kernel_set())
        cg = CGroup(g_sub.group, upper.c)
        inst = LiftInstance.build(cg, a_sub)
        res = lift_frobenius(inst)
        if not revalidate(inst, res)["ok"]:
            raise InternalInconsistency("tower level lift failed revalidation")
        h_cg = CGroup(res.subgroup.group, upper.c)
        pruned = prune_kernel_primes(h_cg, res.structure, allowed)
        if pruned.degenerate:
            raise InternalInconsistency(
                "pruning emptied a kernel that surjects onto the base")
        f_next = Subgroup.from_elements(upper.group, pruned.group.group.eset)
        # coherence: the map restricted to the lift covers the level below
        image = {hom(x) for x in f_next.eset}
        if image != set(current.subgroup.eset):
            raise InternalInconsistency(
                "pruned lift does not map onto the previous level")
        kern_meet = f_next.eset & hom.kernel_set()
        expect_kernel = len(f_next.eset) // current.subgroup.order
        if len(kern_meet) != expect_kernel:
            raise InternalInconsistency("level kernel mismatch")
        if tuple(sorted(pruned.structure.primes)) != allowed:
            raise InternalInconsistency("kernel primes drifted after pruning")
        reports.append(TowerLevelReport(
            subgroup=f_next, structure=pruned.structure,
            pruned_primes=pruned.dropped, trace=res.trace))
    return reports


@dataclass(frozen=True)
class PruneResult:
    degenerate: bool
    group: Optional[CGroup]
    structure: Optional[FrobeniusStructure]
    dropped: tuple


def prune_kernel_primes(cg: CGroup, structure: FrobeniusStructure,
                        allowed: Sequence[int]) -> PruneResult:
    """C*K' where K' is the allowed-part of the kernel; degenerate (flagged,
    not silent) when no kernel survives."""
    allowed_set = set(allowed)
    drop = 1
    dropped = []
    for p in sorted(structure.primes):
        if p not in allowed_set:
            drop *= structure.primes[p][0]
            dropped.append(p)
    if drop == structure.kernel_order:
        c_only = subgroup_closure(cg.group, [cg.c])
        sub_cg = CGroup(PermGroup.from_elements(cg.group.degree, c_only.eset),
                        cg.c)
        return PruneResult(degenerate=True, group=sub_cg, structure=None,
                           dropped=tuple(dropped))
    k_new = ppow(structure.kernel_generator, drop)
    sub = subgroup_closure(cg.group, [cg.c, k_new])
    sub_cg = CGroup(PermGroup.from_elements(cg.group.degree, sub.eset), cg.c)
    s = is_c_frobenius(sub_cg)
    if isinstance(s, FrobeniusRefusal):
        raise InternalInconsistency(
            f"pruned subgroup lost the Frobenius property: {s.reason}")
    return PruneResult(degenerate=False, group=sub_cg, structure=s,
                       dropped=tuple(dropped))


# -- free product shadows ----------------------------------------------------

@dataclass(frozen=True)
class EmbedResult:
    hom_b: GroupHom
    hom_c: GroupHom
    generates: bool
    commutator_generates: bool
    witness: dict


def free_product_epimorphism(b_group: PermGroup, beta: GroupHom,
                             f_cg: CGroup,
                             structure: Optional[FrobeniusStructure] = None
                             ) -> EmbedResult:
    """The pair (b -> beta(b)^k, identity on C) landing in F; surjectivity
    is equivalent to k^-1 * k^c generating the kernel, and both sides are
    computed independently and compared."""
    if structure is None:
        s = is_c_frobenius(f_cg)
        if isinstance(s, FrobeniusRefusal):
            raise ValidationError(f"target is not C-Frobenius: {s.reason}")
        structure = s
    c_sub_els = cyclic_power_set(f_cg.c, f_cg.group.degree)
    c_set = frozenset(c_sub_els)
    if beta.source.eset != b_group.eset:
        raise ValidationError("beta must start at the given group")
    if not set(beta.image_set()) <= c_set:
        raise NotSurjective("beta must land in the distinguished C")
    if len(beta.image_set()) != len(c_set):
        raise NotSurjective("beta is not onto the distinguished C")
    k = structure.kernel_generator
    if structure.kernel_order < 2:
        raise DegenerateKernel("target kernel is trivial")
    kinv = pinv(k)

    def conj_k(x: Perm) -> Perm:
        return pmul(pmul(kinv, x), k)

    # beta lands in <c> inside F's points already: interpret images in F
    hom_b = GroupHom(b_group, f_cg.group,
                     [conj_k(beta(g)) for g in b_group.generators],
                     _map={x: conj_k(beta(x)) for x in b_group.elements})
    c_group = PermGroup.from_elements(f_cg.group.degree, c_set, name="C")
    hom_c = GroupHom(c_group, f_cg.group, c_group.generators,
                     _map={x: x for x in c_group.elements})
    gens = list(hom_b.image_set()) + list(c_sub_els)
    image = subgroup_closure(f_cg.group, sorted(set(gens)))
    generates = image.order == f_cg.group.order

    comm = pmul(kinv, pconj(k, f_cg.c))  # k^-1 * k^c
    commutator_generates = porder(comm) == structure.kernel_order
    if generates != commutator_generates:
        raise InternalInconsistency(
            "closure test and commutator-generation test disagree")
    if not generates:
        raise DegenerateKernel("image does not cover the target")
    witness = {
        "commutator_order": porder(comm),
        "kernel_order": structure.kernel_order,
        "image_order": image.order,
    }
    return EmbedResult(hom_b=hom_b, hom_c=hom_c, generates=generates,
                       commutator_generates=commutator_generates,
                       witness=witness)


@dataclass(frozen=True)
class FreeProductShadow:
    factor1: PermGroup
    factor2: PermGroup
    target: CGroup
    phi1: GroupHom
    phi2: GroupHom
    generates: bool


@dataclass(frozen=True)
class PopReport:
    level: int
    shadow: FreeProductShadow
    embedded_order: int
    action_exponent: int
    intersection_order: int
    intersection_prime_powers: tuple
    conjugates_scanned: int
    contained_in_factor_conjugate: bool
    order_factorization: tuple


def _least_order_n_exponent(n: int, modulus: int) -> int:
    for m in range(2, modulus):
        acc, order = m, 1
        ok = True
        while acc != 1:
            acc = (acc * m) % modulus
            order += 1
            if order > n:
                ok = False
                break
        if ok and order == n:
            return m
    raise ValidationError(f"no element of order {n} modulo {modulus}")


def pop_certificate_data(level: int, cap: Optional[int] = None) -> PopReport:
    """The order 6*7^level witness: both cyclic factors embed into the
    Frobenius group, generate it, the second factor meets the embedded
    subgroup in the full order-6 group (not a prime power), and no
    conjugate of either factor image contains it."""
    if level < 1:
        raise ValidationError("level must be at least 1")
    if cap is None:
        cap = get_caps().closure
    n_k = 7**level
    if 6 * n_k > cap:
        raise CapExceeded(f"level {level} group exceeds the closure cap")
    m = _least_order_n_exponent(6, n_k)
    c = tuple((j * m) % n_k for j in range(n_k))
    k = tuple((j + 1) % n_k for j in range(n_k))
    group = PermGroup(n_k, [c, k], name=f"F{6 * n_k}")
    f_cg = CGroup(group, c)
    s = is_c_frobenius(f_cg)
    if isinstance(s, FrobeniusRefusal):
        raise InternalInconsistency(f"pop target not Frobenius: {s.reason}")
    z6 = PermGroup(6, [tuple(list(range(1, 6)) + [0])], name="Z6")
    beta = GroupHom(z6, group, [c])
    embed = free_product_epimorphism(z6, beta, f_cg, structure=s)
    phi2 = GroupHom(z6, group, [c])
    phi1 = embed.hom_b
    if not (phi1.is_injective() and phi2.is_injective()):
        raise InternalInconsistency("factor embeddings must be injective")
    shadow = FreeProductShadow(factor1=z6, factor2=z6, target=f_cg,
                               phi1=phi1, phi2=phi2,
                               generates=embed.generates)
    h_set = group.eset  # the embedded Frobenius subgroup is everything here
    im2 = phi2.image_set()
    inter = h_set & im2
    primes = prime_factors(len(inter))
    contained = False
    scanned = 0
    for image in (phi1.image_set(), phi2.image_set()):
        for g in group.elements:
            scanned += 1
            conj = frozenset(pconj(x, g) for x in image)
            if h_set <= conj:
                contained = True
    factorization = tuple(sorted(
        (p, p_part(group.order, p)) for p in prime_factors(group.order)))
    return PopReport(level=level, shadow=shadow,
                     embedded_order=group.order,
                     action_exponent=m,
                     intersection_order=len(inter),
                     intersection_prime_powers=tuple(primes),
                     conjugates_scanned=scanned,
                     contained_in_factor_conjugate=contained,
                     order_factorization=factorization)
