"""Groups with a distinguished cyclic subgroup and their Frobenius structure.

A CGroup is a finite group together with a chosen generator c of a cyclic
subgroup C.  Recognition finds the unique cyclic normal complement K (when
one exists) and checks, prime by prime, that |C| divides p-1 and that the
conjugation action of c on the p-part of K has multiplicative order
exactly |C|.  Refusals are values, not exceptions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .errors import (HypothesisViolated, InternalInconsistency, NotNormal,
                     NotTransitive, ValidationError)
from .groups import (PermGroup, Subgroup, cyclic_subgroup, p_part,
                     prime_factors)
from .homs import GroupHom, quotient_by_normal
from .perms import Perm, identity, pconj, pmul, porder, ppow


@dataclass(frozen=True)
class CGroup:
    group: PermGroup
    c: Perm

    def __post_init__(self):
        if self.c not in self.group.eset:
            raise ValidationError("distinguished element is not in the group")
        if porder(self.c) < 2:
            raise ValidationError("distinguished cyclic subgroup must be nontrivial")

    @property
    def c_order(self) -> int:
        return porder(self.c)

    def c_subgroup(self) -> Subgroup:
        return cyclic_subgroup(self.group, self.c, name="C")

    def c_set(self) -> frozenset:
        return self.c_subgroup().eset


@dataclass(frozen=True)
class FrobeniusStructure:
    """Witness that a CGroup decomposes as C x| K with fixed-point-free action."""

    c_order: int
    kernel_generator: Perm
    kernel_order: int
    primes: dict  # p -> (p_part_order, action_exponent)

    def prime_set(self) -> tuple:
        return tuple(sorted(self.primes))


@dataclass(frozen=True)
class FrobeniusRefusal:
    reason: str
    detail: str = ""

    def __bool__(self):
        return False


def cyclic_power_set(x: Perm, degree: int) -> list[Perm]:
    els = []
    cur = identity(degree)
    n = porder(x)
    for _ in range(n):
        els.append(cur)
        cur = pmul(cur, x)
    return els


def discrete_log_exponent(base: Perm, value: Perm, degree: int) -> Optional[int]:
    """Least m >= 0 with base^m == value, or None."""
    cur = identity(degree)
    for m in range(porder(base)):
        if cur == value:
            return m
        cur = pmul(cur, base)
    return None


def is_c_frobenius(cg: CGroup):
    """FrobeniusStructure on success, FrobeniusRefusal otherwise.

    Kernel search scans elements in lexicographic order for the generator
    of a cyclic normal complement to C; when the group is Frobenius that
    complement is unique, so the scan order never changes the answer.
    """
    group, c = cg.group, cg.c
    n_c = cg.c_order
    if group.order % n_c != 0:
        raise InternalInconsistency("Lagrange violated")
    n_k = group.order // n_c
    if n_k == 1:
        return FrobeniusRefusal("no-cyclic-normal-complement",
                                "group equals its distinguished C")
    c_set = cg.c_set()
    kernel_gen = None
    for x in group.elements:
        if porder(x) != n_k:
            continue
        powers = cyclic_power_set(x, group.degree)
        pset = set(powers)
        if not all(pconj(x, g) in pset for g in group.generators):
            continue
        if len(c_set & pset) != 1:
            continue
        kernel_gen = min(p for p in powers if porder(p) == n_k)
        break
    if kernel_gen is None:
        return FrobeniusRefusal("no-cyclic-normal-complement",
                                f"no normal cyclic subgroup of order {n_k} "
                                "meeting C trivially")
    primes = {}
    for p in prime_factors(n_k):
        if (p - 1) % n_c != 0:
            return FrobeniusRefusal(
                "complement-order-does-not-divide-p-minus-1",
                f"|C| = {n_c} does not divide p - 1 = {p - 1}")
        part = p_part(n_k, p)
        k_p = ppow(kernel_gen, n_k // part)
        conj = pconj(k_p, c)
        m = discrete_log_exponent(k_p, conj, group.degree)
        if m is None:
            raise InternalInconsistency("conjugate left the cyclic kernel")
        # multiplicative order of m modulo the p-part must be exactly |C|
        order = 1
        acc = m % part
        while acc != 1 % part:
            acc = (acc * m) % part
            order += 1
            if order > n_c:
                break
        if order != n_c:
            return FrobeniusRefusal(
                "unfaithful-p-action",
                f"action exponent {m} has order {order} != |C| = {n_c} "
                f"modulo {part}")
        primes[p] = (part, m)
    struct = FrobeniusStructure(c_order=n_c, kernel_generator=kernel_gen,
                                kernel_order=n_k, primes=primes)
    _assert_structure_invariants(cg, struct)
    return struct


def _assert_structure_invariants(cg: CGroup, s: FrobeniusStructure):
    c_primes = prime_factors(s.c_order)
    k_primes = sorted(s.primes)
    if c_primes and k_primes and max(c_primes) >= min(k_primes):
        raise InternalInconsistency("complement primes not below kernel primes")
    if s.kernel_order % 2 == 0:
        raise InternalInconsistency("Frobenius kernel of even order")


def definitional_frobenius_check(cg: CGroup, kernel_set: frozenset) -> bool:
    """Independent oracle: [c', k] != 1 for all nontrivial c' in C, k in K,
    with K the given procyclic normal complement."""
    idp = cg.group.identity()
    kernel = sorted(kernel_set)
    if len(kernel) * cg.c_order != cg.group.order:
        return False
    if len(cg.c_set() & kernel_set) != 1:
        return False
    # K must be a normal cyclic subgroup
    if not any(porder(k) == len(kernel) for k in kernel):
        return False
    for g in cg.group.generators:
        if any(pconj(k, g) not in kernel_set for k in kernel):
            return False
    for cp in cg.c_set():
        if cp == idp:
            continue
        for k in kernel:
            if k == idp:
                continue
            if pconj(k, cp) == k:
                return False
    return True


def kernel_subgroup(cg: CGroup, s: FrobeniusStructure) -> Subgroup:
    return cyclic_subgroup(cg.group, s.kernel_generator, name="K")


# -- quotients of C-groups -------------------------------------------------

@dataclass(frozen=True)
class CQuotient:
    kind: str  # "quotient-of-C" | "frobenius"
    quotient: PermGroup
    hom: GroupHom
    cgroup: Optional[CGroup] = None
    structure: Optional[FrobeniusStructure] = None


def quotient_c_group(cg: CGroup, s: FrobeniusStructure, normal: Subgroup) -> CQuotient:
    """Classify F/N as either a quotient of C or a Frobenius group over the
    image of C; also verifies that N is a subgroup of K or of the form C1*K."""
    group = cg.group
    for g in group.generators:
        for h in normal.generators:
            if pconj(h, g) not in normal.eset:
                raise NotNormal("subgroup is not normal")
    kern = kernel_subgroup(cg, s)
    if not normal.eset <= kern.eset:
        c1 = normal.eset & cg.c_set()
        prod = {pmul(a, b) for a in c1 for b in kern.eset}
        if prod != set(normal.eset):
            raise InternalInconsistency(
                "normal subgroup of a Frobenius group is neither inside K "
                "nor of the form C1*K")
    quotient, hom = quotient_by_normal(group, normal)
    cbar = hom(cg.c)
    if porder(cbar) == quotient.order:
        return CQuotient(kind="quotient-of-C", quotient=quotient, hom=hom)
    if porder(cbar) < 2:
        # C collapsed: still a quotient of C only if the whole thing is trivial
        if quotient.order == 1:
            return CQuotient(kind="quotient-of-C", quotient=quotient, hom=hom)
        raise InternalInconsistency("C collapsed but quotient is nontrivial")
    qc = CGroup(quotient, cbar)
    result = is_c_frobenius(qc)
    if isinstance(result, FrobeniusRefusal):
        raise InternalInconsistency(
            f"quotient of a C-Frobenius group refused recognition: "
            f"{result.reason}")
    return CQuotient(kind="frobenius", quotient=quotient, hom=hom,
                     cgroup=qc, structure=result)


# -- orbit analysis --------------------------------------------------------

@dataclass(frozen=True)
class OrbitReport:
    base_point: int
    c1_elements: tuple
    k1_elements: tuple
    c_orbit: tuple
    free_points: tuple


def orbit_report(cg: CGroup, s: FrobeniusStructure,
                 action_images: Optional[list] = None,
                 n_points: Optional[int] = None) -> OrbitReport:
    """Stabilizer decomposition of a transitive action of a Frobenius group.

    ``action_images`` gives one permutation of {0..n_points-1} per group
    generator (default: the natural action on the group's own points).
    Finds the base point whose stabilizer is exactly C1*K1 and verifies
    that every point outside its C-orbit has trivial C-stabilizer.
    """
    group = cg.group
    if action_images is None:
        action_hom = {x: x for x in group.elements}
        n_points = group.degree
    else:
        if n_points is None:
            raise ValidationError("n_points required with explicit action")
        act = GroupHom(group, PermGroup(n_points, action_images),
                       action_images)
        action_hom = {x: act(x) for x in group.elements}
    # transitivity
    orbit = {0}
    frontier = [0]
    images = [action_hom[g] for g in group.generators]
    while frontier:
        new = []
        for pt in frontier:
            for img in images:
                q = img[pt]
                if q not in orbit:
                    orbit.add(q)
                    new.append(q)
        frontier = new
    if len(orbit) != n_points:
        raise NotTransitive(f"action has orbit of size {len(orbit)} "
                            f"on {n_points} points")

    c_set = cg.c_set()
    k_set = kernel_subgroup(cg, s).eset
    base = None
    c1: frozenset = frozenset()
    k1: frozenset = frozenset()
    for pt in range(n_points):
        stab = {x for x in group.elements if action_hom[x][pt] == pt}
        cc = stab & c_set
        kk = stab & k_set
        if {pmul(a, b) for a in cc for b in kk} == stab:
            base, c1, k1 = pt, frozenset(cc), frozenset(kk)
            break
    if base is None:
        raise InternalInconsistency(
            "no point has a stabilizer of the form C1*K1")
    c_orbit = sorted({action_hom[x][base] for x in c_set})
    free = []
    for pt in range(n_points):
        if pt in c_orbit:
            continue
        cstab = [x for x in c_set if action_hom[x][pt] == pt]
        if len(cstab) != 1:
            raise InternalInconsistency(
                f"point {pt} outside the C-orbit of the base has "
                "nontrivial C-stabilizer")
        free.append(pt)
    return OrbitReport(base_point=base,
                       c1_elements=tuple(sorted(c1)),
                       k1_elements=tuple(sorted(k1)),
                       c_orbit=tuple(c_orbit),
                       free_points=tuple(free))


# -- constructions ---------------------------------------------------------

def valid_action_exponents(n_c: int, n_k: int) -> list[int]:
    """All m defining an action of Z/n_c on Z/n_k by k -> k^m."""
    out = []
    for m in range(n_k):
        if _gcd(m, n_k) != 1:
            continue
        if pow(m, n_c, n_k) == 1 % n_k:
            out.append(m)
    return out


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def build_cyclic_semidirect(n_c: int, n_k: int, m: int,
                            name: str = "") -> CGroup:
    """Z/n_c acting on Z/n_k by multiplication by m, realized faithfully on
    n_c + n_k points (a C-cycle block and a K block)."""
    if pow(m, n_c, n_k) != 1 % n_k or _gcd(m, n_k) != 1:
        raise ValidationError(f"exponent {m} does not define an action of "
                              f"Z/{n_c} on Z/{n_k}")
    deg = n_c + n_k
    c = tuple([(i + 1) % n_c for i in range(n_c)] +
              [n_c + (j * m) % n_k for j in range(n_k)])
    k = tuple(list(range(n_c)) + [n_c + (j + 1) % n_k for j in range(n_k)])
    cpows = cyclic_power_set(c, deg)
    kpows = cyclic_power_set(k, deg)
    els = sorted(pmul(a, b) for a in cpows for b in kpows)
    if len(set(els)) != n_c * n_k:
        raise InternalInconsistency("semidirect product has wrong order")
    group = PermGroup(deg, [c, k], name=name or f"Z{n_c}xZ{n_k}m{m}",
                      _elements=els)
    return CGroup(group, c)


def _mult_order(m: int, modulus: int) -> int:
    order = 1
    acc = m % modulus
    while acc != 1 % modulus:
        acc = (acc * m) % modulus
        order += 1
        if order > modulus:
            raise ValidationError(f"{m} is not a unit modulo {modulus}")
    return order


def least_faithful_exponent(n_c: int, n_k: int) -> int:
    """Least m acting with multiplicative order exactly n_c on every
    p-primary part of Z/n_k (the fixed-point-free criterion)."""
    for m in range(2, n_k):
        if _gcd(m, n_k) != 1:
            continue
        if all(_mult_order(m, p_part(n_k, p)) == n_c
               for p in prime_factors(n_k)):
            return m
    raise ValidationError(
        f"no exponent acts faithfully with order {n_c} on Z/{n_k}")


def build_frobenius_group(n_c: int, n_k: int, name: str = "") -> CGroup:
    """C x| K with the least faithful exponent, acting on n_k points."""
    m = least_faithful_exponent(n_c, n_k)
    c = tuple((j * m) % n_k for j in range(n_k))
    k = tuple((j + 1) % n_k for j in range(n_k))
    cpows = cyclic_power_set(c, n_k)
    kpows = cyclic_power_set(k, n_k)
    els = sorted(pmul(a, b) for a in cpows for b in kpows)
    if len(set(els)) != n_c * n_k:
        raise InternalInconsistency("Frobenius construction has wrong order")
    group = PermGroup(n_k, [c, k], name=name or f"F{n_c * n_k}", _elements=els)
    return CGroup(group, c)
