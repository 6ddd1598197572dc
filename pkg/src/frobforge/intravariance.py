"""Intravariance certificates and the constructive product machinery.

A subgroup H of G is intravariant under an acting set when every actor
image H^x is conjugate in G to H.  Witnesses are always the
lexicographically least conjugating element; the search space G is indexed
once per subgroup (conjugation targets depend only on the coset of the
normalizer), so the certificate for a full automorphism action is cheap.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Union

from .errors import (BadPrime, HypothesisViolated, InternalInconsistency,
                     NotDirectProduct, NotIntravariant, ValidationError)
from .frobenius import CGroup, FrobeniusStructure, kernel_subgroup
from .groups import (PermGroup, Subgroup, centralizer_of_set, cyclic_subgroup,
                     is_solvable, normalizer, prime_factors, subgroup_closure,
                     sylow_containing, sylow_subgroup)
from .homs import GroupHom, automorphism_group
from .perms import Perm, identity, pconj, pinv, pmul, porder

Actor = Union[Perm, GroupHom]


def _actor_image(sub_elements, actor: Actor) -> frozenset:
    if isinstance(actor, GroupHom):
        return frozenset(actor(h) for h in sub_elements)
    return frozenset(pconj(h, actor) for h in sub_elements)


def _actor_label(actor: Actor) -> str:
    from .perms import format_perm
    if isinstance(actor, GroupHom):
        return "hom:" + ";".join(format_perm(im) for im in actor.gen_images)
    return format_perm(actor)


@dataclass(frozen=True)
class IntravarianceCertificate:
    subgroup_elements: tuple
    witnesses: tuple  # ((actor, witness Perm), ...)

    def verify(self) -> bool:
        base = frozenset(self.subgroup_elements)
        for actor, g in self.witnesses:
            if _actor_image(self.subgroup_elements, actor) != \
                    frozenset(pconj(h, g) for h in base):
                return False
        return True


@dataclass(frozen=True)
class IntravarianceRefusal:
    failing_actor: object
    detail: str = ""

    def __bool__(self):
        return False


def intravariance_check(ambient: PermGroup, sub: Subgroup,
                        actors: Sequence[Actor]):
    """Certificate with the lex-least witness per actor, or a refusal
    carrying the first failing actor.

    Scanning ambient in element order, the first g with H^g equal to a
    given target is recorded; later actors reuse the table, which yields
    exactly the witness a naive lexicographic scan would find.
    """
    sub_els = sub.elements
    targets: dict[frozenset, Perm] = {}
    for g in ambient.elements:
        img = frozenset(pconj(h, g) for h in sub_els)
        if img not in targets:
            targets[img] = g
    witnesses = []
    for actor in actors:
        img = _actor_image(sub_els, actor)
        g = targets.get(img)
        if g is None:
            return IntravarianceRefusal(
                failing_actor=actor,
                detail=f"image of actor {_actor_label(actor)} is not an "
                       f"ambient conjugate of the subgroup")
        witnesses.append((actor, g))
    cert = IntravarianceCertificate(subgroup_elements=tuple(sub_els),
                                    witnesses=tuple(witnesses))
    if not cert.verify():
        raise InternalInconsistency("intravariance witnesses failed recheck")
    return cert


# -- Sylow subgroups normalized by a given subgroup -------------------------

def normalized_sylow(parent: PermGroup, normal_sub: Subgroup, r_sub: Subgroup,
                     p: Optional[int] = None) -> Subgroup:
    """A Sylow subgroup of a normal subgroup S normalized by the r-group R.

    If r divides |S| the result is Q \\cap S for Q a Sylow r-subgroup of the
    parent containing R.  Otherwise a prime p dividing |S| must be given and
    the result is the first conjugate of a Sylow p-subgroup of S that R
    normalizes (Frattini guarantees one exists).
    """
    r_primes = prime_factors(r_sub.order)
    if len(r_primes) > 1:
        raise ValidationError("R must be an r-group for a single prime r")
    r = r_primes[0] if r_primes else None
    if r is not None and normal_sub.order % r == 0:
        q_full = sylow_containing(parent, r, seed=r_sub)
        inter = [x for x in q_full.elements if x in normal_sub.eset]
        result = Subgroup.from_elements(parent, inter)
    else:
        if p is None or normal_sub.order % p != 0 or p in (r,):
            raise BadPrime(
                "need a prime p dividing |S| when r does not divide |S|")
        base = sylow_containing(normal_sub.group, p)
        result = None
        for g in parent.elements:
            cand = frozenset(pconj(x, g) for x in base.eset)
            if all(pconj(x, rho) in cand for x in cand
                   for rho in r_sub.generators):
                result = Subgroup.from_elements(parent, cand)
                break
        if result is None:
            raise InternalInconsistency(
                "no R-normalized Sylow conjugate found (Frattini violated)")
    for x in result.generators:
        for rho in r_sub.generators:
            if pconj(x, rho) not in result.eset:
                raise InternalInconsistency("result is not R-normalized")
    return result


# -- products of intravariant subgroups (transitively permuted factors) -----

def validate_internal_direct_product(ambient: PermGroup, total: Subgroup,
                                     factors: Sequence[Subgroup]):
    """Order product, pairwise trivial intersections and pairwise
    commutation; the three together make the product internal direct."""
    prod = 1
    for f in factors:
        prod *= f.order
        if not f.eset <= total.eset:
            raise NotDirectProduct("factor leaves the product subgroup")
    if prod != total.order:
        raise NotDirectProduct(
            f"orders multiply to {prod}, product subgroup has {total.order}")
    for i, f1 in enumerate(factors):
        for f2 in factors[i + 1:]:
            if len(f1.eset & f2.eset) != 1:
                raise NotDirectProduct("factors intersect nontrivially")
            for a in f1.generators:
                for b in f2.generators:
                    if pmul(a, b) != pmul(b, a):
                        raise NotDirectProduct("factors do not commute")


def conjugate_set(els, g: Perm) -> frozenset:
    return frozenset(pconj(x, g) for x in els)


def product_intravariant_subgroup(
        ambient: PermGroup, total: Subgroup, factors: Sequence[Subgroup],
        u1: Subgroup, reps: Sequence[Perm],
        witness_actors: Optional[Sequence[Perm]] = None):
    """U = product over coset representatives of U1 conjugates; certifies
    that U is intravariant in the normal product subgroup.

    ``factors`` are the transitively permuted direct factors (first entry
    is the base factor Q1 containing U1); ``reps`` holds one representative
    per right coset of N(Q1).  Witnesses follow the constructive recipe:
    per coset the returning element lands in N(Q1), its conjugation of U1
    is matched inside Q1, and the pieces multiply to an element of the
    product subgroup.
    """
    q1 = factors[0]
    validate_internal_direct_product(ambient, total, factors)
    if not u1.eset <= q1.eset:
        raise ValidationError("U1 must lie in the base factor")
    g1 = normalizer(ambient, q1)
    # sanity: reps enumerate the cosets of G1
    seen = set()
    for z in reps:
        if z not in ambient.eset:
            raise ValidationError("representative outside the group")
        coset = frozenset(pmul(x, z) for x in g1.eset)
        if coset in seen:
            raise ValidationError("duplicate coset representative")
        seen.add(coset)
    if len(seen) != ambient.order // g1.order:
        raise ValidationError("need exactly one representative per coset")

    u_gens = []
    for z in reps:
        u_gens.extend(pconj(x, z) for x in u1.generators)
    u = subgroup_closure(ambient, u_gens, name="U")
    if not u.eset <= total.eset:
        raise InternalInconsistency("product subgroup left the ambient product")

    coset_lookup = {}
    for z in reps:
        for x in g1.eset:
            coset_lookup[pmul(x, z)] = z

    def witness_for(g: Perm) -> Perm:
        parts = []
        for z in reps:
            zg = pmul(z, g)
            z2 = coset_lookup[zg]
            back = pmul(zg, pinv(z2))  # lies in G1
            target = conjugate_set(u1.eset, back)
            b = None
            for cand in q1.elements:
                if conjugate_set(u1.eset, cand) == target:
                    b = cand
                    break
            if b is None:
                raise NotIntravariant(
                    "U1 is not G1-intravariant in the base factor")
            parts.append(pconj(b, z2))
        a = identity(ambient.degree)
        for part in parts:
            a = pmul(a, part)
        if conjugate_set(u.eset, g) != conjugate_set(u.eset, a):
            raise InternalInconsistency("constructed witness failed")
        return a

    actors = tuple(witness_actors if witness_actors is not None
                   else ambient.generators)
    witnesses = tuple((g, witness_for(g)) for g in actors)
    cert = IntravarianceCertificate(subgroup_elements=tuple(u.elements),
                                    witnesses=witnesses)
    # final claim: U1 not normal in Q1 forces U not normal in A
    u1_normal = all(pconj(x, g) in u1.eset
                    for x in u1.generators for g in q1.generators)
    u_normal = all(pconj(x, g) in u.eset
                   for x in u.generators for g in total.generators)
    if not u1_normal and u_normal:
        raise InternalInconsistency(
            "U1 non-normal in Q1 but the product is normal in A")
    return u, cert


@dataclass(frozen=True)
class CentralizerReport:
    automorphism_count: int
    min_centralizer_order: int
    all_nontrivial: bool


def centralizer_nontrivial_check(group: PermGroup,
                                 cap: Optional[int] = None) -> CentralizerReport:
    """For a nonsolvable group, iterate all automorphisms and verify each
    has a nontrivial fixed-point subgroup; reports the minimum order."""
    if is_solvable(group):
        raise HypothesisViolated("check applies to nonsolvable groups only")
    auts = automorphism_group(group, cap=cap)
    min_order = group.order
    for phi in auts:
        fixed = sum(1 for x in group.elements if phi(x) == x)
        min_order = min(min_order, fixed)
    return CentralizerReport(automorphism_count=len(auts),
                             min_centralizer_order=min_order,
                             all_nontrivial=min_order > 1)


def c_compatible_representatives(ambient: PermGroup, total: Subgroup,
                                 factors: Sequence[Subgroup], c: Perm,
                                 u1: Subgroup) -> list[Perm]:
    """Coset representatives of N(Q1) making the product subgroup
    C-invariant.

    On the coset space, the orbit of the trivial coset under <c> picks its
    representatives inside <c>; every other orbit must be free and reuses
    the lex-least element of its least coset, translated along the orbit.
    """
    q1 = factors[0]
    g1 = normalizer(ambient, q1)
    c_sub = cyclic_subgroup(ambient, c)
    c1 = sorted(c_sub.eset & g1.eset)
    for x in c1:
        img = conjugate_set(u1.eset, x)
        if img != frozenset(u1.eset):
            raise HypothesisViolated(
                "U1 is not invariant under the stabilizer part of C")
    # enumerate right cosets of G1, keyed by lex-least member
    coset_of: dict[Perm, Perm] = {}
    cosets: list[Perm] = []
    for x in ambient.elements:
        if x in coset_of:
            continue
        members = sorted(pmul(h, x) for h in g1.eset)
        key = members[0]
        cosets.append(key)
        for mem in members:
            coset_of[mem] = key

    c_order = porder(c)
    cpows = [identity(ambient.degree)]
    for _ in range(c_order - 1):
        cpows.append(pmul(cpows[-1], c))

    reps: dict[Perm, Perm] = {}
    base_key = coset_of[identity(ambient.degree)]
    # orbit of the trivial coset: representative c^j for the first power
    # reaching each coset
    for cj in cpows:
        key = coset_of[cj]
        if key not in reps:
            reps[key] = cj
    assigned = set(reps)
    for key in cosets:
        if key in assigned:
            continue
        # C-orbit of this coset
        orbit = []
        seen_orbit = set()
        for cj in cpows:
            k2 = coset_of[pmul(key, cj)]
            if k2 not in seen_orbit:
                seen_orbit.add(k2)
                orbit.append(k2)
        if len(orbit) != c_order:
            raise HypothesisViolated(
                "a coset outside the base orbit has a nontrivial "
                "C-stabilizer; stabilizer is not of the form C1*K1")
        start = min(orbit)
        zhat = start  # lex-least element of its own coset by construction
        for cj in cpows:
            k2 = coset_of[pmul(start, cj)]
            if k2 not in assigned:
                reps[k2] = pmul(zhat, cj)
                assigned.add(k2)
    ordered = [reps[key] for key in cosets]
    return ordered
