"""Finite permutation groups with materialized element sets.

Everything is desk scale: groups are closed by breadth-first multiplication
into an explicit sorted element tuple, and subgroup operations
(normalizers, centralizers, Sylow subgroups, minimal normal subgroups) are
honest scans over that set.  Whenever an operation has to pick an element
it picks the lexicographically least eligible one, so results are
reproducible bit for bit.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .caps import get_caps
from .errors import CapExceeded, InternalInconsistency, TrivialGroup, ValidationError
from .perms import Perm, identity, pconj, pinv, pmul, porder, ppow


def close_under_product(degree: int, gens: Sequence[Perm], cap: int | None = None):
    """BFS closure of a generating set; returns a sorted element list."""
    if cap is None:
        cap = get_caps().closure
    idp = identity(degree)
    gens = [g for g in dict.fromkeys(gens) if g != idp]
    els = {idp}
    frontier = [idp]
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                y = tuple(map(g.__getitem__, x))
                if y not in els:
                    els.add(y)
                    if len(els) > cap:
                        raise CapExceeded(
                            f"closure exceeded cap {cap} on degree {degree}"
                        )
                    new.append(y)
        frontier = new
    return sorted(els)


class PermGroup:
    """Permutation group with a materialized, lexicographically sorted
    element tuple."""

    __slots__ = ("degree", "generators", "elements", "eset", "order", "name")

    def __init__(self, degree: int, generators: Sequence[Perm],
                 cap: int | None = None, name: str = "",
                 _elements: Sequence[Perm] | None = None):
        for g in generators:
            if len(g) != degree or sorted(g) != list(range(degree)):
                raise ValidationError(f"generator {g!r} is not a permutation "
                                      f"of degree {degree}")
        self.degree = degree
        self.generators = tuple(generators)
        if _elements is None:
            elements = close_under_product(degree, self.generators, cap)
        else:
            elements = list(_elements)
        self.elements = tuple(elements)
        self.eset = frozenset(elements)
        self.order = len(elements)
        self.name = name

    # -- basics ---------------------------------------------------------

    def __contains__(self, perm: Perm) -> bool:
        return perm in self.eset

    def __repr__(self) -> str:
        label = self.name or "PermGroup"
        return f"<{label} degree={self.degree} order={self.order}>"

    def identity(self) -> Perm:
        return identity(self.degree)

    def is_subset(self, other: "PermGroup") -> bool:
        return self.degree == other.degree and self.eset <= other.eset

    @classmethod
    def from_elements(cls, degree: int, elements: Iterable[Perm],
                      name: str = "", verify: bool = True,
                      cap: int | None = None) -> "PermGroup":
        """Build a group from a known element set.

        Generators are chosen greedily in lexicographic order; with
        ``verify`` the closure of those generators is recomputed and must
        reproduce the set exactly.
        """
        els = sorted(set(elements))
        if not els:
            raise ValidationError("empty element set")
        gens = generating_subset(degree, els)
        if verify:
            closed = close_under_product(degree, gens, cap)
            if closed != els:
                raise ValidationError("element set is not a group")
        return cls(degree, gens, name=name, _elements=els)

    @classmethod
    def trivial(cls, degree: int) -> "PermGroup":
        return cls(degree, [], _elements=[identity(degree)])


def generating_subset(degree: int, sorted_elements: Sequence[Perm]) -> list[Perm]:
    """Lex-greedy irredundant generators for a known group element list."""
    idp = identity(degree)
    gens: list[Perm] = []
    have = {idp}
    total = len(sorted_elements)
    for x in sorted_elements:
        if x in have:
            continue
        gens.append(x)
        have = set(close_under_product(degree, gens, cap=total + 1))
        if len(have) == total:
            break
    return gens


class Subgroup:
    """A subgroup handle: parent group plus generators, materialized."""

    __slots__ = ("parent", "generators", "group")

    def __init__(self, parent: PermGroup, generators: Sequence[Perm],
                 _elements: Sequence[Perm] | None = None, name: str = ""):
        self.parent = parent
        self.generators = tuple(generators)
        self.group = PermGroup(parent.degree, self.generators,
                               name=name, _elements=_elements)
        if _elements is None and not self.group.eset <= parent.eset:
            raise ValidationError("subgroup generators leave the parent group")

    @classmethod
    def from_elements(cls, parent: PermGroup, elements: Iterable[Perm],
                      name: str = "") -> "Subgroup":
        els = sorted(set(elements))
        if not set(els) <= parent.eset:
            raise ValidationError("subgroup elements leave the parent group")
        gens = generating_subset(parent.degree, els)
        return cls(parent, gens, _elements=els, name=name)

    @property
    def order(self) -> int:
        return self.group.order

    @property
    def eset(self) -> frozenset:
        return self.group.eset

    @property
    def elements(self) -> tuple:
        return self.group.elements

    def __contains__(self, perm: Perm) -> bool:
        return perm in self.group.eset

    def __repr__(self) -> str:
        return (f"<Subgroup order={self.group.order} of "
                f"order-{self.parent.order} group>")


def as_group(g) -> PermGroup:
    return g.group if isinstance(g, Subgroup) else g


# -- elementary queries --------------------------------------------------

def cyclic_subgroup(parent: PermGroup, x: Perm, name: str = "") -> Subgroup:
    n = porder(x)
    els = []
    cur = identity(parent.degree)
    for _ in range(n):
        els.append(cur)
        cur = pmul(cur, x)
    return Subgroup(parent, [x] if n > 1 else [], _elements=sorted(els), name=name)


def element_orders(group: PermGroup) -> dict:
    return {x: porder(x) for x in group.elements}


def is_normal(parent: PermGroup, sub: Subgroup) -> bool:
    for g in parent.generators:
        for h in sub.generators:
            if pconj(h, g) not in sub.eset:
                return False
    return True


def normalizer(parent: PermGroup, sub: Subgroup) -> Subgroup:
    """N_parent(sub), by scanning the parent's elements."""
    gens = sub.generators
    sset = sub.eset
    members = [g for g in parent.elements
               if all(pconj(h, g) in sset for h in gens)]
    return Subgroup.from_elements(parent, members)


def centralizer(parent: PermGroup, x: Perm) -> Subgroup:
    """C_parent(x); x may lie outside the group (e.g. a realized
    automorphism), only degrees must match."""
    members = [g for g in parent.elements if pmul(g, x) == pmul(x, g)]
    return Subgroup.from_elements(parent, members)


def centralizer_of_set(parent: PermGroup, xs: Iterable[Perm]) -> Subgroup:
    xs = list(xs)
    members = [g for g in parent.elements
               if all(pmul(g, x) == pmul(x, g) for x in xs)]
    return Subgroup.from_elements(parent, members)


def center(group: PermGroup) -> Subgroup:
    return centralizer_of_set(group, group.generators)


def conjugate_subgroup(parent: PermGroup, sub: Subgroup, g: Perm) -> Subgroup:
    els = sorted(pconj(h, g) for h in sub.elements)
    return Subgroup.from_elements(parent, els)


def subgroup_closure(parent: PermGroup, perms: Sequence[Perm],
                     name: str = "") -> Subgroup:
    sub = Subgroup(parent, [p for p in dict.fromkeys(perms)
                            if p != identity(parent.degree)], name=name)
    return sub


def intersection(parent: PermGroup, a: Subgroup, b: Subgroup) -> Subgroup:
    small, big = (a, b) if a.order <= b.order else (b, a)
    els = [x for x in small.elements if x in big.eset]
    return Subgroup.from_elements(parent, els)


def conjugacy_classes(group: PermGroup) -> list[tuple]:
    """Classes as sorted tuples, ordered by their least element."""
    seen: set = set()
    classes = []
    for x in group.elements:
        if x in seen:
            continue
        orbit = {x}
        frontier = [x]
        while frontier:
            new = []
            for y in frontier:
                for g in group.generators:
                    z = pconj(y, g)
                    if z not in orbit:
                        orbit.add(z)
                        new.append(z)
            frontier = new
        seen |= orbit
        classes.append(tuple(sorted(orbit)))
    return classes


def normal_closure(parent: PermGroup, seeds: Sequence[Perm]) -> Subgroup:
    """Smallest normal subgroup of parent containing the seeds."""
    idp = identity(parent.degree)
    gens = [s for s in dict.fromkeys(seeds) if s != idp]
    if not gens:
        return Subgroup(parent, [], _elements=[idp])
    eset = set(close_under_product(parent.degree, gens))
    queue = list(gens)
    while queue:
        x = queue.pop()
        for g in parent.generators:
            y = pconj(x, g)
            if y not in eset:
                gens.append(y)
                queue.append(y)
                eset = set(close_under_product(parent.degree, gens))
    return Subgroup(parent, gens, _elements=sorted(eset))


def derived_subgroup(group: PermGroup) -> Subgroup:
    comms = []
    for a in group.generators:
        for b in group.generators:
            comms.append(pmul(pmul(pinv(a), pinv(b)), pmul(a, b)))
    return normal_closure(group, comms)


def is_solvable(group: PermGroup) -> bool:
    cur = group
    while cur.order > 1:
        nxt = derived_subgroup(cur).group
        if nxt.order == cur.order:
            return False
        cur = nxt
    return True


def is_abelian(group: PermGroup) -> bool:
    gens = group.generators
    return all(pmul(a, b) == pmul(b, a) for a in gens for b in gens)


def minimal_normal_subgroups(group: PermGroup,
                             inside: Subgroup | None = None) -> list[Subgroup]:
    """All minimal normal subgroups of the group (optionally only those
    contained in ``inside``).

    Every minimal normal subgroup is the normal closure of any of its
    non-identity elements, so the candidates are the normal closures of
    class representatives.
    """
    if group.order <= 1:
        raise TrivialGroup("the trivial group has no minimal normal subgroups")
    idp = group.identity()
    restrict = inside.eset if inside is not None else None
    closures: dict[frozenset, Subgroup] = {}
    for cls in conjugacy_classes(group):
        rep = cls[0]
        if rep == idp:
            continue
        if restrict is not None and rep not in restrict:
            continue
        ncl = normal_closure(group, [rep])
        if restrict is not None and not ncl.eset <= restrict:
            continue
        closures.setdefault(ncl.eset, ncl)
    result = []
    for key, sub in closures.items():
        if not any(other < key for other in closures if other != key):
            result.append(sub)
    result.sort(key=lambda s: (s.order, s.elements))
    return result


def sylow_containing(parent: PermGroup, p: int, seed: Subgroup | None = None) -> Subgroup:
    """Extend a p-subgroup (default: trivial) to a full Sylow p-subgroup.

    Textbook normalizer ladder: while |P| is short of the p-part, pick the
    least x in N(P) \\ P with x^p in P and extend.  No randomness.
    """
    target = 1
    n = parent.order
    while n % p == 0:
        target *= p
        n //= p
    if seed is None:
        pset: set = {parent.identity()}
        pgens: list[Perm] = []
    else:
        if target % seed.order != 0:
            raise ValidationError("seed is not a p-subgroup for this prime")
        pset = set(seed.eset)
        pgens = list(seed.generators)
    while len(pset) < target:
        if pgens:
            norm_members = (g for g in parent.elements
                            if all(pconj(h, g) in pset for h in pgens))
        else:
            norm_members = iter(parent.elements)
        found = None
        for x in norm_members:
            if x in pset:
                continue
            if ppow(x, p) in pset:
                found = x
                break
        if found is None:
            raise InternalInconsistency("Sylow extension step found no element")
        pgens.append(found)
        pset = set(close_under_product(parent.degree, pgens))
    return Subgroup(parent, pgens, _elements=sorted(pset))


def sylow_subgroup(parent: PermGroup, p: int) -> Subgroup:
    """Deterministic Sylow p-subgroup (trivial when p does not divide |G|)."""
    if p < 2 or any(p % k == 0 for k in range(2, int(p ** 0.5) + 1)):
        raise ValidationError(f"{p} is not prime")
    return sylow_containing(parent, p)


def p_part(n: int, p: int) -> int:
    part = 1
    while n % p == 0:
        part *= p
        n //= p
    return part


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def product_order(a_set: frozenset, b_set: frozenset) -> int:
    """|AB| = |A||B| / |A \\cap B| for subgroups given as element sets."""
    inter = len(a_set & b_set)
    return len(a_set) * len(b_set) // inter


def coset_product_set(a_els: Sequence[Perm], b_els: Sequence[Perm]) -> set:
    return {pmul(a, b) for a in a_els for b in b_els}


def direct_product(g1: PermGroup, g2: PermGroup, name: str = "") -> PermGroup:
    """External direct product acting on the disjoint union of the point sets."""
    d1, d2 = g1.degree, g2.degree
    id1, id2 = identity(d1), identity(d2)

    def embed(a: Perm, b: Perm) -> Perm:
        return a + tuple(v + d1 for v in b)

    gens = [embed(a, id2) for a in g1.generators]
    gens += [embed(id1, b) for b in g2.generators]
    els = sorted(embed(a, b) for a in g1.elements for b in g2.elements)
    return PermGroup(d1 + d2, gens, name=name, _elements=els)


def all_subgroups(group: PermGroup, limit: int = 220) -> list[Subgroup]:
    """Full subgroup lattice by joining cyclic subgroups; desk scale only."""
    if group.order > limit:
        raise CapExceeded(f"subgroup enumeration limited to order {limit}")
    idp = group.identity()
    cyclic: dict[frozenset, Perm] = {}
    for x in group.elements:
        if x == idp:
            continue
        sub = cyclic_subgroup(group, x)
        cyclic.setdefault(sub.eset, x)
    found: dict[frozenset, list[Perm]] = {frozenset([idp]): []}
    queue = [[]]
    for eset, gen in sorted(cyclic.items(), key=lambda kv: kv[1]):
        if eset not in found:
            found[eset] = [gen]
            queue.append([gen])
    atoms = sorted(cyclic.values())
    while queue:
        gens = queue.pop()
        cur_set = set(close_under_product(group.degree, gens))
        for a in atoms:
            if a in cur_set:
                continue
            new_gens = gens + [a]
            new_els = frozenset(close_under_product(group.degree, new_gens))
            if new_els not in found:
                found[new_els] = new_gens
                queue.append(new_gens)
    subs = [Subgroup(group, gens, _elements=sorted(els))
            for els, gens in found.items()]
    subs.sort(key=lambda s: (s.order, s.elements))
    return subs
