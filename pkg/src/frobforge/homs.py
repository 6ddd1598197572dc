"""Homomorphisms, quotients and automorphism groups.

A homomorphism is stored as generator images and is validated by the
graph-subgroup criterion: the pairs (g_i, images_i) generate a subgroup of
source x target whose order must equal |source|.  That closure doubles as
the evaluation table, so no presentations are ever needed.
"""

from __future__ import annotations

from array import array
from typing import Sequence

from .caps import get_caps
from .errors import (CapExceeded, InternalInconsistency, NotAHom, NotNormal,
                     ValidationError)
from .groups import (PermGroup, Subgroup, close_under_product, generating_subset)
from .perms import Perm, identity, pconj, pinv, pmul, porder


class GroupHom:
    """Validated homomorphism between materialized permutation groups."""

    __slots__ = ("source", "target", "gen_images", "_map")

    def __init__(self, source: PermGroup, target: PermGroup,
                 gen_images: Sequence[Perm], _map: dict | None = None):
        self.source = source
        self.target = target
        self.gen_images = tuple(gen_images)
        if len(self.gen_images) != len(source.generators):
            raise ValidationError("need exactly one image per source generator")
        for im in self.gen_images:
            if im not in target.eset:
                raise ValidationError("image element lies outside the target group")
        if _map is None:
            _map = _graph_map(source, target, self.gen_images)
        self._map = _map

    def __call__(self, x: Perm) -> Perm:
        return self._map[x]

    def kernel_set(self) -> frozenset:
        idt = self.target.identity()
        return frozenset(x for x, y in self._map.items() if y == idt)

    def kernel(self) -> Subgroup:
        return Subgroup.from_elements(self.source, self.kernel_set())

    def image_set(self) -> frozenset:
        return frozenset(self._map.values())

    def is_surjective(self) -> bool:
        return len(self.image_set()) == self.target.order

    def is_injective(self) -> bool:
        return len(self.image_set()) == self.source.order

    def preimage_set(self, targets: frozenset) -> frozenset:
        return frozenset(x for x, y in self._map.items() if y in targets)

    def __repr__(self) -> str:
        return (f"<GroupHom |src|={self.source.order} |im|="
                f"{len(self.image_set())} |tgt|={self.target.order}>")


def _graph_map(source: PermGroup, target: PermGroup,
               images: Sequence[Perm]) -> dict:
    """Close the graph subgroup in source x target; order must be |source|."""
    d1 = source.degree
    pairs = [g + tuple(v + d1 for v in im)
             for g, im in zip(source.generators, images)]
    try:
        els = close_under_product(d1 + target.degree, pairs,
                                  cap=source.order)
    except CapExceeded:
        raise NotAHom("graph subgroup is larger than the source group")
    if len(els) != source.order:
        raise NotAHom("graph subgroup order does not match the source group")
    mapping = {e[:d1]: tuple(v - d1 for v in e[d1:]) for e in els}
    if len(mapping) != source.order:
        raise NotAHom("graph subgroup is not the graph of a map")
    return mapping


def hom_from_generator_images(source: PermGroup, target: PermGroup,
                              images: Sequence[Perm]) -> GroupHom:
    return GroupHom(source, target, images)


def identity_hom(group: PermGroup) -> GroupHom:
    return GroupHom(group, group, group.generators,
                    _map={x: x for x in group.elements})


def compose(f: GroupHom, g: GroupHom) -> GroupHom:
    """x -> g(f(x))."""
    if f.target is not g.source and f.target.eset != g.source.eset:
        raise ValidationError("homs do not compose")
    return GroupHom(f.source, g.target, [g(f(x)) for x in f.source.generators],
                    _map={x: g(y) for x, y in f._map.items()})


def quotient_by_normal(group: PermGroup, normal: Subgroup):
    """G/N as a permutation group on the right cosets of N, plus the
    quotient epimorphism.

    Cosets are ordered by their lexicographically least element; the coset
    action of the quotient on itself is regular, so a quotient element is
    recovered from the image of coset 0, which makes hom evaluation O(1).
    """
    for g in group.generators:
        for h in normal.generators:
            if pconj(h, g) not in normal.eset:
                raise NotNormal("subgroup is not normal in the parent")
    nels = normal.elements
    coset_of: dict[Perm, int] = {}
    reps: list[Perm] = []
    for x in group.elements:
        if x in coset_of:
            continue
        idx = len(reps)
        reps.append(x)
        for n in nels:
            coset_of[pmul(n, x)] = idx
    index = len(reps)
    gen_images = [tuple(coset_of[pmul(r, g)] for r in reps)
                  for g in group.generators]
    quotient = PermGroup(index, gen_images, name=f"{group.name}/N".strip("/"))
    if quotient.order != group.order // normal.order:
        raise InternalInconsistency("quotient order mismatch")
    by_point0 = {q[0]: q for q in quotient.elements}
    mapping = {x: by_point0[coset_of[x]] for x in group.elements}
    hom = GroupHom(group, quotient, gen_images, _map=mapping)
    if hom.kernel_set() != normal.eset:
        raise InternalInconsistency("quotient kernel differs from N")
    return quotient, hom


def preimage_subgroup(hom: GroupHom, sub_elements: frozenset) -> Subgroup:
    els = hom.preimage_set(sub_elements)
    return Subgroup.from_elements(hom.source, els)


def restrict_to_subgroup(hom: GroupHom, sub: Subgroup) -> GroupHom:
    srcgroup = sub.group
    return GroupHom(srcgroup, hom.target,
                    [hom(g) for g in srcgroup.generators],
                    _map={x: hom(x) for x in srcgroup.elements})


# -- automorphism search --------------------------------------------------

def lex_generating_tuple(group: PermGroup) -> list[Perm]:
    return generating_subset(group.degree, group.elements)


class _CayleyIndex:
    """Index-based multiplication structure for a materialized group."""

    def __init__(self, group: PermGroup):
        els = group.elements
        self.els = els
        self.idx = {e: i for i, e in enumerate(els)}
        n = len(els)
        rows = []
        for a in els:
            rows.append(array("i", (self.idx[pmul(a, b)] for b in els)))
        self.mul = rows
        self.order = [porder(e) for e in els]
        self.inv = array("i", (self.idx[pinv(e)] for e in els))
        # conjugacy class sizes
        self.class_size = [0] * n
        seen = [False] * n
        gen_idx = [self.idx[g] for g in group.generators]
        for i in range(n):
            if seen[i]:
                continue
            orbit = {i}
            frontier = [i]
            while frontier:
                new = []
                for x in frontier:
                    for gi in gen_idx:
                        y = self.mul[self.mul[self.inv[gi]][x]][gi]
                        if y not in orbit:
                            orbit.add(y)
                            new.append(y)
                frontier = new
            for x in orbit:
                seen[x] = True
                self.class_size[x] = len(orbit)


def automorphism_group(group: PermGroup, cap: int | None = None) -> list[GroupHom]:
    """All automorphisms, by backtracking over images of the first
    irredundant lex generating tuple.

    Candidates are pruned by element order, class size and pairwise product
    orders before the full partial-homomorphism check, which runs over the
    Cayley structure of the partial subgroup in integer indices.
    """
    if cap is None:
        cap = get_caps().automorphism
    if group.order > cap:
        raise CapExceeded(f"automorphism search capped at order {cap}")
    gens = lex_generating_tuple(group)
    if not gens:
        return [identity_hom(group)]
    cay = _CayleyIndex(group)
    idx = cay.idx
    mul = cay.mul
    gidx = [idx[g] for g in gens]
    k = len(gidx)

    # chain subgroups H_i = <g_1..g_i> with BFS trees in G-indices
    levels = []
    for i in range(1, k + 1):
        members = [idx[e] for e in close_under_product(
            group.degree, gens[:i])]
        mset = set(members)
        tree: list[tuple[int, int, int]] = []  # (element, parent, genpos)
        order_list = [idx[group.identity()]]
        seen = {order_list[0]}
        frontier = [order_list[0]]
        while frontier:
            new = []
            for x in frontier:
                for j in range(i):
                    y = mul[x][gidx[j]]
                    if y not in seen:
                        seen.add(y)
                        tree.append((y, x, j))
                        order_list.append(y)
                        new.append(y)
            frontier = new
        levels.append({"members": members, "mset": mset, "tree": tree})

    # candidate image lists per level, filtered by order and class size
    cands = []
    for gi in gidx:
        o, cs = cay.order[gi], cay.class_size[gi]
        cands.append([j for j in range(group.order)
                      if cay.order[j] == o and cay.class_size[j] == cs])
    pair_orders = [[cay.order[mul[gidx[a]][gidx[b]]] for b in range(k)]
                   for a in range(k)]

    n = group.order
    results: list[list[int]] = []

    def check_level(i: int, imgs: list[int]) -> list[int] | None:
        """Verify imgs define a hom on H_i; returns the phi array (indexed
        by G-element index, -1 outside H_i) or None."""
        lvl = levels[i - 1]
        phi = [-1] * n
        ident = idx[group.identity()]
        phi[ident] = ident
        for (y, x, j) in lvl["tree"]:
            phi[y] = mul[phi[x]][imgs[j]]
        # verify all Cayley edges within H_i
        for x in lvl["members"]:
            px = phi[x]
            for j in range(i):
                y = mul[x][gidx[j]]
                if phi[y] != mul[px][imgs[j]]:
                    return None
        return phi

    def backtrack(i: int, imgs: list[int]):
        if i == k:
            phi = check_level(k, imgs)
            if phi is not None and len(set(phi)) == n:
                results.append(imgs[:])
            return
        for h in cands[i]:
            ok = True
            for j in range(i):
                if cay.order[mul[imgs[j]][h]] != pair_orders[j][i]:
                    ok = False
                    break
                if cay.order[mul[h][imgs[j]]] != pair_orders[i][j]:
                    ok = False
                    break
            if not ok:
                continue
            imgs.append(h)
            if i + 1 == k or check_level(i + 1, imgs) is not None:
                backtrack(i + 1, imgs)
            imgs.pop()

    backtrack(0, [])

    homs = []
    for imgs in results:
        phi = check_level(k, imgs)
        if phi is None or len(set(phi)) != n:
            raise InternalInconsistency("automorphism candidate failed recheck")
        mapping = {cay.els[x]: cay.els[phi[x]] for x in range(n)}
        homs.append(GroupHom(group, group,
                             [mapping[g] for g in group.generators],
                             _map=mapping))
    return homs
