"""(P)GL and (P)SL as permutation groups, with field and graph automorphisms.

PSL/PGL act on the (q^d - 1)/(q - 1) projective points (row vectors
normalized to leading coefficient 1); SL/GL act faithfully on the q^d - 1
nonzero vectors, since the projective action would collapse the scalars.
The Frobenius map sigma acts entrywise.  The inverse-transpose map tau is
realizable as a point permutation only for d = 2, where it coincides with
conjugation by the standard symplectic form; for d >= 3 it swaps point and
hyperplane stabilizers and no permutation of the points induces it, so
None is returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .caps import get_caps
from .errors import CapExceeded, InternalInconsistency, ValidationError
from .gf import FieldCtx
from .groups import PermGroup, prime_factors
from .matrices import Mat, mat_identity, mat_mul, vec_mat
from .perms import Perm, pconj

KINDS = ("SL", "GL", "PSL", "PGL")


def _factor_prime_power(q: int):
    ps = prime_factors(q)
    if len(ps) != 1:
        raise ValidationError(f"{q} is not a prime power")
    p = ps[0]
    e = 0
    while q > 1:
        q //= p
        e += 1
    return p, e


def group_order_formula(d: int, q: int, kind: str) -> int:
    gl = 1
    for i in range(d):
        gl *= q**d - q**i
    if kind == "GL":
        return gl
    if kind == "SL" or kind == "PGL":
        return gl // (q - 1)
    if kind == "PSL":
        from math import gcd
        return gl // (q - 1) // gcd(d, q - 1)
    raise ValidationError(f"unknown kind {kind!r}")


@dataclass(frozen=True)
class ProjectiveGroup:
    kind: str
    d: int
    q: int
    group: PermGroup
    sigma: Perm
    tau: Optional[Perm]
    field: FieldCtx
    points: tuple  # the vectors the permutation domain enumerates

    def point_index(self, vec) -> int:
        return self.points.index(vec)


def _normalize(ctx: FieldCtx, v):
    for x in v:
        if x:
            inv = ctx.inv(x)
            return tuple(ctx.mul(inv, y) for y in v)
    raise ValidationError("zero vector has no projective point")


def _projective_points(ctx: FieldCtx, d: int):
    pts = []
    seen = set()
    for enc in range(1, ctx.q**d):
        v = []
        x = enc
        for _ in range(d):
            v.append(x % ctx.q)
            x //= ctx.q
        v = _normalize(ctx, tuple(v))
        if v not in seen:
            seen.add(v)
            pts.append(v)
    return sorted(pts)


def _nonzero_vectors(ctx: FieldCtx, d: int):
    pts = []
    for enc in range(1, ctx.q**d):
        v = []
        x = enc
        for _ in range(d):
            v.append(x % ctx.q)
            x //= ctx.q
        pts.append(tuple(v))
    return sorted(pts)


def matrix_to_perm(ctx: FieldCtx, M: Mat, points, projective: bool) -> Perm:
    idx = {v: i for i, v in enumerate(points)}
    images = []
    for v in points:
        w = vec_mat(ctx, v, M)
        if projective:
            w = _normalize(ctx, w)
        images.append(idx[w])
    return tuple(images)


def _sl_generators(ctx: FieldCtx, d: int):
    """Transvections I + b*E_ij over a GF(p)-basis of the field."""
    gens = []
    basis = [ctx.pow(ctx.p if ctx.e > 1 else 1, 0)]  # placeholder start
    basis = []
    for i in range(ctx.e):
        # the residue class of y^i in the polynomial encoding is p^i
        basis.append(ctx.p**i if ctx.e > 1 else 1)
    basis = sorted(set(basis))
    for i in range(d):
        for j in range(d):
            if i == j:
                continue
            for b in basis:
                M = [[1 if r == c else 0 for c in range(d)] for r in range(d)]
                M[i][j] = b
                gens.append(tuple(tuple(r) for r in M))
    return gens


def projective_group(d: int, q: int, kind: str,
                     cap: int | None = None) -> ProjectiveGroup:
    """Construct the requested classical group as a permutation group, with
    the Frobenius automorphism sigma and (for d = 2) the inverse-transpose
    automorphism tau realized as point permutations normalizing it."""
    if kind not in KINDS:
        raise ValidationError(f"kind must be one of {KINDS}")
    if d < 2:
        raise ValidationError("dimension must be at least 2")
    if cap is None:
        cap = get_caps().closure
    order = group_order_formula(d, q, kind)
    if order > cap:
        raise CapExceeded(f"{kind}({d},{q}) has order {order} > cap {cap}")
    p, e = _factor_prime_power(q)
    ctx = FieldCtx(p, e)
    projective = kind in ("PSL", "PGL")
    points = tuple(_projective_points(ctx, d) if projective
                   else _nonzero_vectors(ctx, d))
    mats = _sl_generators(ctx, d)
    if kind in ("GL", "PGL"):
        zeta = ctx.primitive_element()
        M = [[1 if r == c else 0 for c in range(d)] for r in range(d)]
        M[0][0] = zeta
        mats.append(tuple(tuple(r) for r in M))
    gens = [matrix_to_perm(ctx, M, points, projective) for M in mats]
    name = f"{kind}({d},{q})"
    group = PermGroup(len(points), gens, cap=cap, name=name)
    if group.order != order:
        raise InternalInconsistency(
            f"{name}: built order {group.order}, formula {order}")

    idx = {v: i for i, v in enumerate(points)}

    def frob_image(v):
        w = tuple(ctx.frobenius(x) for x in v)
        return _normalize(ctx, w) if projective else w

    sigma = tuple(idx[frob_image(v)] for v in points)
    tau = None
    if d == 2 and projective:
        J = ((0, 1), (ctx.neg(1), 0))
        tau = matrix_to_perm(ctx, J, points, projective=True)
    for aut in (sigma, tau):
        if aut is None:
            continue
        for g in group.generators:
            if pconj(g, aut) not in group.eset:
                raise InternalInconsistency(
                    "distinguished automorphism does not normalize the group")
    return ProjectiveGroup(kind=kind, d=d, q=q, group=group, sigma=sigma,
                           tau=tau, field=ctx, points=points)


def full_automorphism_action(pg: ProjectiveGroup) -> PermGroup:
    """<group, sigma> as a permutation group: for PGL(2,q) this realizes the
    full automorphism group of the socle PSL(2,q) acting on the projective
    line."""
    gens = list(pg.group.generators) + [pg.sigma]
    if pg.tau is not None:
        gens.append(pg.tau)
    return PermGroup(pg.group.degree, gens,
                     name=f"Aut-action({pg.kind}({pg.d},{pg.q}))")
