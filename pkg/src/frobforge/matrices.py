"""Matrix algebra over GF(p^e): minimal polynomials, rational canonical
form by constructive cyclic decomposition, the determinant/norm identity
and commuting matrices of prescribed determinant.

Matrices act on row vectors (v -> v*M), so a change of basis with row
matrix T sends M to T*M*T^-1 and companion blocks carry their coefficients
in the last row.  Vectors and matrices are scanned in the order of their
little-endian integer encodings whenever a deterministic choice is needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import (InternalInconsistency, MinPolyReducible, NotSemisimple,
                     ValidationError)
from .gf import (FieldCtx, Poly, poly_derivative, poly_divmod,
                 poly_factor_squarefree, poly_gcd, poly_mod, poly_mul,
                 poly_trim)

Vec = tuple
Mat = tuple  # tuple of row tuples


def mat_identity(ctx: FieldCtx, n: int) -> Mat:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def mat_add(ctx: FieldCtx, A: Mat, B: Mat) -> Mat:
    return tuple(tuple(ctx.add(x, y) for x, y in zip(ra, rb))
                 for ra, rb in zip(A, B))


def mat_scale(ctx: FieldCtx, A: Mat, s: int) -> Mat:
    return tuple(tuple(ctx.mul(x, s) for x in row) for row in A)


def mat_mul(ctx: FieldCtx, A: Mat, B: Mat) -> Mat:
    n, m = len(A), len(B[0])
    inner = len(B)
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = 0
            for k in range(inner):
                acc = ctx.add(acc, ctx.mul(A[i][k], B[k][j]))
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def vec_mat(ctx: FieldCtx, v: Vec, M: Mat) -> Vec:
    n = len(M[0])
    out = []
    for j in range(n):
        acc = 0
        for k, x in enumerate(v):
            if x:
                acc = ctx.add(acc, ctx.mul(x, M[k][j]))
        out.append(acc)
    return tuple(out)


def mat_det(ctx: FieldCtx, A: Mat) -> int:
    n = len(A)
    rows = [list(r) for r in A]
    det = 1
    for col in range(n):
        pivot = next((r for r in range(col, n) if rows[r][col] != 0), None)
        if pivot is None:
            return 0
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = ctx.neg(det)
        det = ctx.mul(det, rows[col][col])
        inv = ctx.inv(rows[col][col])
        for r in range(col + 1, n):
            if rows[r][col]:
                factor = ctx.mul(rows[r][col], inv)
                for c in range(col, n):
                    rows[r][c] = ctx.sub(rows[r][c],
                                         ctx.mul(factor, rows[col][c]))
    return det


def mat_inverse(ctx: FieldCtx, A: Mat) -> Mat:
    n = len(A)
    rows = [list(r) + [1 if i == j else 0 for j in range(n)]
            for i, r in enumerate(A)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if rows[r][col] != 0), None)
        if pivot is None:
            raise ValidationError("matrix is singular")
        rows[col], rows[pivot] = rows[pivot], rows[col]
        inv = ctx.inv(rows[col][col])
        rows[col] = [ctx.mul(x, inv) for x in rows[col]]
        for r in range(n):
            if r != col and rows[r][col]:
                factor = rows[r][col]
                rows[r] = [ctx.sub(x, ctx.mul(factor, y))
                           for x, y in zip(rows[r], rows[col])]
    return tuple(tuple(r[n:]) for r in rows)


def mat_pow_poly(ctx: FieldCtx, A: Mat, poly: Poly) -> Mat:
    """Evaluate a polynomial at A."""
    n = len(A)
    acc = tuple(tuple(0 for _ in range(n)) for _ in range(n))
    for c in reversed(poly):
        acc = mat_mul(ctx, acc, A)
        if c:
            acc = tuple(tuple(ctx.add(acc[i][j], c if i == j else 0)
                              for j in range(n)) for i in range(n))
    return acc


def companion(ctx: FieldCtx, poly: Poly) -> Mat:
    """Companion matrix with the negated coefficients in the last row."""
    poly = poly_trim(ctx, poly)
    d = len(poly) - 1
    if d < 1 or poly[-1] != 1:
        raise ValidationError("companion matrix needs a monic polynomial of "
                              "positive degree")
    rows = []
    for i in range(d - 1):
        rows.append(tuple(1 if j == i + 1 else 0 for j in range(d)))
    rows.append(tuple(ctx.neg(poly[j]) for j in range(d)))
    return tuple(rows)


def block_diag(ctx: FieldCtx, blocks: Sequence[Mat]) -> Mat:
    n = sum(len(b) for b in blocks)
    out = [[0] * n for _ in range(n)]
    off = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, x in enumerate(row):
                out[off + i][off + j] = x
        off += len(b)
    return tuple(tuple(r) for r in out)


def int_to_vec(ctx: FieldCtx, enc: int, n: int) -> Vec:
    out = []
    for _ in range(n):
        out.append(enc % ctx.q)
        enc //= ctx.q
    return tuple(out)


def enumerate_vectors(ctx: FieldCtx, n: int):
    for enc in range(1, ctx.q ** n):
        yield int_to_vec(ctx, enc, n)


# -- annihilator polynomials ------------------------------------------------

def _reduce_against(ctx: FieldCtx, basis, vec, combo):
    """Echelon-reduce (vec, combo); basis entries are (pivot, vec, combo)."""
    vec = list(vec)
    combo = list(combo)
    for pivot, bvec, bco in basis:
        if vec[pivot]:
            factor = ctx.mul(vec[pivot], ctx.inv(bvec[pivot]))
            for i in range(len(vec)):
                vec[i] = ctx.sub(vec[i], ctx.mul(factor, bvec[i]))
            for i in range(len(combo)):
                if i < len(bco) and bco[i]:
                    combo[i] = ctx.sub(combo[i], ctx.mul(factor, bco[i]))
    return tuple(vec), combo


def local_annihilator(ctx: FieldCtx, A: Mat, v: Vec) -> Poly:
    """Monic polynomial of least degree with v * f(A) = 0."""
    basis = []  # (pivot, vector, combo in powers v*A^i)
    w = v
    combo = [1]
    while True:
        red, redco = _reduce_against(ctx, basis, w, combo)
        if all(x == 0 for x in red):
            return poly_trim(ctx, redco)
        pivot = next(i for i, x in enumerate(red) if x)
        basis.append((pivot, red, redco))
        w = vec_mat(ctx, red, A)
        combo = [0] + list(redco)


def minimal_polynomial(ctx: FieldCtx, A: Mat) -> Poly:
    n = len(A)
    m: Poly = (1,)
    for i in range(n):
        e = tuple(1 if j == i else 0 for j in range(n))
        f = local_annihilator(ctx, A, e)
        g = poly_gcd(ctx, m, f)
        m = poly_divmod(ctx, poly_mul(ctx, m, f), g)[0]
    return m


def is_semisimple(ctx: FieldCtx, A: Mat) -> bool:
    """Squarefree minimal polynomial: gcd(m, m') = 1."""
    m = minimal_polynomial(ctx, A)
    g = poly_gcd(ctx, m, poly_derivative(ctx, m))
    return len(g) == 1


# -- cyclic decomposition and rational canonical form ----------------------

def _solve_rows(ctx: FieldCtx, rows: Sequence[Vec], target: Vec) -> Vec:
    """Coefficients x with sum x_i rows_i = target (rows independent)."""
    m = len(rows)
    ech = []  # (pivot_col, vector, combo over the original rows)
    for i, r in enumerate(rows):
        vec = list(r)
        co = [1 if j == i else 0 for j in range(m)]
        for pc, evec, eco in ech:
            if vec[pc]:
                f = ctx.mul(vec[pc], ctx.inv(evec[pc]))
                vec = [ctx.sub(x, ctx.mul(f, y)) for x, y in zip(vec, evec)]
                co = [ctx.sub(x, ctx.mul(f, y)) for x, y in zip(co, eco)]
        pc = next((k for k, x in enumerate(vec) if x), None)
        if pc is None:
            raise InternalInconsistency("rows are dependent")
        ech.append((pc, vec, co))
    rem = list(target)
    coeffs = [0] * m
    for pc, evec, eco in ech:
        if rem[pc]:
            f = ctx.mul(rem[pc], ctx.inv(evec[pc]))
            rem = [ctx.sub(x, ctx.mul(f, y)) for x, y in zip(rem, evec)]
            coeffs = [ctx.add(x, ctx.mul(f, y)) for x, y in zip(coeffs, eco)]
    if any(rem):
        raise InternalInconsistency("vector not in the row span")
    return tuple(coeffs)


def _complete_basis(ctx: FieldCtx, rows: list) -> list:
    """Extend independent rows to a basis using standard basis vectors."""
    n = len(rows[0]) if rows else 0
    basis = []
    for r in rows:
        red, _ = _reduce_against(ctx, basis, r, [0])
        pivot = next(i for i, x in enumerate(red) if x)
        basis.append((pivot, red, [0]))
    out = list(rows)
    for i in range(n):
        e = tuple(1 if j == i else 0 for j in range(n))
        red, _ = _reduce_against(ctx, basis, e, [0])
        if any(red):
            pivot = next(j for j, x in enumerate(red) if x)
            basis.append((pivot, red, [0]))
            out.append(e)
        if len(out) == n:
            break
    return out


def cyclic_decomposition(ctx: FieldCtx, A: Mat) -> list:
    """Generators [(f_i, v_i)] with V = (+) v_i F[A], annihilators forming a
    divisibility chain f_1 ) f_2 ) ... (first is the minimal polynomial)."""
    n = len(A)
    if n == 0:
        return []
    m = minimal_polynomial(ctx, A)
    d = len(m) - 1
    vmax = None
    for v in enumerate_vectors(ctx, n):
        if local_annihilator(ctx, A, v) == m:
            vmax = v
            break
    if vmax is None:
        raise InternalInconsistency("no maximal vector found")
    krylov = [vmax]
    for _ in range(d - 1):
        krylov.append(vec_mat(ctx, krylov[-1], A))
    if d == n:
        return [(m, vmax)]
    basis_rows = _complete_basis(ctx, list(krylov))
    T = tuple(basis_rows)
    Tinv = mat_inverse(ctx, T)
    M = mat_mul(ctx, mat_mul(ctx, T, A), Tinv)
    sub = tuple(tuple(M[i][j] for j in range(d, n)) for i in range(d, n))
    out = [(m, vmax)]
    for f, ubar in cyclic_decomposition(ctx, sub):
        u = vec_mat(ctx, (0,) * d + tuple(ubar), T)
        fu = vec_mat(ctx, u, mat_pow_poly(ctx, A, f))
        coeffs = _solve_rows(ctx, krylov, fu)  # f(A)u = g(A)vmax
        g = poly_trim(ctx, coeffs)
        if g:
            h, r = poly_divmod(ctx, g, f)
            if r:
                raise InternalInconsistency("annihilator division failed")
            w = vec_mat(ctx, vmax, mat_pow_poly(ctx, A, h))
            u = tuple(ctx.sub(x, y) for x, y in zip(u, w))
        if any(vec_mat(ctx, u, mat_pow_poly(ctx, A, f))):
            raise InternalInconsistency("corrected lift is not annihilated")
        out.append((f, u))
    return out


def rational_canonical_form(ctx: FieldCtx, A: Mat):
    """(blocks, transform): companion blocks of the invariant factors in
    increasing divisibility order, and invertible T with
    T^-1 A T = diag(blocks) under row convention (i.e. rows of T^-1 are the
    adapted basis)."""
    n = len(A)
    gens = cyclic_decomposition(ctx, A)
    chain = list(reversed(gens))  # increasing divisibility
    rows = []
    blocks = []
    for f, u in chain:
        blocks.append(companion(ctx, f))
        cur = u
        for _ in range(len(f) - 1):
            rows.append(cur)
            cur = vec_mat(ctx, cur, A)
    T = tuple(rows)
    transform = mat_inverse(ctx, T)
    check = mat_mul(ctx, mat_mul(ctx, T, A), transform)
    if check != block_diag(ctx, blocks):
        raise InternalInconsistency("canonical form verification failed")
    # invariant factor chain divisibility
    for (f1, _), (f2, _) in zip(chain, chain[1:]):
        if poly_mod(ctx, f2, f1):
            raise InternalInconsistency("invariant factors do not divide")
    return blocks, transform


# -- determinant = norm power ----------------------------------------------

def _ext_mul(ctx: FieldCtx, g: Poly, a: Poly, b: Poly) -> Poly:
    return poly_mod(ctx, poly_mul(ctx, a, b), g)


def _ext_pow(ctx: FieldCtx, g: Poly, a: Poly, k: int) -> Poly:
    result: Poly = (1,)
    base = poly_mod(ctx, a, g)
    while k:
        if k & 1:
            result = _ext_mul(ctx, g, result, base)
        base = _ext_mul(ctx, g, base, base)
        k >>= 1
    return result


def ext_norm(ctx: FieldCtx, g: Poly, a: Poly) -> int:
    """Norm of a in K = F[y]/(g) down to F: product of q-power conjugates."""
    d = len(g) - 1
    acc: Poly = (1,)
    for i in range(d):
        acc = _ext_mul(ctx, g, acc, _ext_pow(ctx, g, a, ctx.q ** i))
    if len(acc) > 1:
        raise InternalInconsistency("norm did not land in the base field")
    return acc[0] if acc else 0


@dataclass(frozen=True)
class NormDetReport:
    det: int
    norm_power: int
    equal: bool
    minimal_polynomial: Poly
    extension_degree: int


def norm_det_check(ctx: FieldCtx, A: Mat, h: Poly) -> NormDetReport:
    """For A with irreducible minimal polynomial g of degree d and
    A' = h(A): compare det(A') with N(h)^(n/d), N the norm of F[y]/(g)."""
    g = minimal_polynomial(ctx, A)
    d = len(g) - 1
    from .gf import poly_is_irreducible
    if not poly_is_irreducible(ctx, g):
        raise MinPolyReducible(f"minimal polynomial {g} is reducible")
    n = len(A)
    if n % d:
        raise InternalInconsistency("extension degree does not divide dimension")
    Ap = mat_pow_poly(ctx, A, h)
    det = mat_det(ctx, Ap)
    nrm = ext_norm(ctx, g, poly_mod(ctx, h, g))
    norm_power = ctx.pow(nrm, n // d) if nrm else 0
    return NormDetReport(det=det, norm_power=norm_power,
                         equal=(det == norm_power),
                         minimal_polynomial=g, extension_degree=d)


# -- commuting matrix with prescribed determinant ---------------------------

def elementary_form(ctx: FieldCtx, B: Mat):
    """(blocks, T) with T B T^-1 = diag of companions of irreducible
    polynomials, for semisimple B; block order: invariant factors in
    increasing divisibility, irreducible factors by (degree, encoding)."""
    n = len(B)
    gens = cyclic_decomposition(ctx, B)
    chain = list(reversed(gens))
    rows = []
    polys = []
    for f, u in chain:
        factors = poly_factor_squarefree(ctx, f)
        for g in factors:
            q, r = poly_divmod(ctx, f, g)
            if r:
                raise InternalInconsistency("factor does not divide")
            w = vec_mat(ctx, u, mat_pow_poly(ctx, B, q))
            cur = w
            for _ in range(len(g) - 1):
                rows.append(cur)
                cur = vec_mat(ctx, cur, B)
            polys.append(g)
    T = tuple(rows)
    blocks = [companion(ctx, g) for g in polys]
    check = mat_mul(ctx, mat_mul(ctx, T, B), mat_inverse(ctx, T))
    if check != block_diag(ctx, blocks):
        raise InternalInconsistency("elementary form verification failed")
    return polys, blocks, T


def commuting_matrix_with_det(ctx: FieldCtx, B: Mat, a: int) -> Mat:
    """B' with B B' = B' B and det(B') = a, built on the canonical
    elementary form: a norm preimage of a on the first block (found by
    scanning the extension field by encoding) and identity elsewhere."""
    if a == 0:
        raise ValidationError("prescribed determinant must be nonzero")
    if not is_semisimple(ctx, B):
        raise NotSemisimple("matrix has a repeated-root minimal polynomial")
    polys, blocks, T = elementary_form(ctx, B)
    g1 = polys[0]
    d1 = len(g1) - 1
    h_found = None
    for enc in range(1, ctx.q ** d1):
        coeffs = []
        x = enc
        for _ in range(d1):
            coeffs.append(x % ctx.q)
            x //= ctx.q
        h = poly_trim(ctx, coeffs)
        if ext_norm(ctx, g1, h) == a:
            h_found = h
            break
    if h_found is None:
        raise InternalInconsistency("norm is surjective; preimage must exist")
    first = mat_pow_poly(ctx, blocks[0], h_found)
    pieces = [first] + [mat_identity(ctx, len(b)) for b in blocks[1:]]
    Bp_new = block_diag(ctx, pieces)
    Tinv = mat_inverse(ctx, T)
    Bp = mat_mul(ctx, mat_mul(ctx, Tinv, Bp_new), T)
    if mat_mul(ctx, B, Bp) != mat_mul(ctx, Bp, B):
        raise InternalInconsistency("constructed matrix does not commute")
    if mat_det(ctx, Bp) != a:
        raise InternalInconsistency("constructed matrix has wrong determinant")
    return Bp
