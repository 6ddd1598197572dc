"""GF(p^e) arithmetic with integer-encoded elements.

An element is the integer sum(c_i * p^i) for the coefficient vector of its
polynomial representative; arithmetic reduces modulo the lexicographically
least monic irreducible of degree e (scanned by that same encoding, so the
modulus choice is self-contained and deterministic).  Extension fields
F[y]/(g) used for norm computations are handled as coefficient tuples over
a FieldCtx.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import ValidationError
from .groups import prime_factors

Elt = int  # encoded field element
Poly = tuple  # coefficient tuple over a FieldCtx, ascending degree


def _int_to_vec(x: int, p: int, e: int) -> list[int]:
    out = []
    for _ in range(e):
        out.append(x % p)
        x //= p
    return out


def _vec_to_int(v: Sequence[int], p: int) -> int:
    x = 0
    for c in reversed(v):
        x = x * p + c
    return x


class FieldCtx:
    """Field GF(p^e); elements are ints in range(p**e)."""

    __slots__ = ("p", "e", "q", "modulus", "_mul", "_inv", "_add")

    def __init__(self, p: int, e: int = 1, modulus: Sequence[int] | None = None):
        if p < 2 or any(p % k == 0 for k in range(2, int(p**0.5) + 1)):
            raise ValidationError(f"{p} is not prime")
        if e < 1:
            raise ValidationError("degree must be positive")
        self.p = p
        self.e = e
        self.q = p**e
        if modulus is None:
            modulus = _least_irreducible(p, e) if e > 1 else (0, 1)
        self.modulus = tuple(modulus)
        if len(self.modulus) != e + 1 or self.modulus[-1] != 1:
            raise ValidationError("modulus must be monic of degree e")
        if e > 1 and not _is_irreducible_modp(self.modulus, p):
            raise ValidationError("modulus is not irreducible")
        # small fields: table the arithmetic
        q = self.q
        self._add = [[self._add_slow(a, b) for b in range(q)] for a in range(q)]
        self._mul = [[self._mul_slow(a, b) for b in range(q)] for a in range(q)]
        self._inv = [0] * q
        for a in range(1, q):
            for b in range(1, q):
                if self._mul[a][b] == 1:
                    self._inv[a] = b
                    break

    def _add_slow(self, a: Elt, b: Elt) -> Elt:
        p, e = self.p, self.e
        va, vb = _int_to_vec(a, p, e), _int_to_vec(b, p, e)
        return _vec_to_int([(x + y) % p for x, y in zip(va, vb)], p)

    def _mul_slow(self, a: Elt, b: Elt) -> Elt:
        p, e = self.p, self.e
        va, vb = _int_to_vec(a, p, e), _int_to_vec(b, p, e)
        prod = [0] * (2 * e - 1)
        for i, x in enumerate(va):
            if x:
                for j, y in enumerate(vb):
                    prod[i + j] = (prod[i + j] + x * y) % p
        # reduce modulo the modulus
        mod = self.modulus
        for i in range(len(prod) - 1, e - 1, -1):
            c = prod[i]
            if c:
                prod[i] = 0
                for j in range(e):
                    prod[i - e + j] = (prod[i - e + j] - c * mod[j]) % p
        return _vec_to_int(prod[:e], p)

    # -- public ops -----------------------------------------------------

    def add(self, a: Elt, b: Elt) -> Elt:
        return self._add[a][b]

    def neg(self, a: Elt) -> Elt:
        if self.p == 2:
            return a
        v = _int_to_vec(a, self.p, self.e)
        return _vec_to_int([(-c) % self.p for c in v], self.p)

    def sub(self, a: Elt, b: Elt) -> Elt:
        return self._add[a][self.neg(b)]

    def mul(self, a: Elt, b: Elt) -> Elt:
        return self._mul[a][b]

    def inv(self, a: Elt) -> Elt:
        if a == 0:
            raise ZeroDivisionError("inverse of zero field element")
        return self._inv[a]

    def pow(self, a: Elt, k: int) -> Elt:
        if k < 0:
            a, k = self.inv(a), -k
        result = 1
        while k:
            if k & 1:
                result = self._mul[result][a]
            a = self._mul[a][a]
            k >>= 1
        return result

    def frobenius(self, a: Elt) -> Elt:
        return self.pow(a, self.p)

    def primitive_element(self) -> Elt:
        for a in range(2, self.q):
            if self.mult_order(a) == self.q - 1:
                return a
        if self.q == 2:
            return 1
        raise ValidationError("no primitive element found")

    def mult_order(self, a: Elt) -> int:
        if a == 0:
            raise ValidationError("zero has no multiplicative order")
        order, acc = 1, a
        while acc != 1:
            acc = self._mul[acc][a]
            order += 1
        return order

    def __repr__(self):
        return f"GF({self.p}^{self.e})" if self.e > 1 else f"GF({self.p})"


def _poly_degree_modp(poly: Sequence[int]) -> int:
    d = -1
    for i, c in enumerate(poly):
        if c:
            d = i
    return d


def _polymod_modp(a: list[int], b: Sequence[int], p: int) -> list[int]:
    a = [c % p for c in a]
    db = _poly_degree_modp(b)
    inv_lead = pow(b[db], -1, p)
    while True:
        da = _poly_degree_modp(a)
        if da < db:
            return a[: max(da + 1, 0)] or [0]
        factor = (a[da] * inv_lead) % p
        shift = da - db
        for i in range(db + 1):
            a[shift + i] = (a[shift + i] - factor * b[i]) % p
    # unreachable


def _polymulmod_modp(a, b, mod, p):
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
    return _polymod_modp(prod, mod, p)


def _is_irreducible_modp(poly: Sequence[int], p: int) -> bool:
    """x^(p^i) gcd test for monic poly over GF(p)."""
    n = _poly_degree_modp(poly)
    if n <= 0:
        return False
    if n == 1:
        return True
    x = [0, 1]
    h = x[:]
    for _ in range(n // 2):
        # h = h^p mod poly
        acc = [1]
        base = h[:]
        k = p
        while k:
            if k & 1:
                acc = _polymulmod_modp(acc, base, poly, p)
            base = _polymulmod_modp(base, base, poly, p)
            k >>= 1
        h = acc
        diff = [(a - b) % p for a, b in
                zip(h + [0] * len(x), x + [0] * len(h))]
        g = _poly_gcd_modp(diff, list(poly), p)
        if _poly_degree_modp(g) > 0:
            return False
    return True


def _poly_gcd_modp(a, b, p):
    a, b = [c % p for c in a], [c % p for c in b]
    while _poly_degree_modp(b) >= 0:
        a, b = b, _polymod_modp(a, b, p)
        if all(c == 0 for c in b):
            break
    return a


def _least_irreducible(p: int, e: int) -> tuple:
    """Lexicographically least (by integer encoding of the non-leading
    coefficients) monic irreducible of degree e over GF(p)."""
    for enc in range(p**e):
        coeffs = _int_to_vec(enc, p, e) + [1]
        if _is_irreducible_modp(coeffs, p):
            return tuple(coeffs)
    raise ValidationError(f"no irreducible polynomial of degree {e} over GF({p})")


# -- polynomials over a FieldCtx (for extensions F[y]/(g)) ----------------

def poly_trim(ctx: FieldCtx, a: Sequence[Elt]) -> Poly:
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return tuple(a)


def poly_add(ctx: FieldCtx, a: Poly, b: Poly) -> Poly:
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return poly_trim(ctx, [ctx.add(x, y) for x, y in zip(a, b)])


def poly_neg(ctx: FieldCtx, a: Poly) -> Poly:
    return tuple(ctx.neg(x) for x in a)


def poly_sub(ctx: FieldCtx, a: Poly, b: Poly) -> Poly:
    return poly_add(ctx, a, poly_neg(ctx, b))


def poly_mul(ctx: FieldCtx, a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return ()
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] = ctx.add(prod[i + j], ctx.mul(x, y))
    return poly_trim(ctx, prod)


def poly_scale(ctx: FieldCtx, a: Poly, s: Elt) -> Poly:
    return poly_trim(ctx, [ctx.mul(x, s) for x in a])


def poly_divmod(ctx: FieldCtx, a: Poly, b: Poly):
    b = poly_trim(ctx, b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    q = [0] * max(len(a) - len(b) + 1, 0)
    inv_lead = ctx.inv(b[-1])
    while len(poly_trim(ctx, a)) >= len(b):
        a = list(poly_trim(ctx, a))
        shift = len(a) - len(b)
        factor = ctx.mul(a[-1], inv_lead)
        q[shift] = factor
        for i, c in enumerate(b):
            a[shift + i] = ctx.sub(a[shift + i], ctx.mul(factor, c))
    return poly_trim(ctx, q), poly_trim(ctx, a)


def poly_mod(ctx: FieldCtx, a: Poly, b: Poly) -> Poly:
    return poly_divmod(ctx, a, b)[1]


def poly_gcd(ctx: FieldCtx, a: Poly, b: Poly) -> Poly:
    a, b = poly_trim(ctx, a), poly_trim(ctx, b)
    while b:
        a, b = b, poly_mod(ctx, a, b)
    if a:
        a = poly_scale(ctx, a, ctx.inv(a[-1]))  # monic
    return a


def poly_derivative(ctx: FieldCtx, a: Poly) -> Poly:
    out = []
    for i in range(1, len(a)):
        c = a[i]
        s = 0
        for _ in range(i % ctx.p):
            s = ctx.add(s, c)
        out.append(s)
    return poly_trim(ctx, out)


def poly_eval(ctx: FieldCtx, a: Poly, x: Elt) -> Elt:
    acc = 0
    for c in reversed(a):
        acc = ctx.add(ctx.mul(acc, x), c)
    return acc


def poly_monic(ctx: FieldCtx, a: Poly) -> Poly:
    a = poly_trim(ctx, a)
    if not a:
        return a
    return poly_scale(ctx, a, ctx.inv(a[-1]))


def poly_is_irreducible(ctx: FieldCtx, a: Poly) -> bool:
    """Trial division by all lower-degree monic polynomials; desk scale."""
    a = poly_trim(ctx, a)
    d = len(a) - 1
    if d <= 0:
        return False
    if d == 1:
        return True
    for deg in range(1, d // 2 + 1):
        for enc in range(ctx.q ** deg):
            coeffs = []
            x = enc
            for _ in range(deg):
                coeffs.append(x % ctx.q)
                x //= ctx.q
            cand = tuple(coeffs) + (1,)
            if not poly_mod(ctx, a, cand):
                return False
    return True


def poly_factor_squarefree(ctx: FieldCtx, a: Poly) -> list[Poly]:
    """Distinct monic irreducible factors of a squarefree monic polynomial,
    ordered by (degree, coefficient encoding)."""
    a = poly_monic(ctx, a)
    factors = []
    rest = a
    deg_limit = len(a) - 1
    for deg in range(1, deg_limit + 1):
        if len(rest) - 1 < deg:
            break
        enc = 0
        while enc < ctx.q ** deg and len(rest) - 1 >= deg:
            coeffs = []
            x = enc
            for _ in range(deg):
                coeffs.append(x % ctx.q)
                x //= ctx.q
            cand = tuple(coeffs) + (1,)
            q, r = poly_divmod(ctx, rest, cand)
            if not r and poly_is_irreducible(ctx, cand):
                factors.append(cand)
                rest = q
            enc += 1
    if len(rest) > 1:
        factors.append(rest)
    check = (1,)
    for f in factors:
        check = poly_mul(ctx, check, f)
    if check != a:
        raise ValidationError("factorization failed (input not squarefree?)")
    return sorted(factors, key=lambda f: (len(f), f))
