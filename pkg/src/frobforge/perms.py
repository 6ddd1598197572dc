"""Permutation primitives.

A permutation on {0..n-1} is a plain tuple of images; keeping the raw tuple
makes closure and conjugation scans fast.  Composition is left-to-right:
``pmul(a, b)`` applies ``a`` first, matching the exponent notation
``x^(ab) = (x^a)^b`` used throughout.  All I/O uses 1-based cycle notation.
"""

from __future__ import annotations

import re
from math import lcm
from typing import Iterable, Sequence

from .errors import ParseError

Perm = tuple  # tuple[int, ...]


def identity(degree: int) -> Perm:
    return tuple(range(degree))


def is_perm(images: Sequence[int], degree: int) -> bool:
    return len(images) == degree and sorted(images) == list(range(degree))


def pmul(a: Perm, b: Perm) -> Perm:
    """a then b: result[i] = b[a[i]]."""
    return tuple(map(b.__getitem__, a))


def pinv(a: Perm) -> Perm:
    inv = [0] * len(a)
    for i, v in enumerate(a):
        inv[v] = i
    return tuple(inv)


def pconj(a: Perm, g: Perm) -> Perm:
    """a^g = g^-1 * a * g."""
    res = [0] * len(a)
    for i, v in enumerate(a):
        res[g[i]] = g[v]
    return tuple(res)


def ppow(a: Perm, k: int) -> Perm:
    n = len(a)
    if k < 0:
        a = pinv(a)
        k = -k
    result = identity(n)
    base = a
    while k:
        if k & 1:
            result = pmul(result, base)
        base = pmul(base, base)
        k >>= 1
    return result


def porder(a: Perm) -> int:
    order = 1
    seen = [False] * len(a)
    for i in range(len(a)):
        if seen[i] or a[i] == i:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = a[j]
            length += 1
        order = lcm(order, length)
    return order


def cycles_of(a: Perm) -> list[list[int]]:
    """Non-trivial cycles, each starting at its least point, sorted by it."""
    out = []
    seen = [False] * len(a)
    for i in range(len(a)):
        if seen[i] or a[i] == i:
            seen[i] = True
            continue
        cyc = [i]
        seen[i] = True
        j = a[i]
        while j != i:
            cyc.append(j)
            seen[j] = True
            j = a[j]
        out.append(cyc)
    return out


def format_perm(a: Perm) -> str:
    """1-based cycle notation; identity renders as "()"."""
    cycs = cycles_of(a)
    if not cycs:
        return "()"
    return "".join("(" + " ".join(str(p + 1) for p in cyc) + ")" for cyc in cycs)


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_perm(text: str, degree: int) -> Perm:
    """Parse 1-based cycle notation like "(1 2)(3 4 5)"."""
    s = text.strip()
    if not s:
        raise ParseError("empty permutation string")
    stripped = _CYCLE_RE.sub("", s)
    if stripped.strip():
        raise ParseError(f"malformed cycle notation: {text!r}")
    images = list(range(degree))
    touched: set[int] = set()
    for m in _CYCLE_RE.finditer(s):
        body = m.group(1).replace(",", " ").split()
        if not body:
            continue
        try:
            pts = [int(tok) - 1 for tok in body]
        except ValueError as exc:
            raise ParseError(f"non-integer point in {text!r}") from exc
        for p in pts:
            if not 0 <= p < degree:
                raise ParseError(
                    f"point {p + 1} out of range 1..{degree} in {text!r}"
                )
            if p in touched:
                raise ParseError(f"point {p + 1} repeated in {text!r}")
            touched.add(p)
        for i, p in enumerate(pts):
            images[p] = pts[(i + 1) % len(pts)]
    return tuple(images)


def parse_perm_list(texts: Iterable[str], degree: int) -> list[Perm]:
    return [parse_perm(t, degree) for t in texts]
