"""Dense univariate polynomials over a prime field F_p.

Polynomials are lists of ints in ``[0, p)``, lowest degree first, with no
trailing zeros (the zero polynomial is ``[]``).
"""

from __future__ import annotations

import random


def trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def from_ints(coeffs, p: int) -> list[int]:
    return trim([c % p for c in coeffs])


def deg(a: list[int]) -> int:
    return len(a) - 1


def add(a: list[int], b: list[int], p: int) -> list[int]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = (out[i] + c) % p
    return trim(out)


def sub(a: list[int], b: list[int], p: int) -> list[int]:
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, c in enumerate(b):
        out[i] = (out[i] - c) % p
    return trim(out)


def scale(a: list[int], c: int, p: int) -> list[int]:
    c %= p
    return trim([(x * c) % p for x in a])


def mul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return trim([c % p for c in out])


def divmod_(a: list[int], b: list[int], p: int) -> tuple[list[int], list[int]]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    db = len(b) - 1
    inv = pow(b[-1], -1, p)
    if len(r) <= db:
        return [], trim(r)
    q = [0] * (len(r) - db)
    for k in range(len(r) - 1, db - 1, -1):
        c = (r[k] * inv) % p
        if c:
            q[k - db] = c
            for j, y in enumerate(b):
                r[k - db + j] = (r[k - db + j] - c * y) % p
    return trim(q), trim(r[:db])


def rem(a: list[int], b: list[int], p: int) -> list[int]:
    return divmod_(a, b, p)[1]


def monic(a: list[int], p: int) -> list[int]:
    if not a:
        return []
    return scale(a, pow(a[-1], -1, p), p)


def gcd(a: list[int], b: list[int], p: int) -> list[int]:
    while b:
        a, b = b, rem(a, b, p)
    return monic(a, p)


def xgcd(a: list[int], b: list[int], p: int):
    """Return ``(g, s, t)`` with ``s*a + t*b = g`` and ``g`` monic."""
    r0, r1 = list(a), list(b)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = divmod_(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1, p), p)
        t0, t1 = t1, sub(t0, mul(q, t1, p), p)
    if not r0:
        return [], [], []
    inv = pow(r0[-1], -1, p)
    return scale(r0, inv, p), scale(s0, inv, p), scale(t0, inv, p)


def powmod(a: list[int], e: int, f: list[int], p: int) -> list[int]:
    result = [1]
    base = rem(a, f, p)
    while e:
        if e & 1:
            result = rem(mul(result, base, p), f, p)
        base = rem(mul(base, base, p), f, p)
        e >>= 1
    return result


def derivative(a: list[int], p: int) -> list[int]:
    return trim([(i * c) % p for i, c in enumerate(a)][1:])


def distinct_degree(f: list[int], p: int) -> list[tuple[list[int], int]]:
    """Split a squarefree monic ``f`` into products of equal-degree factors."""
    out = []
    rest = monic(f, p)
    x = [0, 1]
    h = x
    d = 0
    while deg(rest) >= 2 * (d + 1):
        d += 1
        h = powmod(h, p, rest, p)
        g = gcd(sub(h, x, p), rest, p)
        if deg(g) > 0:
            out.append((g, d))
            rest, _ = divmod_(rest, g, p)
            h = rem(h, rest, p)
    if deg(rest) > 0:
        out.append((rest, deg(rest)))
    return out


def equal_degree(f: list[int], d: int, p: int, seed: int = 0) -> list[list[int]]:
    """Split ``f`` (product of distinct irreducibles of degree ``d``)."""
    n = deg(f)
    if n == d:
        return [monic(f, p)]
    rng = random.Random(seed)
    while True:
        a = trim([rng.randrange(p) for _ in range(n)])
        if deg(a) < 1:
            continue
        if p == 2:
            # trace map F_{2^d} -> F_2
            t = a
            acc = a
            for _ in range(d - 1):
                t = rem(mul(t, t, p), f, p)
                acc = add(acc, t, p)
            b = acc
        else:
            b = sub(powmod(a, (p**d - 1) // 2, f, p), [1], p)
        g = gcd(b, f, p)
        if 0 < deg(g) < n:
            other, _ = divmod_(f, g, p)
            return equal_degree(g, d, p, seed + 1) + equal_degree(other, d, p, seed + 1)
        seed += 1
        rng = random.Random(seed)


def factor_squarefree(f: list[int], p: int, seed: int = 0) -> list[list[int]]:
    factors = []
    for g, d in distinct_degree(f, p):
        factors.extend(equal_degree(g, d, p, seed))
    return sorted(factors, key=lambda g: (len(g), g))


def is_irreducible(f: list[int], p: int) -> bool:
    """Rabin-style check: no factor of degree <= deg(f)/2."""
    n = deg(f)
    if n < 1:
        return False
    f = monic(f, p)
    x = [0, 1]
    h = x
    for _ in range(1, n // 2 + 1):
        h = powmod(h, p, f, p)
        if deg(gcd(sub(h, x, p), f, p)) > 0:
            return False
    return True
