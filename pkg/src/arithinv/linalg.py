"""Exact row reduction over any field whose elements support ``+ - * /``."""

from __future__ import annotations


def rref(rows: list[list], ncols: int | None = None):
    """Reduced row echelon form. Returns ``(matrix, pivot_columns)``."""
    a = [list(r) for r in rows]
    if not a:
        return a, []
    ncols = len(a[0]) if ncols is None else ncols
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(a)) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv if x else x for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y if y else x for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == len(a):
            break
    return a, pivots


def rank(rows: list[list]) -> int:
    return len(rref(rows)[1])


def nullspace(rows: list[list], ncols: int, zero, one) -> list[list]:
    """Basis of the right kernel ``{v : rows @ v = 0}``."""
    if not rows:
        return [[one if i == j else zero for i in range(ncols)] for j in range(ncols)]
    red, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fcol in free:
        v = [zero] * ncols
        v[fcol] = one
        for i, pc in enumerate(pivots):
            v[pc] = -red[i][fcol]
        basis.append(v)
    return basis


def solve(rows: list[list], rhs: list, zero):
    """One solution of ``rows @ v = rhs`` or ``None`` if inconsistent."""
    ncols = len(rows[0]) if rows else 0
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, pivots = rref(aug, ncols + 1)
    if ncols in pivots:
        return None
    v = [zero] * ncols
    for i, pc in enumerate(pivots):
        v[pc] = red[i][ncols]
    return v
