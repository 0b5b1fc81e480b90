"""Invariant polynomials of finite matrix groups.

A polynomial ``f`` is invariant under a matrix ``M`` when ``f(M x) = f(x)``.
For a group this is the same condition as invariance under the usual left
action ``f(M^-1 x)``, since the group is closed under inversion.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import linalg
from .matgroup import Mat, MatGroup
from .polyring import CycDomain, MonomialOrder, Poly, jacobian_det, leading_term, monomials_of_degree, substitute_linear


class NotInvariant(ValueError):
    pass


class DependentGenerators(ValueError):
    pass


NOT_IN_SPAN = None


@dataclass
class GradedBasis:
    degree: int
    basis: list[Poly]

    @property
    def dim(self) -> int:
        return len(self.basis)


def is_invariant(f: Poly, gens) -> bool:
    gens = gens.generators if isinstance(gens, MatGroup) else gens
    return all(substitute_linear(_fit(m, f), f) == f for m in gens)


def _fit(m: Mat, f: Poly) -> Mat:
    """Bring a matrix to the conductor of a polynomial's coefficients."""
    if m.conductor == f.domain.n:
        return m
    return m.coerce(f.domain.n)


def reynolds(group: MatGroup, f: Poly) -> Poly:
    if f.domain.n % group.conductor == 0:
        dom = f.domain
    else:
        dom = CycDomain(group.conductor)
        f = f.coerce(group.conductor)
    acc = Poly(f.nvars, {}, dom)
    for g in group.elements:
        acc = acc + substitute_linear(_fit(g, f), f)
    return acc / group.order


def action_matrix(m: Mat, d: int, monomials=None, domain=None) -> list[list]:
    """Matrix of ``f -> f(m x)`` on forms of degree ``d`` (columns = images)."""
    n = m.n
    domain = domain or CycDomain(m.conductor)
    monomials = monomials or monomials_of_degree(n, d)
    index = {e: k for k, e in enumerate(monomials)}
    forms = [
        Poly(n, {tuple(int(i == j) for i in range(n)): c for j, c in enumerate(row) if c}, domain) for row in m.rows
    ]
    powers = []
    for form in forms:
        pw = [Poly.const(n, 1, domain)]
        for _ in range(d):
            pw.append(pw[-1] * form)
        powers.append(pw)
    zero = domain(0)
    cols = []
    for e in monomials:
        t = powers[0][e[0]]
        for i in range(1, n):
            if e[i]:
                t = t * powers[i][e[i]]
        col = [zero] * len(monomials)
        for me, c in t.terms.items():
            col[index[me]] = c
        cols.append(col)
    return [list(r) for r in zip(*cols)]


def invariant_space(group: MatGroup, d: int, method: str = "fixed_point") -> GradedBasis:
    """Basis of the degree-``d`` invariants, integral with rational content 1.

    ``method="fixed_point"`` intersects the fixed spaces of the generators;
    ``method="reynolds"`` row-reduces the Reynolds images of all monomials.
    """
    n = group.dim
    dom = CycDomain(group.conductor)
    mons = monomials_of_degree(n, d)
    m = len(mons)
    if method == "fixed_point":
        rows = []
        for g in group.generators:
            a = action_matrix(g, d, mons, dom)
            for r in range(m):
                a[r][r] = a[r][r] - 1
            rows.extend(a)
        vecs = linalg.nullspace(rows, m, dom(0), dom(1))
        polys = [Poly(n, {e: v[k] for k, e in enumerate(mons)}, dom) for v in vecs]
        red, _ = linalg.rref([[p.coeff(e) for e in mons] for p in polys], m)
    elif method == "reynolds":
        images = [reynolds(group, Poly(n, {e: 1}, dom)) for e in mons]
        red, piv = linalg.rref([[p.coeff(e) for e in mons] for p in images], m)
        red = red[: len(piv)]
    else:
        raise ValueError(f"unknown method {method!r}")
    basis = [Poly(n, {e: row[k] for k, e in enumerate(mons)}, dom).primitive() for row in red]
    return GradedBasis(d, [b for b in basis if b])


def unique_invariant(group: MatGroup, d: int, order: MonomialOrder, target_lc) -> Poly:
    """The invariant of degree ``d`` that is unique up to scalars, scaled to ``target_lc``."""
    space = invariant_space(group, d)
    if space.dim != 1:
        raise ValueError(f"degree {d} invariants have dimension {space.dim}, expected 1")
    return normalize_leading(space.basis[0], order, target_lc)


def _alg_independent_char0(fs: list[Poly]) -> bool:
    return len(fs) == fs[0].nvars and not jacobian_det(fs).is_zero()


def kemper_check(group: MatGroup, fs: list[Poly]) -> bool:
    """Degree product equals |G| and the fs are algebraically independent.

    When true, the fs generate the invariant ring over the fraction field.
    """
    for f in fs:
        if not is_invariant(f, group):
            raise NotInvariant(f"polynomial of degree {f.degree()} is not invariant")
    prod = 1
    for f in fs:
        prod *= f.degree()
    if prod != group.order:
        return False
    return _alg_independent_char0(fs)


def _exponent_vectors(degs: list[int], target: int):
    def rec(i, rest):
        if i == len(degs) - 1:
            if rest % degs[i] == 0:
                yield (rest // degs[i],)
            return
        for k in range(rest // degs[i], -1, -1):
            for tail in rec(i + 1, rest - k * degs[i]):
                yield (k,) + tail

    return list(rec(0, target))


def express_in_subalgebra(target: Poly, gens: list[Poly]):
    """Write a homogeneous ``target`` as a polynomial in ``gens`` over the fraction field.

    Returns ``{exponents: coefficient}`` or ``NOT_IN_SPAN``.
    """
    if not target.is_homogeneous():
        raise ValueError("target must be homogeneous")
    if len(gens) == target.nvars and not _alg_independent_char0(gens):
        raise DependentGenerators("generators are algebraically dependent")
    if target.is_zero():
        return {}
    degs = [g.degree() for g in gens]
    exps = _exponent_vectors(degs, target.degree())
    if not exps:
        return NOT_IN_SPAN
    dom = target.domain
    prods = []
    cache = {}
    for e in exps:
        t = Poly.const(target.nvars, 1, dom)
        for g, k, i in zip(gens, e, itertools.count()):
            if k:
                if (i, k) not in cache:
                    cache[(i, k)] = g**k
                t = t * cache[(i, k)]
        prods.append(t)
    mons = sorted(set().union(target.terms, *(p.terms for p in prods)))
    rows = [[p.coeff(m) for p in prods] for m in mons]
    rhs = [target.coeff(m) for m in mons]
    sol = linalg.solve(rows, rhs, dom(0))
    if sol is None:
        return NOT_IN_SPAN
    return {e: c for e, c in zip(exps, sol) if c}


def evaluate_representation(rep: dict, gens: list[Poly]) -> Poly:
    g0 = gens[0]
    acc = Poly(g0.nvars, {}, g0.domain)
    for e, c in rep.items():
        t = Poly.const(g0.nvars, c, g0.domain)
        for g, k in zip(gens, e):
            if k:
                t = t * g**k
        acc = acc + t
    return acc


def normalize_leading(f: Poly, order: MonomialOrder, target_lc) -> Poly:
    if f.is_zero():
        raise ValueError("zero polynomial")
    target_lc = f.domain(target_lc)
    if not target_lc:
        raise ValueError("zero target leading coefficient")
    _, lc = leading_term(f, order)
    return f.scale(target_lc / lc)


def linear_invariants_mod(gens_mod, zero, one) -> list[list]:
    """Linear forms ``c . x`` fixed by reduced matrices: ``c M = c`` for all M."""
    k = len(gens_mod[0])
    rows = []
    for m in gens_mod:
        # columns of (M - I) give equations on c
        for j in range(k):
            rows.append([m[i][j] - (one if i == j else zero) for i in range(k)])
    return linalg.nullspace(rows, k, zero, one)


__all__ = [
    "DependentGenerators",
    "GradedBasis",
    "NOT_IN_SPAN",
    "NotInvariant",
    "action_matrix",
    "evaluate_representation",
    "express_in_subalgebra",
    "invariant_space",
    "is_invariant",
    "kemper_check",
    "linear_invariants_mod",
    "normalize_leading",
    "reynolds",
    "unique_invariant",
]
