"""Buchberger's algorithm over residue fields, used for elimination.

Only the first Buchberger criterion (coprime leading monomials) is used.
Inputs are tiny, so nothing clever happens here.
"""

from __future__ import annotations

from .polyring import Poly


def block_order_key(nx: int):
    """Elimination order: grevlex on the first ``nx`` variables, ties by grevlex on the rest."""

    def grevlex(e):
        return (sum(e),) + tuple(-k for k in reversed(e))

    def key(e):
        return grevlex(e[:nx]) + grevlex(e[nx:])

    return key


def _lead(f: Poly, key):
    e = max(f.terms, key=key)
    return e, f.terms[e]


def _divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _monic(f: Poly, key) -> Poly:
    _, c = _lead(f, key)
    return f.scale(1 / c)


def _mono(nvars, e, c, domain) -> Poly:
    return Poly._raw(nvars, {e: c}, domain)


def reduce(f: Poly, basis: list[Poly], key) -> Poly:
    """Full reduction of ``f`` by ``basis`` (assumed monic)."""
    leads = [(_lead(g, key)[0], g) for g in basis]
    r_terms: dict = {}
    p = f
    while p.terms:
        e, c = _lead(p, key)
        for le, g in leads:
            if _divides(le, e):
                shift = tuple(a - b for a, b in zip(e, le))
                p = p - _mono(f.nvars, shift, c, f.domain) * g
                break
        else:
            r_terms[e] = c
            p = Poly._raw(p.nvars, {k: v for k, v in p.terms.items() if k != e}, p.domain)
    return Poly._raw(f.nvars, r_terms, f.domain)


def s_poly(f: Poly, g: Poly, key) -> Poly:
    ef, cf = _lead(f, key)
    eg, cg = _lead(g, key)
    lcm = tuple(max(a, b) for a, b in zip(ef, eg))
    mf = _mono(f.nvars, tuple(a - b for a, b in zip(lcm, ef)), 1 / cf, f.domain)
    mg = _mono(g.nvars, tuple(a - b for a, b in zip(lcm, eg)), 1 / cg, g.domain)
    return mf * f - mg * g


def groebner_basis(polys: list[Poly], key, max_pairs: int = 200_000) -> list[Poly]:
    basis = [_monic(p, key) for p in polys if p.terms]
    pairs = [(i, j) for j in range(len(basis)) for i in range(j)]
    done = 0
    while pairs:
        i, j = pairs.pop()
        done += 1
        if done > max_pairs:
            raise RuntimeError("Groebner basis computation exceeded its pair budget")
        ei, _ = _lead(basis[i], key)
        ej, _ = _lead(basis[j], key)
        if all(a == 0 or b == 0 for a, b in zip(ei, ej)):
            continue
        r = reduce(s_poly(basis[i], basis[j], key), basis, key)
        if r.terms:
            basis.append(_monic(r, key))
            k = len(basis) - 1
            pairs.extend((m, k) for m in range(k))
    return interreduce(basis, key)


def interreduce(basis: list[Poly], key) -> list[Poly]:
    out = list(basis)
    changed = True
    while changed:
        changed = False
        for idx, g in enumerate(out):
            others = out[:idx] + out[idx + 1 :]
            eg, _ = _lead(g, key)
            if any(_divides(_lead(h, key)[0], eg) for h in others):
                out.pop(idx)
                changed = True
                break
    return [_monic(reduce(g, out[:k] + out[k + 1 :], key), key) for k, g in enumerate(out)]


def elimination_ideal(fs: list[Poly]) -> list[Poly]:
    """Generators of the kernel of ``t_i -> f_i``, as polynomials in the t-variables.

    Computes a Groebner basis of ``(t_i - f_i)`` in ``k[x, t]`` under an
    order with the x-block above the t-block, and keeps the elements free
    of x.
    """
    nx = fs[0].nvars
    nt = len(fs)
    dom = fs[0].domain
    nv = nx + nt
    gens = []
    for i, f in enumerate(fs):
        lifted = {e + (0,) * nt: c for e, c in f.terms.items()}
        t = [0] * nv
        t[nx + i] = 1
        g = Poly._raw(nv, dict(lifted), dom) - Poly._raw(nv, {tuple(t): dom(1)}, dom)
        gens.append(g)
    key = block_order_key(nx)
    gb = groebner_basis(gens, key)
    out = []
    for g in gb:
        if all(not any(e[:nx]) for e in g.terms):
            out.append(Poly._raw(nt, {e[nx:]: c for e, c in g.terms.items()}, dom))
    return out
