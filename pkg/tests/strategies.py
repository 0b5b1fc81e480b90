"""Shared hypothesis strategies."""

from __future__ import annotations

from hypothesis import strategies as st

from arithinv.cyclo import CycNum, euler_phi
from arithinv.polyring import CycDomain, Poly, monomials_of_degree

CONDUCTORS = (3, 4, 8, 12, 24, 60)


def cyc(n: int, integral: bool = False, bound: int = 20):
    den = st.just(1) if integral else st.integers(1, 12)
    coords = st.lists(st.integers(-bound, bound), min_size=euler_phi(n), max_size=euler_phi(n))
    return st.builds(lambda c, d: CycNum(n, c, d), coords, den)


def homogeneous(nvars: int, degree: int, n: int = 1, bound: int = 5, max_terms: int = 6):
    """A homogeneous polynomial with small integer coefficients in Q(zeta_n)."""
    mons = monomials_of_degree(nvars, degree)
    terms = st.dictionaries(st.sampled_from(mons), st.integers(-bound, bound), min_size=1, max_size=max_terms)
    return terms.map(lambda t: Poly(nvars, t, CycDomain(n)))


def polynomial(nvars: int, max_degree: int, bound: int = 5, max_terms: int = 5):
    mons = [m for d in range(max_degree + 1) for m in monomials_of_degree(nvars, d)]
    terms = st.dictionaries(st.sampled_from(mons), st.integers(-bound, bound), min_size=1, max_size=max_terms)
    return terms.map(lambda t: Poly(nvars, t))
