"""Exact checks of whether integral invariant rings of finite reflection groups are polynomial."""

from .cyclo import CycNum, PrimeIdeal, primes_above
from .criteria import Status, Verdict, alg_indep_mod, polynomial_ring_test, sagbi_membership
from .matgroup import Mat, MatGroup, closure
from .polyring import MonomialOrder, Poly

__all__ = [
    "CycNum",
    "Mat",
    "MatGroup",
    "MonomialOrder",
    "Poly",
    "PrimeIdeal",
    "Status",
    "Verdict",
    "alg_indep_mod",
    "closure",
    "polynomial_ring_test",
    "primes_above",
    "sagbi_membership",
]
