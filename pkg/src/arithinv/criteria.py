"""Decision procedures for integral invariant rings.

Given invariants ``fs`` that generate the invariant ring over the fraction
field K of R = Z[zeta_n], ``R[fs]`` is the full integral invariant ring
exactly when the reductions of ``fs`` stay algebraically independent modulo
every maximal ideal of R. :func:`polynomial_ring_test` checks this on a
finite candidate set of ideals (see :func:`candidate_bad_primes`).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg
from .cyclo import CycNum, NotDefinedAtIdeal, PrimeIdeal, prime_factors, primes_above
from .groebner import elimination_ideal
from .invariants import (
    NOT_IN_SPAN,
    express_in_subalgebra,
    invariant_space,
    is_invariant,
    kemper_check,
    linear_invariants_mod,
)
from .matgroup import MatGroup, is_faithful_mod, reduce_group_mod
from .polyring import CycDomain, MonomialOrder, Poly, ResidueDomain, _factor_int, coeff_prime_support, jacobian_det, leading_term, monomials_of_degree


class PreconditionError(ValueError):
    pass


class Status(str, enum.Enum):
    POLYNOMIAL_RING = "POLYNOMIAL_RING"
    NOT_POLYNOMIAL_RING = "NOT_POLYNOMIAL_RING"
    POLYNOMIAL_AFTER_LOCALIZING = "POLYNOMIAL_AFTER_LOCALIZING"


@dataclass
class Verdict:
    status: Status
    bad_primes: list[PrimeIdeal] = field(default_factory=list)
    certificate: dict = field(default_factory=dict)
    witness: Poly | None = None
    checked_ideals: int = 0

    @property
    def required_primes(self) -> list[int]:
        return sorted({I.p for I in self.bad_primes})

    def to_json(self) -> dict:
        return {
            "status": self.status.value,
            "bad_primes": [I.to_json() for I in self.bad_primes],
            "witness": self.witness.to_json() if self.witness is not None else None,
            "checked_ideals": self.checked_ideals,
        }


# algebraic independence -------------------------------------------------


def alg_indep_char0(fs: list[Poly]) -> bool:
    if fs[0].domain.characteristic != 0:
        raise PreconditionError("needs a characteristic-zero coefficient domain")
    if len(fs) != fs[0].nvars:
        raise ValueError("system is not square")
    return not jacobian_det(fs).is_zero()


def _cuts_out_origin(fs: list[Poly]) -> bool:
    """Sufficient test for independence of a square homogeneous system.

    If the fs generate an ideal containing every monomial of degree
    ``sum(d_i - 1) + 1`` they vanish only at the origin, so ``k[x]`` is
    finite over ``k[fs]`` and the fs are independent. The converse fails
    (``x, xy``), so a False here decides nothing.
    """
    n = fs[0].nvars
    degs = [f.degree() for f in fs]
    if min(degs) <= 0:
        return False
    top = sum(d - 1 for d in degs) + 1
    targets = monomials_of_degree(n, top)
    rows = []
    for f, d in zip(fs, degs):
        for m in monomials_of_degree(n, top - d):
            shifted = f * Poly._raw(n, {m: f.domain(1)}, f.domain)
            rows.append([shifted.coeff(e) for e in targets])
    return linalg.rank(rows) == len(targets)


def _binary_forms_independent(a: Poly, b: Poly) -> bool:
    """Two nonzero binary forms are dependent iff a^(db/g) and b^(da/g) are proportional."""
    da, db = a.degree(), b.degree()
    g = math.gcd(da, db)
    u, v = a ** (db // g), b ** (da // g)
    if set(u.terms) != set(v.terms):
        return True
    e0 = next(iter(u.terms))
    ratio = u.terms[e0] / v.terms[e0]
    return any(u.terms[e] != ratio * v.terms[e] for e in u.terms)


def find_annihilator(fs: list[Poly], max_weight: int) -> dict | None:
    """A weighted-homogeneous relation among homogeneous fs, by linear algebra.

    Returns ``{exponents: coefficient}`` with ``sum(e_i deg f_i)`` at most
    ``max_weight``, or None.
    """
    from .invariants import _exponent_vectors

    degs = [f.degree() for f in fs]
    dom = fs[0].domain
    powers: dict = {}

    def power(i, k):
        if (i, k) not in powers:
            powers[(i, k)] = fs[i] ** k
        return powers[(i, k)]

    for w in range(1, max_weight + 1):
        exps = _exponent_vectors(degs, w)
        if len(exps) < 2:
            continue
        prods = []
        for e in exps:
            t = Poly.const(fs[0].nvars, 1, dom)
            for i, k in enumerate(e):
                if k:
                    t = t * power(i, k)
            prods.append(t)
        mons = sorted(set().union(*(q.terms for q in prods)))
        rows = [[q.coeff(m) for q in prods] for m in mons]
        kernel = linalg.nullspace(rows, len(exps), dom(0), dom(1))
        if kernel:
            return {e: c for e, c in zip(exps, kernel[0]) if c}
    return None


def _reduce_all(fs: list[Poly], ideal: PrimeIdeal) -> list[Poly]:
    try:
        return [f.reduce_mod(ideal) for f in fs]
    except NotDefinedAtIdeal as exc:
        raise PreconditionError(f"coefficients not defined at {ideal}: {exc}") from exc


def alg_indep_mod(fs: list[Poly], ideal: PrimeIdeal, jacobian: Poly | None = None, method: str = "auto") -> bool:
    """Algebraic independence of the reductions of ``fs`` over Z[zeta]/ideal.

    A nonzero Jacobian determinant settles independence in any
    characteristic. For a square homogeneous system the next steps are a
    vanishing-locus test (certifies independence), the exact test for two
    binary forms, and a search for a relation of weighted degree up to the
    product of the degrees (certifies dependence). Whatever is still open
    goes to elimination.
    """
    red = _reduce_all(fs, ideal)
    if method in ("auto", "jacobian") and len(red) == red[0].nvars:
        jac = jacobian.reduce_mod(ideal) if jacobian is not None else jacobian_det(red)
        if not jac.is_zero():
            return True
    if any(f.is_zero() for f in red):
        return False
    if method == "auto" and len(red) == red[0].nvars and all(f.is_homogeneous() for f in red):
        if _cuts_out_origin(red):
            return True
        if len(red) == 2:
            return _binary_forms_independent(*red)
        if find_annihilator(red, math.prod(f.degree() for f in red)) is not None:
            return False
    return not elimination_ideal(red)


def _is_unit_away_from(c: CycNum, inverted) -> bool:
    if c.is_zero():
        return False
    if any(q not in inverted for q in prime_factors(c.den)):
        return False
    nrm = c.norm()
    return all(q in inverted for q in _factor_int(nrm.numerator))


def _defined_away_from(c: CycNum, inverted) -> bool:
    return all(q in inverted for q in prime_factors(c.den))


def candidate_bad_primes(fs: list[Poly], group: MatGroup | None = None, jacobian: Poly | None = None) -> list[PrimeIdeal]:
    """Ideals at which independence can fail.

    If some coefficient of the Jacobian determinant is a unit at an ideal,
    the reduced Jacobian is nonzero there and independence is automatic.
    So only ideals containing every Jacobian coefficient can fail; the
    group-order primes are added on top.
    """
    jac = jacobian if jacobian is not None else jacobian_det(fs)
    if jac.is_zero():
        raise PreconditionError("polynomials are algebraically dependent over the fraction field")
    jac = jac * jac.denominator()
    primes = set(coeff_prime_support(jac))
    if group is not None:
        primes.update(prime_factors(group.order))
    n = fs[0].domain.n
    return [I for p in sorted(primes) for I in primes_above(n, p)]


def leading_monomial_criterion(fs: list[Poly], order: MonomialOrder, inverted=frozenset()) -> dict:
    """Unit leading coefficients and independent leading monomials."""
    lts = [leading_term(f, order) for f in fs]
    units = [_is_unit_away_from(c, inverted) for _, c in lts]
    exps = [[Fraction(k) for k in e] for e, _ in lts]
    indep = len(exps) == len(exps[0]) and linalg.rank(exps) == len(exps)
    return {
        "leading_monomials": [list(e) for e, _ in lts],
        "units": units,
        "independent": indep,
        "applies": all(units) and indep,
    }


def polynomial_ring_test(
    group: MatGroup,
    fs: list[Poly],
    inverted=frozenset(),
    *,
    witnesses=(),
    order: MonomialOrder | None = None,
    localize: bool = False,
) -> Verdict:
    """Decide whether ``R[1/inverted][fs]`` is the invariant ring of ``group``.

    With ``localize=True`` a failure is reported as
    POLYNOMIAL_AFTER_LOCALIZING together with the primes to invert.
    """
    inverted = frozenset(inverted)
    if not kemper_check(group, fs):
        raise PreconditionError("polynomials do not generate the invariants over the fraction field")
    for f in fs:
        for c in f.terms.values():
            if not _defined_away_from(c, inverted):
                raise PreconditionError(f"coefficient {c!r} is not integral away from {sorted(inverted)}")
    jac = jacobian_det(fs)
    candidates = [I for I in candidate_bad_primes(fs, group, jac) if I.p not in inverted]
    per_ideal = {}
    failing = []
    for ideal in candidates:
        ok = alg_indep_mod(fs, ideal, jacobian=jac)
        per_ideal[f"{ideal.p}:{list(ideal.factor)}"] = ok
        if not ok:
            failing.append(ideal)
    cert: dict = {"independence": per_ideal, "inverted": sorted(inverted)}
    if order is not None:
        lm = leading_monomial_criterion(fs, order, inverted)
        cert["leading_monomial_criterion"] = lm
        if lm["applies"] and failing:
            raise AssertionError("leading-monomial criterion contradicts residue independence")
    if not failing:
        return Verdict(Status.POLYNOMIAL_RING, [], cert, None, len(candidates))
    witness = None
    for w in witnesses:
        info = non_membership_witness(group, w, fs, inverted)
        if info is not None:
            witness = w
            cert["witness"] = info
            break
    if localize:
        cert["required_primes"] = sorted({I.p for I in failing})
        return Verdict(Status.POLYNOMIAL_AFTER_LOCALIZING, failing, cert, witness, len(candidates))
    return Verdict(Status.NOT_POLYNOMIAL_RING, failing, cert, witness, len(candidates))


def non_membership_witness(group: MatGroup, w: Poly, fs: list[Poly], inverted=frozenset()) -> dict | None:
    """Evidence that an integral invariant ``w`` lies outside ``R[1/inverted][fs]``.

    ``w`` has a unique expression in the fs over K; it lies in the smaller
    ring iff every coefficient is integral away from ``inverted``.
    """
    if not is_invariant(w, group):
        return None
    if not all(_defined_away_from(c, inverted) for c in w.terms.values()):
        return None
    rep = express_in_subalgebra(w, fs)
    if rep is NOT_IN_SPAN:
        return None
    bad = {e: c for e, c in rep.items() if not _defined_away_from(c, inverted)}
    if not bad:
        return None
    return {
        "representation": {str(list(e)): c.to_json() for e, c in rep.items()},
        "non_integral": {str(list(e)): c.to_json() for e, c in bad.items()},
        "denominators": sorted({c.den for c in bad.values()}),
    }


# leading-term reduction --------------------------------------------------


@dataclass
class SagbiResult:
    status: str  # MEMBER, NOT_MEMBER, NOT_APPLICABLE
    representation: dict = field(default_factory=dict)
    reason: str = ""
    integral: bool | None = None

    @property
    def is_member(self) -> bool:
        return self.status == "MEMBER"


def sagbi_membership(p: Poly, fs: list[Poly], order: MonomialOrder, inverted=frozenset()) -> SagbiResult:
    """Subalgebra membership by cancelling leading terms with products of fs.

    Needs unit leading coefficients (in ``R[1/inverted]``) and linearly
    independent leading exponent vectors; otherwise NOT_APPLICABLE.
    """
    n = len(fs)
    lts = [leading_term(f, order) for f in fs]
    reasons = []
    for k, (_, c) in enumerate(lts):
        if isinstance(c, CycNum) and not _is_unit_away_from(c, inverted):
            reasons.append(f"leading coefficient of generator {k} is not a unit: {c!r}")
    mat = [[Fraction(e[i]) for e, _ in lts] for i in range(p.nvars)]
    if n != p.nvars or linalg.rank(mat) != n:
        reasons.append("leading monomials are not independent")
    if reasons:
        return SagbiResult("NOT_APPLICABLE", reason="; ".join(reasons))
    rep: dict = {}
    rest = p
    cache: dict = {}
    while rest.terms:
        e, c = leading_term(rest, order)
        sol = linalg.solve(mat, [Fraction(k) for k in e], Fraction(0))
        if sol is None or any(s.denominator != 1 or s < 0 for s in sol):
            return SagbiResult("NOT_MEMBER", rep, reason=f"leading monomial {list(e)} is not a product of generator leading monomials")
        ex = tuple(int(s) for s in sol)
        if ex not in cache:
            t = Poly.const(p.nvars, 1, p.domain)
            for f, k in zip(fs, ex):
                if k:
                    t = t * f**k
            cache[ex] = t
        prod = cache[ex]
        _, lc = leading_term(prod, order)
        coef = c / lc
        rep[ex] = rep.get(ex, p.domain(0)) + coef
        rest = rest - prod.scale(coef)
    rep = {k: v for k, v in rep.items() if v}
    integral = all(_defined_away_from(v, inverted) for v in rep.values()) if isinstance(p.domain, CycDomain) else None
    return SagbiResult("MEMBER", rep, integral=integral)


# degree-one obstruction -------------------------------------------------


def degree_one_obstruction(group: MatGroup, ideal: PrimeIdeal) -> dict | None:
    """Faithful reduction with a linear invariant that does not lift.

    If the integral invariant ring were polynomial, its generators would
    reduce to generators of the invariants of the (faithful) reduced group,
    and these have no linear elements since the characteristic-zero ring
    has none. A nonzero linear invariant mod ``ideal`` contradicts that.
    """
    if invariant_space(group, 1).dim:
        return None
    if not is_faithful_mod(group, ideal):
        return None
    dom = ResidueDomain(ideal)
    reduced = reduce_group_mod(group.generators, ideal)
    forms = linear_invariants_mod(reduced, dom(0), dom(1))
    if not forms:
        return None
    return {
        "ideal": ideal.to_json(),
        "faithful": True,
        "linear_invariants": [[list(c.coords) for c in v] for v in forms],
    }
