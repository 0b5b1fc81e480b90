"""Sparse multivariate polynomials over Q(zeta_n) or over a residue field."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

import sympy

from .cyclo import CycNum, PrimeIdeal, ResidueElem, cyc_reduce, primes_above


class DomainMismatch(ValueError):
    pass


@dataclass(frozen=True)
class CycDomain:
    """Coefficients in Q(zeta_n); characteristic zero."""

    n: int

    characteristic = 0

    def __call__(self, c) -> CycNum:
        if isinstance(c, CycNum):
            if c.n == self.n:
                return c
            return c.coerce(self.n)
        return CycNum.from_rational(self.n, c)

    def owns(self, c) -> bool:
        return isinstance(c, CycNum) and c.n == self.n

    def to_json(self) -> dict:
        return {"kind": "cyclotomic", "n": self.n}


@dataclass(frozen=True)
class ResidueDomain:
    """Coefficients in the finite field Z[zeta_n]/ideal."""

    ideal: PrimeIdeal

    @property
    def characteristic(self) -> int:
        return self.ideal.p

    def __call__(self, c) -> ResidueElem:
        if isinstance(c, ResidueElem):
            if c.ideal != self.ideal:
                raise DomainMismatch("residue element from another field")
            return c
        if isinstance(c, CycNum):
            return cyc_reduce(c, self.ideal)
        if isinstance(c, Fraction):
            return ResidueElem.from_int(self.ideal, c.numerator) / c.denominator
        return ResidueElem.from_int(self.ideal, c)

    def owns(self, c) -> bool:
        return isinstance(c, ResidueElem) and c.ideal == self.ideal

    def to_json(self) -> dict:
        return {"kind": "residue", **self.ideal.to_json()}


QQ = CycDomain(1)


@dataclass(frozen=True)
class MonomialOrder:
    """A monomial order given by a kind and a variable priority.

    ``priority`` lists variable indices from most to least significant, so
    ``MonomialOrder("lex", (2, 1, 0))`` is lex with z > y > x.
    """

    kind: str = "lex"
    priority: tuple[int, ...] = ()

    def key(self, exps: tuple[int, ...]):
        pr = self.priority or tuple(range(len(exps)))
        if self.kind == "lex":
            return tuple(exps[i] for i in pr)
        if self.kind == "grlex":
            return (sum(exps),) + tuple(exps[i] for i in pr)
        if self.kind == "grevlex":
            return (sum(exps),) + tuple(-exps[i] for i in reversed(pr))
        raise ValueError(f"unknown monomial order {self.kind!r}")

    def to_json(self) -> dict:
        return {"kind": self.kind, "priority": list(self.priority)}


def lex(nvars: int, *priority: int) -> MonomialOrder:
    return MonomialOrder("lex", tuple(priority) if priority else tuple(range(nvars)))


def _internal_key(exps):
    # graded lex with x_0 most significant; used only for canonical output order
    return (sum(exps),) + tuple(exps)


def monomials_of_degree(nvars: int, d: int) -> list[tuple[int, ...]]:
    """All exponent vectors of total degree ``d``, in decreasing lex order."""
    if nvars == 1:
        return [(d,)]
    out = []
    for a in range(d, -1, -1):
        for rest in monomials_of_degree(nvars - 1, d - a):
            out.append((a,) + rest)
    return out


class Poly:
    __slots__ = ("nvars", "terms", "domain")

    def __init__(self, nvars: int, terms=None, domain=QQ):
        self.nvars = nvars
        self.domain = domain
        clean = {}
        if terms:
            for e, c in terms.items():
                e = tuple(e)
                if len(e) != nvars:
                    raise ValueError(f"exponent {e} has wrong length for {nvars} variables")
                c = domain(c)
                if c:
                    clean[e] = c
        self.terms = clean

    @classmethod
    def _raw(cls, nvars, terms, domain) -> "Poly":
        p = cls.__new__(cls)
        p.nvars, p.terms, p.domain = nvars, terms, domain
        return p

    @classmethod
    def const(cls, nvars: int, c, domain=QQ) -> "Poly":
        return cls(nvars, {(0,) * nvars: c}, domain)

    @classmethod
    def var(cls, nvars: int, i: int, domain=QQ) -> "Poly":
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): 1}, domain)

    @classmethod
    def gens(cls, nvars: int, domain=QQ) -> list["Poly"]:
        return [cls.var(nvars, i, domain) for i in range(nvars)]

    # basic structure --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def coeff(self, exps) -> object:
        return self.terms.get(tuple(exps), self.domain(0))

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: _internal_key(t[0]), reverse=True)

    # arithmetic -------------------------------------------------------------

    def _check(self, other: "Poly"):
        if self.nvars != other.nvars:
            raise DomainMismatch(f"{self.nvars} vs {other.nvars} variables")
        if self.domain != other.domain:
            raise DomainMismatch(f"coefficient domains {self.domain} and {other.domain}")

    def _coerce_other(self, other):
        if isinstance(other, Poly):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)) or self.domain.owns(other):
            return Poly.const(self.nvars, other, self.domain)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce_other(other)
        if o is NotImplemented:
            return o
        out = dict(self.terms)
        for e, c in o.terms.items():
            v = out.get(e)
            v = c if v is None else v + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return Poly._raw(self.nvars, out, self.domain)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(self.nvars, {e: -c for e, c in self.terms.items()}, self.domain)

    def __sub__(self, other):
        o = self._coerce_other(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce_other(other)
        if o is NotImplemented:
            return o
        return o + (-self)

    def scale(self, c) -> "Poly":
        c = self.domain(c)
        if not c:
            return Poly._raw(self.nvars, {}, self.domain)
        return Poly._raw(self.nvars, {e: v * c for e, v in self.terms.items()}, self.domain)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) or (not isinstance(other, Poly) and self.domain.owns(other)):
            return self.scale(other)
        o = self._coerce_other(other)
        if o is NotImplemented:
            return o
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = out.get(e)
                out[e] = c1 * c2 if v is None else v + c1 * c2
        return Poly._raw(self.nvars, {e: c for e, c in out.items() if c}, self.domain)

    __rmul__ = __mul__

    def __truediv__(self, c):
        return self.scale(1 / self.domain(c))

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = Poly.const(self.nvars, 1, self.domain)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.nvars == other.nvars and self.domain == other.domain and self.terms == other.terms
        if isinstance(other, int):
            return self == Poly.const(self.nvars, other, self.domain)
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    # calculus, evaluation, maps -------------------------------------------

    def diff(self, i: int) -> "Poly":
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                v = c * e[i]
                if v:
                    ne = list(e)
                    ne[i] -= 1
                    out[tuple(ne)] = v
        return Poly._raw(self.nvars, out, self.domain)

    def evaluate(self, point):
        acc = self.domain(0)
        for e, c in self.terms.items():
            t = c
            for x, k in zip(point, e):
                if k:
                    t = t * x**k
            acc = acc + t
        return acc

    def map_coeffs(self, fn, domain) -> "Poly":
        out = {}
        for e, c in self.terms.items():
            v = fn(c)
            if v:
                out[e] = v
        return Poly._raw(self.nvars, out, domain)

    def reduce_mod(self, ideal: PrimeIdeal) -> "Poly":
        dom = ResidueDomain(ideal)
        return self.map_coeffs(lambda c: cyc_reduce(c, ideal), dom)

    def coerce(self, m: int) -> "Poly":
        return self.map_coeffs(lambda c: c.coerce(m), CycDomain(m))

    def is_integral(self) -> bool:
        return all(c.is_integral() for c in self.terms.values())

    def denominator(self) -> int:
        return math.lcm(1, *(c.den for c in self.terms.values()))

    def rational_content(self) -> int:
        """gcd of every integer coordinate of every coefficient (integral input)."""
        g = 0
        for c in self.terms.values():
            g = math.gcd(g, *c.coords)
        return g

    def primitive(self) -> "Poly":
        """Clear denominators, then divide out the rational-integer content."""
        if not self.terms:
            return self
        p = self * self.denominator()
        g = p.rational_content()
        return p.scale(Fraction(1, g)) if g > 1 else p

    # serialization ----------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "nvars": self.nvars,
            "terms": [{"exps": list(e), "coeff": c.to_json()} for e, c in self.sorted_terms()],
        }

    @classmethod
    def from_json(cls, d: dict) -> "Poly":
        terms = {tuple(t["exps"]): CycNum.from_json(t["coeff"]) for t in d["terms"]}
        if terms:
            dom = CycDomain(next(iter(terms.values())).n)
        else:
            dom = QQ
        return cls(d["nvars"], terms, dom)

    def __repr__(self):
        names = "xyzwuvst"
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                (names[i] if self.nvars <= len(names) else f"x{i}") + (f"^{k}" if k > 1 else "")
                for i, k in enumerate(e)
                if k
            )
            parts.append(f"{c!r}*{mono}" if mono else f"{c!r}")
        return " + ".join(parts)


def poly_arith(a: Poly, b: Poly, op: str) -> Poly:
    a._check(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


def matrix_det(m):
    """Determinant of a small square matrix over any field (Gaussian elimination)."""
    a = [list(row) for row in m]
    n = len(a)
    det = None
    sign = 1
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            return a[0][0] * 0
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            sign = -sign
        pv = a[col][col]
        det = pv if det is None else det * pv
        inv = 1 / pv
        for r in range(col + 1, n):
            if a[r][col]:
                fct = a[r][col] * inv
                a[r] = [x - fct * y for x, y in zip(a[r], a[col])]
    return det if sign == 1 else -det


def substitute_linear(m, f: Poly) -> Poly:
    """Return the polynomial ``x -> f(m @ x)``.

    ``m`` is a square matrix (sequence of rows) of coefficients; a
    :class:`~arithinv.matgroup.Mat` works as well.
    """
    rows = [list(r) for r in (m.rows if hasattr(m, "rows") else m)]
    n = f.nvars
    if len(rows) != n or any(len(r) != n for r in rows):
        raise ValueError(f"matrix size does not match {n} variables")
    dom = f.domain
    rows = [[dom(c) for c in r] for r in rows]
    if not matrix_det(rows):
        raise ValueError("singular substitution matrix")
    forms = []
    for r in rows:
        forms.append(Poly._raw(n, {tuple(int(i == j) for i in range(n)): c for j, c in enumerate(r) if c}, dom))
    maxdeg = [0] * n
    for e in f.terms:
        for i, k in enumerate(e):
            maxdeg[i] = max(maxdeg[i], k)
    powers = []
    for i in range(n):
        pw = [Poly.const(n, 1, dom)]
        for _ in range(maxdeg[i]):
            pw.append(pw[-1] * forms[i])
        powers.append(pw)
    out = Poly._raw(n, {}, dom)
    acc: dict = {}
    for e, c in f.terms.items():
        t = None
        for i, k in enumerate(e):
            if k:
                t = powers[i][k] if t is None else t * powers[i][k]
        if t is None:
            t = powers[0][0]
        for me, mc in t.terms.items():
            v = acc.get(me)
            acc[me] = mc * c if v is None else v + mc * c
    out.terms = {e: c for e, c in acc.items() if c}
    return out


def leading_term(f: Poly, order: MonomialOrder):
    if not f.terms:
        raise ValueError("zero polynomial has no leading term")
    e = max(f.terms, key=order.key)
    return e, f.terms[e]


def jacobian_matrix(fs: list[Poly]) -> list[list[Poly]]:
    n = fs[0].nvars
    return [[f.diff(j) for j in range(n)] for f in fs]


def jacobian_det(fs: list[Poly]) -> Poly:
    key = tuple(fs)
    hit = _JACOBIAN_CACHE.get(key)
    if hit is None:
        hit = _jacobian_det(list(fs))
        if len(_JACOBIAN_CACHE) > 256:
            _JACOBIAN_CACHE.clear()
        _JACOBIAN_CACHE[key] = hit
    return hit


# Jacobians are reused by several checks on the same system
_JACOBIAN_CACHE: dict = {}


def _jacobian_det(fs: list[Poly]) -> Poly:
    if not fs:
        raise ValueError("empty system")
    n = fs[0].nvars
    if len(fs) != n:
        raise ValueError(f"{len(fs)} polynomials in {n} variables is not square")
    for f in fs:
        fs[0]._check(f)
    jac = jacobian_matrix(fs)
    dom = fs[0].domain

    # Laplace expansion along rows, memoized on the set of remaining columns
    memo: dict = {}

    def minor(row: int, cols: tuple[int, ...]) -> Poly:
        if row == n:
            return Poly.const(n, 1, dom)
        key = cols
        if key in memo:
            return memo[key]
        acc = Poly._raw(n, {}, dom)
        for idx, c in enumerate(cols):
            entry = jac[row][c]
            if entry:
                sub = minor(row + 1, cols[:idx] + cols[idx + 1 :])
                if sub:
                    term = entry * sub
                    acc = acc + term if idx % 2 == 0 else acc - term
        memo[key] = acc
        return acc

    return minor(0, tuple(range(n)))


def _factor_int(m: int) -> list[int]:
    return sorted(sympy.factorint(abs(m)).keys())


def coeff_prime_support(f: Poly) -> set[int]:
    """Rational primes p such that all coefficients of f lie in one ideal above p."""
    if not f.terms:
        raise ValueError("zero polynomial")
    if not isinstance(f.domain, CycDomain):
        raise DomainMismatch("needs cyclotomic coefficients")
    if not f.is_integral():
        raise ValueError("coefficients must be integral")
    # a prime in the support divides the norm of every coefficient
    g = 0
    for c in sorted(f.terms.values(), key=lambda c: sum(abs(x) for x in c.coords)):
        g = math.gcd(g, int(c.norm()))
        if g == 1:
            return set()
    out = set()
    for p in _factor_int(g):
        for ideal in primes_above(f.domain.n, p):
            if all(cyc_reduce(c, ideal).is_zero() for c in f.terms.values()):
                out.add(p)
                break
    return out


def elementary_symmetric(n: int, i: int, domain=QQ) -> Poly:
    terms = {}
    for combo in itertools.combinations(range(n), i):
        e = [0] * n
        for j in combo:
            e[j] = 1
        terms[tuple(e)] = 1
    return Poly(n, terms, domain)


def compose(f: Poly, images: list[Poly]) -> Poly:
    """Substitute polynomial ``images[i]`` for variable ``i`` of ``f``."""
    if len(images) != f.nvars:
        raise ValueError("need one image per variable")
    tgt = images[0]
    acc = Poly._raw(tgt.nvars, {}, tgt.domain)
    cache: dict = {}

    def power(i, k):
        if (i, k) not in cache:
            cache[(i, k)] = images[i] ** k
        return cache[(i, k)]

    for e, c in f.terms.items():
        t = Poly.const(tgt.nvars, tgt.domain(c), tgt.domain)
        for i, k in enumerate(e):
            if k:
                t = t * power(i, k)
        acc = acc + t
    return acc
