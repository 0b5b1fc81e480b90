"""Exact arithmetic in cyclotomic fields Q(zeta_n) and their residue fields.

Elements are stored in the power basis ``1, zeta, ..., zeta^(phi(n)-1)``
modulo the cyclotomic polynomial, as integer coordinates over one common
positive denominator.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import gfpoly


class ConductorMismatch(ValueError):
    pass


class NotDefinedAtIdeal(ValueError):
    """An element has a denominator that vanishes in the residue field."""


def euler_phi(n: int) -> int:
    result, m, q = n, n, 2
    while q * q <= m:
        if m % q == 0:
            while m % q == 0:
                m //= q
            result -= result // q
        q += 1
    if m > 1:
        result -= result // m
    return result


def prime_factors(n: int) -> list[int]:
    out, q = [], 2
    n = abs(n)
    while q * q <= n:
        if n % q == 0:
            out.append(q)
            while n % q == 0:
                n //= q
        q += 1
    if n > 1:
        out.append(n)
    return out


def is_prime(n: int) -> bool:
    return n >= 2 and prime_factors(n) == [n]


def _poly_divexact(a: list[int], b: list[int]) -> list[int]:
    # b monic
    a = list(a)
    q = [0] * (len(a) - len(b) + 1)
    for k in range(len(a) - 1, len(b) - 2, -1):
        c = a[k]
        if c:
            q[k - len(b) + 1] = c
            for j, y in enumerate(b):
                a[k - len(b) + 1 + j] -= c * y
    assert not any(a), "inexact division"
    return q


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, lowest degree first."""
    if n < 1:
        raise ValueError("conductor must be positive")
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            num = _poly_divexact(num, list(cyclotomic_poly(d)))
    return tuple(num)


class _Field:
    """Precomputed reduction data for one conductor."""

    def __init__(self, n: int):
        self.n = n
        self.phi = euler_phi(n)
        phi_poly = cyclotomic_poly(n)
        self.tail = [(j, c) for j, c in enumerate(phi_poly[:-1]) if c]
        # zeta^e in coordinates, for 0 <= e < n
        self.powers = []
        for e in range(n):
            v = [0] * max(e + 1, self.phi)
            v[e] = 1
            self.powers.append(tuple(self.reduce(v)))
        self.units = [k for k in range(1, n + 1) if math.gcd(k, n) == 1]

    def reduce(self, v: list[int]) -> list[int]:
        phi = self.phi
        for k in range(len(v) - 1, phi - 1, -1):
            c = v[k]
            if c:
                base = k - phi
                for j, cj in self.tail:
                    v[base + j] -= c * cj
        if len(v) < phi:
            v = v + [0] * (phi - len(v))
        return v[:phi]

    def from_exponents(self, terms) -> list[int]:
        """Sum of c*zeta^e over ``(e, c)`` pairs, exponents taken mod n."""
        out = [0] * self.phi
        for e, c in terms:
            if c:
                for j, x in enumerate(self.powers[e % self.n]):
                    if x:
                        out[j] += c * x
        return out


@lru_cache(maxsize=None)
def _field(n: int) -> _Field:
    return _Field(n)


def _canonical(coords: list[int], den: int) -> tuple[tuple[int, ...], int]:
    if den < 0:
        coords = [-c for c in coords]
        den = -den
    g = math.gcd(den, *coords)
    if g != 1:
        coords = [c // g for c in coords]
        den //= g
    return tuple(coords), den


class CycNum:
    """An element of Q(zeta_n).

    Values at different conductors never compare equal; use :meth:`coerce`
    to move both to a common conductor first.
    """

    __slots__ = ("n", "coords", "den", "_hash")

    def __init__(self, n: int, coords, den: int = 1, *, _canonical_form: bool = False):
        if _canonical_form:
            self.n, self.coords, self.den = n, coords, den
        else:
            if n < 1:
                raise ValueError("conductor must be positive")
            if den == 0:
                raise ZeroDivisionError("zero denominator")
            F = _field(n)
            v = [int(c) for c in coords]
            if len(v) > F.phi:
                v = F.reduce(v)
            else:
                v = v + [0] * (F.phi - len(v))
            self.n = n
            self.coords, self.den = _canonical(v, int(den))
        self._hash = None

    # construction helpers -------------------------------------------------

    @classmethod
    def _make(cls, n: int, coords: list[int], den: int) -> "CycNum":
        c, d = _canonical(coords, den)
        return cls(n, c, d, _canonical_form=True)

    @classmethod
    def from_rational(cls, n: int, q) -> "CycNum":
        q = Fraction(q)
        phi = _field(n).phi
        return cls(n, (q.numerator,) + (0,) * (phi - 1), q.denominator, _canonical_form=True)

    @classmethod
    def zeta(cls, n: int, k: int = 1) -> "CycNum":
        F = _field(n)
        return cls(n, F.powers[k % n], 1, _canonical_form=True)

    @classmethod
    def from_exponents(cls, n: int, terms, den: int = 1) -> "CycNum":
        """Build ``sum c * zeta_n**e / den`` from ``{e: c}`` or ``(e, c)`` pairs."""
        if isinstance(terms, dict):
            terms = terms.items()
        return cls._make(n, _field(n).from_exponents(terms), den)

    # predicates -------------------------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.coords)

    def is_integral(self) -> bool:
        return self.den == 1

    def is_rational(self) -> bool:
        return not any(self.coords[1:])

    def rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return Fraction(self.coords[0], self.den)

    # arithmetic -------------------------------------------------------------

    def _lift(self, other) -> "CycNum":
        if isinstance(other, CycNum):
            if other.n != self.n:
                raise ConductorMismatch(f"conductors {self.n} and {other.n}")
            return other
        if isinstance(other, (int, Fraction)):
            return CycNum.from_rational(self.n, other)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        if self.den == o.den:
            return CycNum._make(self.n, [a + b for a, b in zip(self.coords, o.coords)], self.den)
        return CycNum._make(
            self.n, [a * o.den + b * self.den for a, b in zip(self.coords, o.coords)], self.den * o.den
        )

    __radd__ = __add__

    def __neg__(self):
        return CycNum(self.n, tuple(-c for c in self.coords), self.den, _canonical_form=True)

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            return CycNum._make(self.n, [c * other for c in self.coords], self.den)
        o = self._lift(other)
        if o is NotImplemented:
            return o
        F = _field(self.n)
        a, b = self.coords, o.coords
        prod = [0] * (2 * F.phi - 1)
        nz = [(j, y) for j, y in enumerate(b) if y]
        for i, x in enumerate(a):
            if x:
                for j, y in nz:
                    prod[i + j] += x * y
        return CycNum._make(self.n, F.reduce(prod), self.den * o.den)

    __rmul__ = __mul__

    def galois(self, k: int) -> "CycNum":
        """Apply the automorphism zeta -> zeta**k (k coprime to n)."""
        if math.gcd(k, self.n) != 1:
            raise ValueError(f"{k} is not a unit mod {self.n}")
        F = _field(self.n)
        terms = [(i * k, c) for i, c in enumerate(self.coords) if c]
        return CycNum(self.n, tuple(F.from_exponents(terms)), self.den, _canonical_form=True)

    def _conjugate_product(self) -> "CycNum":
        acc = CycNum.from_rational(self.n, 1)
        for k in _field(self.n).units:
            if k != 1:
                acc = acc * self.galois(k)
        return acc

    def inverse(self) -> "CycNum":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        if self.is_rational():
            return CycNum.from_rational(self.n, 1 / self.rational())
        rest = self._conjugate_product()
        nrm = (self * rest).rational()
        return rest * (1 / nrm)

    def __truediv__(self, other):
        if isinstance(other, int):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return CycNum._make(self.n, list(self.coords), self.den * other)
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = CycNum.from_rational(self.n, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # comparisons ------------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, CycNum):
            return self.n == other.n and self.den == other.den and self.coords == other.coords
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.rational() == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(Fraction(self.coords[0], self.den))
            else:
                self._hash = hash((self.n, self.coords, self.den))
        return self._hash

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coords):
            if c:
                terms.append(f"{c}" if i == 0 else f"{c}*z{self.n}^{i}")
        body = " + ".join(terms) or "0"
        return f"({body})/{self.den}" if self.den != 1 else f"({body})"

    # field-level operations -----------------------------------------------

    def coerce(self, m: int) -> "CycNum":
        if m % self.n:
            raise ConductorMismatch(f"conductor {self.n} does not divide {m}")
        if m == self.n:
            return self
        step = m // self.n
        F = _field(m)
        terms = [(i * step, c) for i, c in enumerate(self.coords) if c]
        return CycNum._make(m, F.from_exponents(terms), self.den)

    def norm(self) -> Fraction:
        """Field norm to Q (product of all Galois conjugates)."""
        if self.is_zero():
            return Fraction(0)
        if self.is_rational():
            return self.rational() ** _field(self.n).phi
        return (self * self._conjugate_product()).rational()

    def is_unit(self) -> bool:
        if not self.is_integral():
            raise ValueError("unit test needs an integral element")
        return abs(self.norm()) == 1

    def to_json(self) -> dict:
        return {"n": self.n, "coords": list(self.coords), "den": self.den}

    @classmethod
    def from_json(cls, d: dict) -> "CycNum":
        return cls(d["n"], d["coords"], d.get("den", 1))


def cyc_make(n: int, coords, denom: int = 1) -> CycNum:
    return CycNum(n, coords, denom)


def cyc_arith(a: CycNum, b: CycNum, op: str) -> CycNum:
    if a.n != b.n:
        raise ConductorMismatch(f"conductors {a.n} and {b.n}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown op {op!r}")


def cyc_coerce(a: CycNum, m: int) -> CycNum:
    return a.coerce(m)


def cyc_norm(a: CycNum) -> Fraction:
    return a.norm()


def cyc_is_unit(a: CycNum) -> bool:
    return a.is_unit()


def common_conductor(values) -> int:
    m = 1
    for v in values:
        m = math.lcm(m, v.n)
    return m


# residue fields ---------------------------------------------------------


@dataclass(frozen=True, order=True)
class PrimeIdeal:
    """A maximal ideal of Z[zeta_n], given by ``p`` and a factor of Phi_n mod p."""

    n: int
    p: int
    factor: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.factor) - 1

    @property
    def size(self) -> int:
        return self.p**self.degree

    @property
    def ramified(self) -> bool:
        return self.n % self.p == 0

    def to_json(self) -> dict:
        return {"p": self.p, "factor": list(self.factor)}

    def __repr__(self):
        return f"PrimeIdeal(n={self.n}, p={self.p}, factor={list(self.factor)})"


@lru_cache(maxsize=None)
def primes_above(n: int, p: int) -> tuple[PrimeIdeal, ...]:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    m = n
    while m % p == 0:
        m //= p
    # Phi_n = Phi_m^(phi(p^k)) mod p, so Phi_m carries every residue field
    f = gfpoly.from_ints(cyclotomic_poly(m), p)
    return tuple(PrimeIdeal(n, p, tuple(g)) for g in gfpoly.factor_squarefree(f, p))


class ResidueElem:
    """Element of the finite field Z[zeta_n]/I."""

    __slots__ = ("ideal", "coords")

    def __init__(self, ideal: PrimeIdeal, coords):
        self.ideal = ideal
        d = ideal.degree
        v = gfpoly.from_ints(coords, ideal.p)
        if len(v) > d:
            v = gfpoly.rem(v, list(ideal.factor), ideal.p)
        self.coords = tuple(v) + (0,) * (d - len(v))

    @classmethod
    def from_int(cls, ideal: PrimeIdeal, c: int) -> "ResidueElem":
        return cls(ideal, [c])

    def _lift(self, other):
        if isinstance(other, ResidueElem):
            if other.ideal != self.ideal:
                raise ValueError("residue elements from different fields")
            return other
        if isinstance(other, int):
            return ResidueElem.from_int(self.ideal, other)
        if isinstance(other, Fraction):
            return ResidueElem.from_int(self.ideal, other.numerator) / other.denominator
        return NotImplemented

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __bool__(self):
        return not self.is_zero()

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        p = self.ideal.p
        return ResidueElem(self.ideal, [(a + b) % p for a, b in zip(self.coords, o.coords)])

    __radd__ = __add__

    def __neg__(self):
        return ResidueElem(self.ideal, [-a for a in self.coords])

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return o + (-self)

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        p = self.ideal.p
        if self.ideal.degree == 1:
            return ResidueElem(self.ideal, [self.coords[0] * o.coords[0]])
        prod = gfpoly.mul(list(self.coords), list(o.coords), p)
        return ResidueElem(self.ideal, gfpoly.rem(prod, list(self.ideal.factor), p))

    __rmul__ = __mul__

    def inverse(self) -> "ResidueElem":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in residue field")
        p = self.ideal.p
        if self.ideal.degree == 1:
            return ResidueElem(self.ideal, [pow(self.coords[0], -1, p)])
        _, s, _ = gfpoly.xgcd(gfpoly.trim(list(self.coords)), list(self.ideal.factor), p)
        return ResidueElem(self.ideal, s)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = ResidueElem.from_int(self.ideal, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, ResidueElem):
            return self.ideal == other.ideal and self.coords == other.coords
        if isinstance(other, int):
            return self == ResidueElem.from_int(self.ideal, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.ideal, self.coords))

    def __repr__(self):
        if self.ideal.degree == 1:
            return f"{self.coords[0]} (mod {self.ideal.p})"
        return f"{list(self.coords)} (mod {self.ideal.p}, {list(self.ideal.factor)})"

    def to_json(self) -> dict:
        return {"p": self.ideal.p, "factor": list(self.ideal.factor), "coords": list(self.coords)}


def cyc_reduce(a: CycNum, ideal: PrimeIdeal) -> ResidueElem:
    if ideal.n % a.n:
        raise ConductorMismatch(f"element of conductor {a.n} at an ideal of Z[zeta_{ideal.n}]")
    if a.n != ideal.n:
        a = a.coerce(ideal.n)
    p = ideal.p
    if a.den % p == 0:
        raise NotDefinedAtIdeal(f"denominator {a.den} is divisible by {p}")
    num = ResidueElem(ideal, a.coords)
    if a.den == 1:
        return num
    return num / ResidueElem.from_int(ideal, a.den)


def in_ideal(a: CycNum, ideal: PrimeIdeal) -> bool:
    return cyc_reduce(a, ideal).is_zero()
