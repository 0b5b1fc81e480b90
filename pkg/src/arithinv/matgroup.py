"""Finite matrix groups over cyclotomic fields."""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field

from . import linalg
from .cyclo import CycNum, NotDefinedAtIdeal, PrimeIdeal, ResidueElem, common_conductor, cyc_reduce

DEFAULT_MAX_ORDER = 4000


class ClosureOverflow(RuntimeError):
    """Raised when a closure grows past ``max_order``."""


class Mat:
    """Square matrix with entries in one Q(zeta_n)."""

    __slots__ = ("rows", "n", "conductor", "_key")

    def __init__(self, rows, conductor: int | None = None):
        rows = [list(r) for r in rows]
        size = len(rows)
        if any(len(r) != size for r in rows):
            raise ValueError("matrix must be square")
        if conductor is None:
            conductor = common_conductor(c for r in rows for c in r if isinstance(c, CycNum))
        self.conductor = conductor
        self.n = size
        self.rows = tuple(tuple(_as_cyc(c, conductor) for c in r) for r in rows)
        self._key = None

    @classmethod
    def identity(cls, size: int, conductor: int = 1) -> "Mat":
        return cls([[int(i == j) for j in range(size)] for i in range(size)], conductor)

    @classmethod
    def diag(cls, entries, conductor: int | None = None) -> "Mat":
        k = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(k)] for i in range(k)], conductor)

    def key(self):
        if self._key is None:
            self._key = tuple((c.coords, c.den) for r in self.rows for c in r)
        return self._key

    def __eq__(self, other):
        return isinstance(other, Mat) and self.conductor == other.conductor and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __matmul__(self, other: "Mat") -> "Mat":
        if self.conductor != other.conductor:
            m = math.lcm(self.conductor, other.conductor)
            return self.coerce(m) @ other.coerce(m)
        a, b = self.rows, other.rows
        k = self.n
        cols = list(zip(*b))
        out = []
        for r in a:
            row = []
            for col in cols:
                acc = None
                for x, y in zip(r, col):
                    if x and y:
                        acc = x * y if acc is None else acc + x * y
                row.append(acc if acc is not None else CycNum.from_rational(self.conductor, 0))
            out.append(row)
        m = Mat.__new__(Mat)
        m.rows = tuple(tuple(r) for r in out)
        m.n, m.conductor, m._key = k, self.conductor, None
        return m

    def scale(self, c) -> "Mat":
        if not isinstance(c, CycNum):
            c = CycNum.from_rational(self.conductor, c)
        cond = math.lcm(self.conductor, c.n)
        base = self.coerce(cond)
        c = c.coerce(cond)
        return Mat([[x * c for x in r] for r in base.rows], cond)

    def coerce(self, m: int) -> "Mat":
        if m == self.conductor:
            return self
        return Mat([[x.coerce(m) for x in r] for r in self.rows], m)

    def __sub__(self, other: "Mat") -> "Mat":
        return Mat([[x - y for x, y in zip(r, s)] for r, s in zip(self.rows, other.rows)], self.conductor)

    def transpose(self) -> "Mat":
        return Mat(list(zip(*self.rows)), self.conductor)

    def det(self):
        from .polyring import matrix_det

        return matrix_det(self.rows)

    def inverse(self) -> "Mat":
        k = self.n
        zero = CycNum.from_rational(self.conductor, 0)
        one = CycNum.from_rational(self.conductor, 1)
        aug = [list(r) + [one if i == j else zero for j in range(k)] for i, r in enumerate(self.rows)]
        red, piv = linalg.rref(aug, k)
        if piv != list(range(k)):
            raise ValueError("singular matrix")
        return Mat([r[k:] for r in red], self.conductor)

    def is_identity(self) -> bool:
        return all((x == 1) if i == j else x.is_zero() for i, r in enumerate(self.rows) for j, x in enumerate(r))

    def is_integral(self) -> bool:
        return all(x.is_integral() for r in self.rows for x in r)

    def rank(self) -> int:
        return linalg.rank([list(r) for r in self.rows])

    def to_json(self) -> list:
        return [[x.to_json() for x in r] for r in self.rows]

    def __repr__(self):
        return "Mat(" + repr([list(r) for r in self.rows]) + ")"


def _as_cyc(c, n: int) -> CycNum:
    if isinstance(c, CycNum):
        return c if c.n == n else c.coerce(n)
    return CycNum.from_rational(n, c)


def homogenize(mats: list[Mat]) -> list[Mat]:
    """Coerce all matrices to the lcm of their conductors."""
    m = math.lcm(*(g.conductor for g in mats))
    return [g.coerce(m) for g in mats]


@dataclass
class MatGroup:
    generators: list[Mat]
    elements: list[Mat] = field(repr=False)

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def conductor(self) -> int:
        return self.generators[0].conductor

    @property
    def dim(self) -> int:
        return self.generators[0].n

    def n_reflections(self) -> int:
        return sum(1 for g in self.elements if is_reflection(g))

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "n_reflections": self.n_reflections(),
            "conductor": self.conductor,
            "generators": [g.to_json() for g in self.generators],
        }


def closure(gens: list[Mat], max_order: int = DEFAULT_MAX_ORDER) -> MatGroup:
    """Breadth-first closure of ``gens`` under right multiplication."""
    if not gens:
        raise ValueError("need at least one generator")
    gens = homogenize(gens)
    ident = Mat.identity(gens[0].n, gens[0].conductor)
    seen = {ident.key()}
    elements = [ident]
    queue = deque([ident])
    while queue:
        a = queue.popleft()
        for g in gens:
            b = a @ g
            k = b.key()
            if k not in seen:
                seen.add(k)
                elements.append(b)
                if len(elements) > max_order:
                    raise ClosureOverflow(f"closure exceeds {max_order} elements")
                queue.append(b)
    return MatGroup(gens, elements)


def is_reflection(m: Mat) -> bool:
    return (m - Mat.identity(m.n, m.conductor)).rank() == 1


def conjugate_generators(u: Mat, gens: list[Mat]) -> list[Mat]:
    """Return ``u^-1 g u`` for each generator."""
    mats = homogenize([u] + list(gens))
    u = mats[0]
    ui = u.inverse()
    return [ui @ g @ u for g in mats[1:]]


def reduce_mat(m: Mat, ideal: PrimeIdeal) -> tuple[tuple[ResidueElem, ...], ...]:
    return tuple(tuple(cyc_reduce(x, ideal) for x in r) for r in m.rows)


def reduce_group_mod(gens: list[Mat], ideal: PrimeIdeal):
    """Entrywise reduction; raises NotDefinedAtIdeal on a bad denominator."""
    return [reduce_mat(g, ideal) for g in gens]


def is_faithful_mod(group: MatGroup, ideal: PrimeIdeal) -> bool:
    images = set()
    for g in group.elements:
        img = tuple(x.coords for r in reduce_mat(g, ideal) for x in r)
        if img in images:
            return False
        images.add(img)
    return True


__all__ = [
    "ClosureOverflow",
    "Mat",
    "MatGroup",
    "NotDefinedAtIdeal",
    "closure",
    "conjugate_generators",
    "is_faithful_mod",
    "is_reflection",
    "reduce_group_mod",
    "reduce_mat",
]
