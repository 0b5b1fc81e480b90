from __future__ import annotations

import pytest

from arithinv import catalog as C
from arithinv.cyclo import CycNum, primes_above
from arithinv.matgroup import ClosureOverflow, Mat, closure, conjugate_generators, is_faithful_mod, is_reflection


def test_closure_of_dihedral_group():
    r = Mat([[0, -1], [1, 0]])
    s = Mat([[1, 0], [0, -1]])
    g = closure([r, s])
    assert g.order == 8
    assert g.n_reflections() == 4


def test_closure_overflow():
    shear = Mat([[1, 1], [0, 1]])
    with pytest.raises(ClosureOverflow):
        closure([shear], max_order=50)


def test_matrix_algebra():
    i = CycNum.zeta(4)
    m = Mat([[1, i], [0, 2]])
    assert (m @ m.inverse()).is_identity()
    assert m.det() == 2
    u = Mat([[1, 1], [0, 1]])
    (g,) = conjugate_generators(u, [m])
    assert u @ g == m @ u


def test_reflections():
    assert is_reflection(Mat([[1, 0], [0, -1]]))
    assert not is_reflection(Mat([[-1, 0], [0, -1]]))


def test_faithfulness_mod_p():
    g = C.craig_rep(3, 1).group()
    assert is_faithful_mod(g, primes_above(1, 3)[0])
    sign = closure([Mat([[-1]])])
    assert not is_faithful_mod(sign, primes_above(1, 2)[0])


def _power_is_identity(m: Mat, k: int) -> bool:
    acc = Mat.identity(m.n, m.conductor)
    for _ in range(k):
        acc = acc @ m
    return acc.is_identity()


@pytest.mark.parametrize("n", range(3, 9))
def test_craig_generators_satisfy_coxeter_relations(n):
    for d in (d for d in range(1, n + 1) if n % d == 0):
        gens = C.craig_generators(n, d)
        assert len(gens) == n - 1
        for a in range(n - 1):
            assert _power_is_identity(gens[a], 2) and not gens[a].is_identity()
            for b in range(a + 1, n - 1):
                prod = gens[a] @ gens[b]
                assert _power_is_identity(prod, 3 if b == a + 1 else 2)
        assert all(g.is_integral() and is_reflection(g) for g in gens)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_craig_groups_have_order_n_factorial(n):
    import math

    for d in (d for d in range(1, n + 1) if n % d == 0):
        assert C.craig_rep(n, d).group().order == math.factorial(n)
