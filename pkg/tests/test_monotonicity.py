"""Inverting more primes never turns a polynomial-ring verdict into a failure."""

from __future__ import annotations

import pytest

from arithinv.criteria import Status, polynomial_ring_test
from arithinv.scenarios import scenario_names

RING_SCENARIOS = [n for n in scenario_names() if not n.startswith(("craig-rows", "craig-v", "l0-equiv", "st-orders", "g8-relation", "g22-leading", "l3-mod"))]


@pytest.mark.parametrize("name", RING_SCENARIOS)
def test_verdicts_are_monotone_under_localization(suite, name):
    _, calls = suite
    assert calls.get(name), f"{name} made no ring test"
    for group, fs, inverted, kw, v in calls[name]:
        kw = {k: w for k, w in kw.items() if k != "witnesses"}
        if isinstance(v, Exception):
            continue
        if v.status == Status.POLYNOMIAL_RING:
            # one more prime, chosen among those the test actually examined
            extra = sorted({int(key.split(":")[0]) for key in v.certificate["independence"]} - inverted)
            for q in extra[:1] or [7]:
                w = polynomial_ring_test(group, fs, inverted | {q}, **kw)
                assert w.status == Status.POLYNOMIAL_RING
        else:
            required = set(v.required_primes)
            assert required and not required & inverted
            w = polynomial_ring_test(group, fs, inverted | required, **kw)
            assert w.status == Status.POLYNOMIAL_RING
            # a proper subset of the required primes is not enough
            for q in required:
                partial = polynomial_ring_test(group, fs, inverted | (required - {q}), **kw)
                assert partial.status != Status.POLYNOMIAL_RING
