from __future__ import annotations

import json

import pytest

from arithinv.scenarios import SCENARIOS, Options, ResourceLimit, run_scenario, scenario_names


@pytest.mark.parametrize("name", scenario_names())
def test_scenario_passes(suite, name):
    records, _ = suite
    record = records[name]
    json.dumps(record.to_json())
    assert record.status == "PASS", record.flags


def test_every_scenario_has_a_claim():
    assert all(sc.claim for sc in SCENARIOS.values())
    assert len(set(scenario_names())) == len(SCENARIOS)


def test_unknown_scenario():
    with pytest.raises(KeyError):
        run_scenario("nope")


def test_resource_limits_are_distinct_errors():
    with pytest.raises(ResourceLimit):
        run_scenario("g19-powers", Options(max_order=1000))
