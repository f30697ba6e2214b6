from __future__ import annotations

import json
from dataclasses import replace

import pytest

from conftest import all_fixture_names, fixture_path, load_fixture
from evac import (
    InvalidScenario,
    init_state,
    parse_scenario,
    quick_validate,
    scenario_digest,
    serialize_scenario,
    solvable,
    validate_scenario,
)
from evac.scenario import SchemaError, ScenarioSyntaxError

MINIMAL_DOC = {
    "id": "mini",
    "grid_unit": 1,
    "nodes": [{"id": "N0", "pos": [0, 0]}, {"id": "N1", "pos": [3, 0]}],
    "edges": [{"id": "E1", "a": "N0", "b": "N1", "length": 3}],
    "start": {"node": "N0", "heading": "E"},
    "exit": "N1",
    "shelters": [],
    "fire_timeline": [],
    "traffic_events": [],
    "messages": [],
    "cues": [],
    "radio_available": True,
    "tuning": {},
    "seed": 1,
}


def _doc(**overrides):
    doc = json.loads(json.dumps(MINIMAL_DOC))
    doc.update(overrides)
    return json.dumps(doc)


def test_parse_minimal_document():
    spec = parse_scenario(_doc())
    assert len(spec.nodes) == 2
    assert len(spec.edges) == 1
    assert spec.start.node == "N0"
    assert spec.tuning.cruise_speed == 1  # defaults fill in
    assert spec.tuning.brake_grace == 3
    assert spec.tuning.noncompliance_penalty == 10


def test_parse_rejects_zero_length_edge():
    doc = _doc(edges=[{"id": "E1", "a": "N0", "b": "N1", "length": 0}])
    with pytest.raises(SchemaError) as err:
        parse_scenario(doc)
    assert err.value.path == "edges[0].length"


def test_parse_rejects_unknown_and_missing_keys():
    with pytest.raises(SchemaError):
        parse_scenario(_doc(bogus=1))
    doc = json.loads(_doc())
    del doc["exit"]
    with pytest.raises(SchemaError) as err:
        parse_scenario(json.dumps(doc))
    assert err.value.path == "exit"


def test_parse_rejects_bad_types():
    with pytest.raises(SchemaError):
        parse_scenario(_doc(seed=-1))
    with pytest.raises(SchemaError):
        parse_scenario(_doc(radio_available="yes"))
    with pytest.raises(SchemaError):
        parse_scenario(_doc(nodes=[{"id": "", "pos": [0, 0]}]))


def test_syntax_error_carries_position():
    with pytest.raises(ScenarioSyntaxError) as err:
        parse_scenario('{"id": }')
    assert err.value.line == 1
    assert err.value.column > 1


def test_grid3x3_fixture_has_twelve_edges():
    # A 3x3 lattice has 2*3 horizontal + 3*2 vertical segments.
    spec = load_fixture("grid3x3")
    assert len(spec.edges) == 12
    assert len(spec.nodes) == 9


def test_parse_sorts_lists_canonically():
    doc = json.loads(_doc())
    doc["nodes"] = list(reversed(doc["nodes"]))
    doc["fire_timeline"] = [{"tick": 9, "edge": "E1"}, {"tick": 2, "edge": "E1"}]
    spec = parse_scenario(json.dumps(doc))
    assert [n.id for n in spec.nodes] == ["N0", "N1"]
    assert [f.tick for f in spec.fire_timeline] == [2, 9]
    serialized = json.loads(serialize_scenario(spec))
    assert [f["tick"] for f in serialized["fire_timeline"]] == [2, 9]


@pytest.mark.parametrize("name", all_fixture_names())
def test_roundtrip_identity(name):
    text = fixture_path(name).read_text(encoding="utf-8")
    spec = parse_scenario(text)
    assert parse_scenario(serialize_scenario(spec)) == spec


@pytest.mark.parametrize("name", all_fixture_names())
def test_serialization_fixed_point(name):
    text = fixture_path(name).read_text(encoding="utf-8")
    once = serialize_scenario(parse_scenario(text))
    twice = serialize_scenario(parse_scenario(once))
    assert once == twice
    # Committed fixtures are already canonical.
    assert once == text


def test_validate_minimal_is_clean():
    report = validate_scenario(parse_scenario(_doc()))
    assert report.errors == []
    assert report.warnings == []


def test_validate_missing_exit():
    spec = replace(load_fixture("minimal"), exit="zzz")
    report = validate_scenario(spec)
    assert any(f.code == "EXIT_MISSING" for f in report.errors)


def test_validate_tick0_start_fire_is_error_and_unsolvable():
    report = validate_scenario(load_fixture("firestart_invalid"))
    assert any(f.code == "FIRE_ON_START" for f in report.errors)
    assert any(f.code == "UNSOLVABLE" for f in report.warnings)


def test_validate_unsolvable_warning_without_error():
    report = validate_scenario(load_fixture("unsolvable_mini"))
    assert report.errors == []
    assert any(f.code == "UNSOLVABLE" for f in report.warnings)


def test_validate_duplicate_nodes_and_edges():
    spec = load_fixture("minimal")
    doubled = replace(spec, nodes=spec.nodes + (spec.nodes[0],))
    assert any(f.code == "NODE_DUP_ID" for f in validate_scenario(doubled).errors)
    doubled = replace(spec, edges=spec.edges + (spec.edges[0],))
    codes = {f.code for f in validate_scenario(doubled).errors}
    assert "EDGE_DUP_ID" in codes and "EDGE_DUP_PAIR" in codes


def test_validate_radio_messages_without_radio():
    spec = load_fixture("grid2x2")
    spec = replace(spec, radio_available=False)
    report = validate_scenario(spec)
    assert any(f.code == "RADIO_UNDELIVERABLE" for f in report.warnings)


@pytest.mark.parametrize("name", all_fixture_names())
def test_unsolvable_flag_matches_oracle(name):
    # The validator's UNSOLVABLE warning and the harness oracle must agree on
    # every fixture.
    spec = load_fixture(name)
    report = validate_scenario(spec)
    flagged = any(f.code == "UNSOLVABLE" for f in report.warnings)
    assert flagged == (not solvable(spec))


def test_init_state_minimal():
    spec = load_fixture("minimal")
    state = init_state(spec)
    assert state.tick == 0
    assert state.vehicle.offset == 0
    assert state.vehicle.edge == "e01"
    assert state.vehicle.speed == spec.tuning.cruise_speed
    assert state.outcome.status == "in_progress"
    assert not state.radio_on
    assert state.knowledge.message_log == ()


def test_init_state_applies_tick0_fire():
    state = init_state(load_fixture("unsolvable_mini"))
    assert state.fire.burning == frozenset({"ub"})


def test_init_state_rejects_unaligned_heading():
    spec = load_fixture("minimal")
    bad = replace(spec, start=replace(spec.start, heading="N"))
    with pytest.raises(InvalidScenario):
        init_state(bad)
    assert any(f.code == "START_NO_EDGE" for f in quick_validate(bad).errors)


def test_init_state_rejects_validation_errors():
    with pytest.raises(InvalidScenario):
        init_state(load_fixture("firestart_invalid"))


def test_scenario_digest_is_stable_hex():
    spec = load_fixture("minimal")
    digest = scenario_digest(spec)
    assert len(digest) == 64
    assert digest == scenario_digest(parse_scenario(serialize_scenario(spec)))


def test_valid_scenarios_never_start_on_fire():
    for name in all_fixture_names():
        spec = load_fixture(name)
        if quick_validate(spec).errors:
            continue
        state = init_state(spec)
        assert state.vehicle.edge not in state.fire.burning
