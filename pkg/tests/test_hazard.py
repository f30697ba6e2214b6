from __future__ import annotations

import random

from conftest import load_fixture
from evac import build_graph, init_state, run_trace, step
from evac.hazard import (
    COMPLIANCE_COMPLYING,
    COMPLIANCE_NOT_APPLICABLE,
    COMPLIANCE_VIOLATED,
    FireState,
    Ignition,
    TrafficEvent,
    advance_fire,
    check_compliance,
)
from evac.rules import EMPTY_FRAME, InputFrame
from evac.scenario import TuningConstants
from evac.vehicle import DriverInput, VehicleState

TUNING = TuningConstants()  # grace 3, penalty 10


def _fold(timeline, upto):
    fire = FireState()
    for tick in range(upto + 1):
        fire = advance_fire(fire, timeline, tick)
    return fire


def test_empty_timeline_never_burns():
    fire = FireState()
    for tick in range(10):
        fire = advance_fire(fire, (), tick)
        assert fire.burning == frozenset()


def test_ignition_lands_exactly_on_its_tick():
    timeline = (Ignition(5, "E3"),)
    assert "E3" not in _fold(timeline, 4).burning
    assert "E3" in _fold(timeline, 5).burning


def test_ignition_count_accumulates():
    # Three scripted edges at ticks 2, 2 and 7: all burning once tick 7 ran.
    timeline = (Ignition(2, "a"), Ignition(2, "b"), Ignition(7, "c"))
    assert len(_fold(timeline, 1).burning) == 0
    assert len(_fold(timeline, 2).burning) == 2
    assert len(_fold(timeline, 7).burning) == 3


def test_fire_monotonicity_random_timelines():
    rng = random.Random(3)
    for _ in range(20):
        ticks = sorted(rng.randrange(0, 15) for _ in range(6))
        timeline = tuple(Ignition(t, f"e{i % 4}") for i, t in enumerate(ticks))
        fire = FireState()
        prev = frozenset()
        for tick in range(16):
            fire = advance_fire(fire, timeline, tick)
            assert prev <= fire.burning
            prev = fire.burning


def _vehicle(brake):
    return VehicleState(edge="ga", from_node="g0", offset=1, heading="E", speed=0, brake_held=brake)


def test_no_event_is_not_applicable():
    result = check_compliance(None, _vehicle(False), 0, TUNING)
    assert result.status == COMPLIANCE_NOT_APPLICABLE


def test_braking_within_grace_complies():
    event = TrafficEvent(id="x", kind="brake_lights_ahead", start=10, end=20, edge="ga")
    # Brake came on at tick 11, one tick after the event began: fine.
    assert check_compliance(event, _vehicle(True), 11, TUNING).status == COMPLIANCE_COMPLYING
    # Not braking yet at tick 12 is still inside the 3-tick grace.
    assert check_compliance(event, _vehicle(False), 12, TUNING).status == COMPLIANCE_COMPLYING


def test_ignoring_the_event_costs_a_forced_stop():
    # Grace runs out 3 ticks after the window opens at 10; the verdict lands
    # at 13 and the stop lasts the 10-tick penalty, until tick 23.
    event = TrafficEvent(id="x", kind="emergency_behind", start=10, end=20, edge="ga")
    result = check_compliance(event, _vehicle(False), 13, TUNING)
    assert result.status == COMPLIANCE_VIOLATED
    assert result.penalty_until == 23


def test_violation_is_one_shot_and_bounded():
    # micro_event scripts brake lights on the only road; never braking earns
    # exactly one violation and exactly penalty-many stationary ticks.
    spec = load_fixture("micro_event")
    graph = build_graph(spec)
    state = init_state(spec, graph)
    stopped_ticks = 0
    violations = 0
    last = dict(state.event_compliance)
    while not state.outcome.terminal:
        state = step(state, EMPTY_FRAME, graph, spec)
        if state.vehicle.speed == 0:
            stopped_ticks += 1
        now = dict(state.event_compliance)
        if now.get("ev1") == COMPLIANCE_VIOLATED and last.get("ev1") != COMPLIANCE_VIOLATED:
            violations += 1
        last = now
    assert state.outcome.status == "win"  # a time cost, never a loss
    assert violations == 1
    assert stopped_ticks == spec.tuning.noncompliance_penalty


def test_complying_vehicle_is_never_penalized():
    # Brake through the whole window: no forced stop, just the braking time.
    spec = load_fixture("micro_event")
    frames = []
    for tick in range(30):
        frames.append(InputFrame(driver=DriverInput(brake_held=2 <= tick < 7)))
    result = run_trace(spec, frames)
    assert result.outcome.status == "win"
    # offsets 1,2 then five braked ticks then 6 more cells: win on tick 13.
    assert result.final_tick == 13
