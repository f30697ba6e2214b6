"""The deterministic tick step: composes information, fire, compliance and
motion in a fixed order, then evaluates the win/lose conditions.

Sub-step order within one tick is part of the contract and is golden-tested:
   1. apply the navigator's radio toggle
   2. deliver due messages and fold them into knowledge
   3. advance the fire timeline
   4. check traffic-event compliance, apply any new forced stop
   5. advance the vehicle with the driver's input
   6. update active driver cues
   7. evaluate the outcome
   8. tick += 1
Information lands before motion so an alert scripted for tick t can shape the
turn taken at tick t.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, replace
from typing import Optional

from .hazard import (
    COMPLIANCE_VIOLATED,
    FireState,
    advance_fire,
    check_compliance,
    event_active,
)
from .infochannel import Knowledge, due_messages, fold_knowledge
from .scenario import InvalidScenario, ScenarioSpec, quick_validate
from .vehicle import (
    DriverInput,
    EVENT_REACHED_DEAD_END,
    EVENT_REACHED_EXIT,
    VehicleEvent,
    VehicleState,
    advance_vehicle,
    node_at,
)
from .world import RoadGraph, build_graph

OUTCOME_IN_PROGRESS = "in_progress"
OUTCOME_WIN = "win"
OUTCOME_LOSE = "lose"

REASON_DEAD_END = "dead_end"
REASON_SHELTER_IGNORED = "shelter_ignored"
REASON_FIRE_CONTACT = "fire_contact"

_MASK64 = (1 << 64) - 1
_SPLITMIX_GAMMA = 0x9E3779B97F4A7C15


def splitmix64(state: int) -> tuple[int, int]:
    """Advance a splitmix64 stream; returns (new state, output word)."""
    state = (state + _SPLITMIX_GAMMA) & _MASK64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return state, z ^ (z >> 31)


@dataclass(frozen=True)
class Outcome:
    status: str
    reason: Optional[str] = None

    @property
    def terminal(self) -> bool:
        return self.status != OUTCOME_IN_PROGRESS

    def encode(self) -> str:
        if self.status == OUTCOME_LOSE:
            return f"lose:{self.reason}"
        return self.status

    @staticmethod
    def decode(text: str) -> "Outcome":
        if text == OUTCOME_IN_PROGRESS:
            return IN_PROGRESS
        if text == OUTCOME_WIN:
            return WIN
        if text.startswith("lose:"):
            reason = text.split(":", 1)[1]
            if reason in (REASON_DEAD_END, REASON_SHELTER_IGNORED, REASON_FIRE_CONTACT):
                return Outcome(OUTCOME_LOSE, reason)
        raise ValueError(f"unknown outcome {text!r}")


IN_PROGRESS = Outcome(OUTCOME_IN_PROGRESS)
WIN = Outcome(OUTCOME_WIN)


def lose(reason: str) -> Outcome:
    return Outcome(OUTCOME_LOSE, reason)


@dataclass(frozen=True)
class NavigatorInput:
    radio_toggle: Optional[bool] = None  # present = set radio to this value


@dataclass(frozen=True)
class InputFrame:
    driver: DriverInput = DriverInput()
    navigator: NavigatorInput = NavigatorInput()


EMPTY_FRAME = InputFrame()


@dataclass(frozen=True)
class GameState:
    tick: int
    vehicle: VehicleState
    fire: FireState
    knowledge: Knowledge
    radio_on: bool
    # event id -> "complying" | "violated"; an event appears once engaged and
    # a violated entry never flips back, which is what makes the penalty
    # one-shot.
    event_compliance: tuple[tuple[str, str], ...]
    active_cues: frozenset[str]
    outcome: Outcome
    last_event: Optional[VehicleEvent]
    seed_stream: int


def init_state(spec: ScenarioSpec, graph: Optional[RoadGraph] = None) -> GameState:
    """Initial state: tick 0, car already rolling onto its heading-aligned edge."""
    report = quick_validate(spec)
    if report.errors:
        raise InvalidScenario(report.errors)
    if graph is None:
        graph = build_graph(spec)
    start_edge = None
    for adj in graph.adjacency[spec.start.node]:
        if adj.direction == spec.start.heading:
            start_edge = adj.edge
            break
    assert start_edge is not None  # guaranteed by validation
    vehicle = VehicleState(
        edge=start_edge,
        from_node=spec.start.node,
        offset=0,
        heading=spec.start.heading,
        speed=spec.tuning.cruise_speed,
    )
    fire = advance_fire(FireState(), spec.fire_timeline, 0)
    state = GameState(
        tick=0,
        vehicle=vehicle,
        fire=fire,
        knowledge=Knowledge(),
        radio_on=False,
        event_compliance=(),
        active_cues=frozenset(),
        outcome=IN_PROGRESS,
        last_event=None,
        seed_stream=spec.seed,
    )
    return replace(state, active_cues=_cues_at(spec, vehicle.edge, 0))


def _cues_at(spec: ScenarioSpec, edge: str, tick: int) -> frozenset[str]:
    return frozenset(c.id for c in spec.cues if c.edge == edge and c.start <= tick < c.end)


def evaluate_outcome(state: GameState, graph: RoadGraph) -> Outcome:
    """Win/lose check for the tick that just ran its motion phase.

    Precedence when several conditions land on one tick:
    Win > DeadEnd > ShelterIgnored > FireContact.
    """
    event = state.last_event
    if event is not None and event.tick == state.tick:
        if event.kind == EVENT_REACHED_EXIT:
            return WIN
        if event.kind == EVENT_REACHED_DEAD_END:
            return lose(REASON_DEAD_END)
    deadline = state.knowledge.active_shelter_warning
    if deadline is not None and deadline == state.tick:
        stationary = state.vehicle.speed == 0
        at = node_at(state.vehicle, graph)
        if not (stationary and at is not None and at in graph.shelters):
            return lose(REASON_SHELTER_IGNORED)
    if state.vehicle.edge in state.fire.burning:
        return lose(REASON_FIRE_CONTACT)
    return IN_PROGRESS


def step(state: GameState, input: InputFrame, graph: RoadGraph, spec: ScenarioSpec) -> GameState:
    """One simulation tick. Pure: same (state, input) gives a bit-identical
    successor. Terminal states absorb: stepping them returns them unchanged."""
    if state.outcome.terminal:
        return state

    tick = state.tick

    # 1. Radio toggle (only meaningful where the region has radio).
    radio_on = state.radio_on
    if input.navigator.radio_toggle is not None:
        radio_on = input.navigator.radio_toggle and spec.radio_available

    # 2. Deliver due messages, fold into knowledge.
    delivered = due_messages(spec.messages, tick, radio_on)
    knowledge = fold_knowledge(state.knowledge, delivered)

    # 3. Fire timeline.
    fire = advance_fire(state.fire, spec.fire_timeline, tick)

    # 4. Traffic-event compliance against this frame's brake state.
    vehicle = replace(state.vehicle, brake_held=input.driver.brake_held)
    compliance = dict(state.event_compliance)
    for event in spec.traffic_events:
        if not event_active(event, vehicle.edge, tick):
            continue
        if compliance.get(event.id) == COMPLIANCE_VIOLATED:
            continue
        result = check_compliance(event, vehicle, tick, spec.tuning)
        compliance[event.id] = result.status
        if result.status == COMPLIANCE_VIOLATED:
            until = result.penalty_until
            if vehicle.forced_stop_until is not None:
                until = max(until, vehicle.forced_stop_until)
            vehicle = replace(vehicle, forced_stop_until=until)

    # 5. Motion.
    vehicle, event = advance_vehicle(vehicle, input.driver, graph, tick, spec.tuning)

    # 6. Driver cues for wherever the car now is.
    cues = _cues_at(spec, vehicle.edge, tick)

    # 7. Outcome.
    candidate = GameState(
        tick=tick,
        vehicle=vehicle,
        fire=fire,
        knowledge=knowledge,
        radio_on=radio_on,
        event_compliance=tuple(sorted(compliance.items())),
        active_cues=cues,
        outcome=state.outcome,
        last_event=event if event is not None else None,
        seed_stream=state.seed_stream,
    )
    outcome = evaluate_outcome(candidate, graph)

    # 8. Advance the clock and the (cosmetic, never consulted) seed stream.
    seed_stream, _ = splitmix64(state.seed_stream)
    return replace(candidate, tick=tick + 1, outcome=outcome, seed_stream=seed_stream)


# ---------------------------------------------------------------------------
# Digests


def _state_dict(state: GameState) -> dict:
    v = state.vehicle
    return {
        "tick": state.tick,
        "vehicle": {
            "edge": v.edge,
            "from": v.from_node,
            "offset": v.offset,
            "heading": v.heading,
            "speed": v.speed,
            "brake": v.brake_held,
            "queued": v.queued_turn,
            "forced_until": v.forced_stop_until,
        },
        "fire": {"burning": sorted(state.fire.burning), "cursor": state.fire.cursor},
        "knowledge": {
            "closed": sorted(state.knowledge.known_closed),
            "shelter": state.knowledge.active_shelter_warning,
            "log": [
                [m.id, m.channel, m.deliver_tick, m.sequence, m.payload.kind,
                 m.payload.edge, m.payload.deadline, m.payload.text]
                for m in state.knowledge.message_log
            ],
        },
        "radio": state.radio_on,
        "compliance": list(map(list, state.event_compliance)),
        "cues": sorted(state.active_cues),
        "outcome": state.outcome.encode(),
        "last_event": (
            None
            if state.last_event is None
            else [state.last_event.kind, state.last_event.node, state.last_event.edge, state.last_event.tick]
        ),
        "seed": state.seed_stream,
    }


def state_digest(state: GameState) -> str:
    """64-hex SHA-256 over a canonical encoding of every state field."""
    blob = json.dumps(_state_dict(state), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode("utf-8")).hexdigest()
