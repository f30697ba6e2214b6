"""Ground-truth danger: scripted fire spread and traffic events with brake compliance.

Fire is a timeline, not a physics model; ignition events add edges to the
burning set and nothing ever removes them. Traffic events (brake lights ahead,
emergency vehicle behind) demand the driver hold the brake; failing to do so
costs time via a forced stop, never the game.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Optional, Sequence

if TYPE_CHECKING:
    from .scenario import TuningConstants
    from .vehicle import VehicleState

EVENT_BRAKE_LIGHTS_AHEAD = "brake_lights_ahead"
EVENT_EMERGENCY_BEHIND = "emergency_behind"
EVENT_KINDS = (EVENT_BRAKE_LIGHTS_AHEAD, EVENT_EMERGENCY_BEHIND)

COMPLIANCE_NOT_APPLICABLE = "not_applicable"
COMPLIANCE_COMPLYING = "complying"
COMPLIANCE_VIOLATED = "violated"


@dataclass(frozen=True)
class Ignition:
    tick: int
    edge: str


@dataclass(frozen=True)
class TrafficEvent:
    id: str
    kind: str
    start: int
    end: int  # half-open window [start, end)
    edge: str  # active only while the vehicle is on this edge


@dataclass(frozen=True)
class FireState:
    burning: frozenset[str] = frozenset()
    cursor: int = 0


@dataclass(frozen=True)
class ComplianceResult:
    status: str
    penalty_until: Optional[int] = None


def advance_fire(fire: FireState, timeline: Sequence[Ignition], tick: int) -> FireState:
    """Consume every ignition event scheduled up to and including `tick`."""
    cursor = fire.cursor
    if cursor >= len(timeline) or timeline[cursor].tick > tick:
        return fire
    burning = set(fire.burning)
    while cursor < len(timeline) and timeline[cursor].tick <= tick:
        burning.add(timeline[cursor].edge)
        cursor += 1
    return FireState(burning=frozenset(burning), cursor=cursor)


def event_active(event: TrafficEvent, vehicle_edge: str, tick: int) -> bool:
    return event.start <= tick < event.end and vehicle_edge == event.edge


def check_compliance(
    event: Optional[TrafficEvent],
    v: "VehicleState",
    tick: int,
    tuning: "TuningConstants",
) -> ComplianceResult:
    """One tick's verdict for one active traffic event.

    The driver has `brake_grace` ticks from the window start to get on the
    brake. Holding the brake complies; once the grace runs out, any tick with
    the brake up is a violation and earns a forced stop of
    `noncompliance_penalty` ticks — a fender-bender delay, not a loss.
    """
    if event is None:
        return ComplianceResult(status=COMPLIANCE_NOT_APPLICABLE)
    if v.brake_held:
        return ComplianceResult(status=COMPLIANCE_COMPLYING)
    if tick >= event.start + tuning.brake_grace:
        return ComplianceResult(
            status=COMPLIANCE_VIOLATED,
            penalty_until=tick + tuning.noncompliance_penalty,
        )
    # Still inside the grace window; not braking yet is fine.
    return ComplianceResult(status=COMPLIANCE_COMPLYING)
