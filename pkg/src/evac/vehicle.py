"""Vehicle kinematics: constant forward motion, brake semantics, turn queuing.

The car always rolls forward at cruise speed unless the brake is held or a
forced stop is active. Turns happen only at intersections: the navigator's
latest relayed direction is queued and consumed when the car reaches the end
of its edge. With no queued direction the car continues straight if it can,
and otherwise stops and waits for instructions rather than guessing.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import TYPE_CHECKING, Optional

from .world import RoadGraph, TURN_STRAIGHT, relative_options

if TYPE_CHECKING:
    from .scenario import TuningConstants

EVENT_ENTERED_EDGE = "entered_edge"
EVENT_REACHED_INTERSECTION = "reached_intersection"
EVENT_REACHED_DEAD_END = "reached_dead_end"
EVENT_REACHED_EXIT = "reached_exit"
EVENT_STOPPED_AT_INTERSECTION = "stopped_at_intersection"

RESOLVE_PROCEED = "proceed"
RESOLVE_WAIT = "wait"
RESOLVE_DEAD_END = "dead_end"
RESOLVE_EXIT = "exit"


@dataclass(frozen=True)
class VehicleState:
    edge: str
    from_node: str  # endpoint the vehicle entered the edge from
    offset: int  # cells travelled along the edge, 0..length
    heading: str
    speed: int
    brake_held: bool = False
    queued_turn: Optional[str] = None
    forced_stop_until: Optional[int] = None


@dataclass(frozen=True)
class DriverInput:
    brake_held: bool = False
    turn_request: Optional[str] = None


@dataclass(frozen=True)
class VehicleEvent:
    kind: str
    node: Optional[str]
    edge: Optional[str]
    tick: int


@dataclass(frozen=True)
class TurnResolution:
    kind: str
    edge: Optional[str] = None
    heading: Optional[str] = None


def resolve_turn(
    node: str,
    heading: str,
    queued: Optional[str],
    graph: RoadGraph,
) -> TurnResolution:
    """Decide what happens when the car has fully traversed its edge to `node`.

    The exit swallows the car no matter what was queued. A dead end is any
    other degree-1 node. A queued turn that exists is taken; one that does not
    exist leaves the car waiting (the navigator may have been wrong, the car
    does not improvise). No queued turn means straight on, if straight exists.
    """
    if node == graph.exit_node:
        return TurnResolution(kind=RESOLVE_EXIT)
    if graph.degree(node) <= 1:
        return TurnResolution(kind=RESOLVE_DEAD_END)
    options = relative_options(graph, node, heading)
    if queued is not None:
        if queued in options:
            edge, new_heading = options[queued]
            return TurnResolution(kind=RESOLVE_PROCEED, edge=edge, heading=new_heading)
        return TurnResolution(kind=RESOLVE_WAIT)
    if TURN_STRAIGHT in options:
        edge, new_heading = options[TURN_STRAIGHT]
        return TurnResolution(kind=RESOLVE_PROCEED, edge=edge, heading=new_heading)
    return TurnResolution(kind=RESOLVE_WAIT)


def advance_vehicle(
    v: VehicleState,
    input: DriverInput,
    graph: RoadGraph,
    tick: int,
    tuning: "TuningConstants",
) -> tuple[VehicleState, Optional[VehicleEvent]]:
    """One tick of motion. Returns the new state and at most one event."""
    queued = input.turn_request if input.turn_request is not None else v.queued_turn

    forced_until = v.forced_stop_until
    if forced_until is not None and tick >= forced_until:
        forced_until = None
    stopped = input.brake_held or forced_until is not None

    if stopped:
        return (
            replace(
                v,
                speed=0,
                brake_held=input.brake_held,
                queued_turn=queued,
                forced_stop_until=forced_until,
            ),
            None,
        )

    length = graph.edge_length(v.edge)
    offset = min(v.offset + tuning.cruise_speed, length)
    moved = offset != v.offset

    if offset < length:
        return (
            replace(
                v,
                offset=offset,
                speed=tuning.cruise_speed,
                brake_held=False,
                queued_turn=queued,
                forced_stop_until=None,
            ),
            None,
        )

    node = graph.other_end(v.edge, v.from_node)
    resolution = resolve_turn(node, v.heading, queued, graph)

    if resolution.kind == RESOLVE_EXIT:
        state = replace(
            v,
            offset=length,
            speed=tuning.cruise_speed if moved else 0,
            brake_held=False,
            queued_turn=None,
            forced_stop_until=None,
        )
        return state, VehicleEvent(EVENT_REACHED_EXIT, node=node, edge=v.edge, tick=tick)

    if resolution.kind == RESOLVE_DEAD_END:
        state = replace(
            v,
            offset=length,
            speed=tuning.cruise_speed if moved else 0,
            brake_held=False,
            queued_turn=None,
            forced_stop_until=None,
        )
        return state, VehicleEvent(EVENT_REACHED_DEAD_END, node=node, edge=v.edge, tick=tick)

    if resolution.kind == RESOLVE_PROCEED:
        state = VehicleState(
            edge=resolution.edge,
            from_node=node,
            offset=0,
            heading=resolution.heading,
            speed=tuning.cruise_speed,
            brake_held=False,
            queued_turn=None,
            forced_stop_until=None,
        )
        return state, VehicleEvent(EVENT_ENTERED_EDGE, node=node, edge=resolution.edge, tick=tick)

    # Waiting at the intersection. The queued turn (if any) is kept: the car
    # holds the driver's intent until the navigator corrects it.
    state = replace(
        v,
        offset=length,
        speed=0,
        brake_held=False,
        queued_turn=queued,
        forced_stop_until=None,
    )
    return state, VehicleEvent(EVENT_STOPPED_AT_INTERSECTION, node=node, edge=v.edge, tick=tick)


def node_at(v: VehicleState, graph: RoadGraph) -> Optional[str]:
    """The node the vehicle is standing on, if it is exactly at one."""
    if v.offset == 0:
        return v.from_node
    if v.offset == graph.edge_length(v.edge):
        return graph.other_end(v.edge, v.from_node)
    return None
