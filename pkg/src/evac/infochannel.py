"""Navigator-side information: scripted alerts, supersedable knowledge, the GPS view.

Everything the navigator knows comes through here. Road closures are facts
about *messages*, not about the world: an edge is "known closed" only after a
closure announcement arrived, and a later reopen message supersedes it. The
map snapshot is built purely from that knowledge plus topology, so ground
truth the players were never told (e.g. where the fire actually is) can never
leak into the navigator pane.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterable, Optional, Sequence

if TYPE_CHECKING:
    from .rules import GameState
    from .world import RoadGraph

CHANNEL_TEXT = "text"
CHANNEL_RADIO = "radio"
CHANNELS = (CHANNEL_TEXT, CHANNEL_RADIO)

PAYLOAD_ROAD_CLOSURE = "road_closure"
PAYLOAD_ROAD_REOPENED = "road_reopened"
PAYLOAD_SHELTER_WARNING = "shelter_warning"
PAYLOAD_ALL_CLEAR = "all_clear"
PAYLOAD_ROUTE_INFO = "route_info"
PAYLOAD_KINDS = (
    PAYLOAD_ROAD_CLOSURE,
    PAYLOAD_ROAD_REOPENED,
    PAYLOAD_SHELTER_WARNING,
    PAYLOAD_ALL_CLEAR,
    PAYLOAD_ROUTE_INFO,
)

CUE_SMOKE_VISIBLE = "smoke_visible"
CUE_SIGNALS_OUT = "signals_out"
CUE_KINDS = (CUE_SMOKE_VISIBLE, CUE_SIGNALS_OUT)


@dataclass(frozen=True)
class Payload:
    kind: str
    edge: Optional[str] = None  # road_closure / road_reopened
    deadline: Optional[int] = None  # shelter_warning
    text: Optional[str] = None  # route_info


@dataclass(frozen=True)
class InfoMessage:
    id: str
    channel: str
    deliver_tick: int
    sequence: int
    payload: Payload


@dataclass(frozen=True)
class CueEvent:
    """A physically observable hint, visible to the driver from one edge."""

    id: str
    kind: str
    start: int
    end: int  # half-open window [start, end)
    edge: str
    direction: Optional[str] = None  # smoke_visible
    node: Optional[str] = None  # signals_out


@dataclass(frozen=True)
class Knowledge:
    known_closed: frozenset[str] = frozenset()
    active_shelter_warning: Optional[int] = None
    message_log: tuple[InfoMessage, ...] = ()


def due_messages(script: Sequence[InfoMessage], tick: int, radio_on: bool) -> list[InfoMessage]:
    """Messages that arrive this tick, ordered by sequence.

    Text alerts always land. Radio items land only while the radio is on; a
    radio message whose tick passes while the radio is off is gone for good,
    like any live broadcast.
    """
    due = [
        m
        for m in script
        if m.deliver_tick == tick and (m.channel == CHANNEL_TEXT or radio_on)
    ]
    due.sort(key=lambda m: m.sequence)
    return due


def fold_knowledge(k: Knowledge, delivered: Iterable[InfoMessage]) -> Knowledge:
    """Apply delivered messages in order; the latest word on any road wins."""
    closed = set(k.known_closed)
    shelter = k.active_shelter_warning
    log = list(k.message_log)
    changed = False
    for msg in delivered:
        changed = True
        log.append(msg)
        p = msg.payload
        if p.kind == PAYLOAD_ROAD_CLOSURE:
            closed.add(p.edge)
        elif p.kind == PAYLOAD_ROAD_REOPENED:
            closed.discard(p.edge)
        elif p.kind == PAYLOAD_SHELTER_WARNING:
            shelter = p.deadline
        elif p.kind == PAYLOAD_ALL_CLEAR:
            shelter = None
    if not changed:
        return k
    return Knowledge(
        known_closed=frozenset(closed),
        active_shelter_warning=shelter,
        message_log=tuple(log),
    )


@dataclass(frozen=True)
class MapView:
    """What the navigator's phone shows. Never more than was announced."""

    nodes: tuple[tuple[str, int, int], ...]
    edges: tuple[tuple[str, str, str, int], ...]
    exit_node: str
    shelters: tuple[str, ...]
    vehicle_edge: str
    vehicle_from_node: str
    vehicle_offset: int
    known_closed: frozenset[str]
    shelter_warning: Optional[int]


def gps_snapshot(state: "GameState", graph: "RoadGraph") -> MapView:
    """Build the navigator map from topology, knowledge and vehicle pose only.

    Burning edges that were never announced render as ordinary roads; the
    information asymmetry is the game.
    """
    nodes = tuple(
        (n.id, n.pos[0], n.pos[1]) for n in sorted(graph.nodes.values(), key=lambda n: n.id)
    )
    edges = tuple(
        (e.id, e.a, e.b, e.length) for e in sorted(graph.edges.values(), key=lambda e: e.id)
    )
    return MapView(
        nodes=nodes,
        edges=edges,
        exit_node=graph.exit_node,
        shelters=tuple(sorted(graph.shelters)),
        vehicle_edge=state.vehicle.edge,
        vehicle_from_node=state.vehicle.from_node,
        vehicle_offset=state.vehicle.offset,
        known_closed=state.knowledge.known_closed,
        shelter_warning=state.knowledge.active_shelter_warning,
    )
