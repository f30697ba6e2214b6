"""Scenario documents: the on-disk JSON format, parsing, canonical serialization,
and semantic validation.

A scenario is the complete authored description of one playthrough: the road
graph, where the trip starts and must end, when each road catches fire, what
the players are told and when, and the tuning constants. `parse_scenario`
checks structure only (types, ranges, required keys); `validate_scenario`
checks meaning (references resolve, the exit is reachable, the script is
winnable for an informed crew).

Serialization is canonical — sorted keys, sorted lists, fixed layout — so a
scenario has exactly one byte representation and replay files can pin it by
digest.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from typing import Any, Optional

from .hazard import EVENT_KINDS, Ignition, TrafficEvent
from .infochannel import (
    CHANNELS,
    CUE_KINDS,
    CUE_SIGNALS_OUT,
    CUE_SMOKE_VISIBLE,
    CueEvent,
    InfoMessage,
    Payload,
    PAYLOAD_ALL_CLEAR,
    PAYLOAD_KINDS,
    PAYLOAD_ROAD_CLOSURE,
    PAYLOAD_ROAD_REOPENED,
    PAYLOAD_ROUTE_INFO,
    PAYLOAD_SHELTER_WARNING,
)
from .world import DIRECTIONS, direction_between

TOP_LEVEL_KEYS = {
    "id",
    "grid_unit",
    "nodes",
    "edges",
    "start",
    "exit",
    "shelters",
    "fire_timeline",
    "traffic_events",
    "messages",
    "cues",
    "radio_available",
    "tuning",
    "seed",
}

MAX_SEED = 2**64 - 1


class ScenarioSyntaxError(ValueError):
    """The document is not well-formed JSON."""

    def __init__(self, message: str, line: int, column: int) -> None:
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class SchemaError(ValueError):
    """A field is missing, mistyped, or out of range."""

    def __init__(self, path: str, message: str) -> None:
        super().__init__(f"{path}: {message}")
        self.path = path


class InvalidScenario(ValueError):
    """A semantically invalid scenario was handed to an operation that needs a valid one."""

    def __init__(self, findings: list["Finding"]) -> None:
        super().__init__("; ".join(f"{f.code} at {f.location}: {f.message}" for f in findings))
        self.findings = findings


@dataclass(frozen=True)
class Node:
    id: str
    pos: tuple[int, int]


@dataclass(frozen=True)
class Edge:
    id: str
    a: str
    b: str
    length: int  # ticks to traverse at cruise speed


@dataclass(frozen=True)
class TuningConstants:
    cruise_speed: int = 1
    brake_grace: int = 3
    noncompliance_penalty: int = 10
    shelter_all_clear: bool = True


@dataclass(frozen=True)
class Start:
    node: str
    heading: str


@dataclass(frozen=True)
class ScenarioSpec:
    id: str
    grid_unit: int
    nodes: tuple[Node, ...]
    edges: tuple[Edge, ...]
    start: Start
    exit: str
    shelters: tuple[str, ...]
    fire_timeline: tuple[Ignition, ...]
    traffic_events: tuple[TrafficEvent, ...]
    messages: tuple[InfoMessage, ...]
    cues: tuple[CueEvent, ...]
    radio_available: bool
    tuning: TuningConstants
    seed: int


@dataclass(frozen=True)
class Finding:
    code: str
    message: str
    location: str


@dataclass
class ValidationReport:
    errors: list[Finding] = field(default_factory=list)
    warnings: list[Finding] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.errors

    def error(self, code: str, message: str, location: str) -> None:
        self.errors.append(Finding(code, message, location))

    def warn(self, code: str, message: str, location: str) -> None:
        self.warnings.append(Finding(code, message, location))

    def has(self, code: str) -> bool:
        return any(f.code == code for f in self.errors + self.warnings)


# ---------------------------------------------------------------------------
# Parsing


def _require(obj: dict, key: str, path: str) -> Any:
    if key not in obj:
        raise SchemaError(f"{path}.{key}" if path else key, "missing required field")
    return obj[key]


def _check_keys(obj: dict, allowed: set[str], path: str) -> None:
    unknown = set(obj) - allowed
    if unknown:
        name = sorted(unknown)[0]
        raise SchemaError(f"{path}.{name}" if path else name, "unknown field")


def _as_object(value: Any, path: str) -> dict:
    if not isinstance(value, dict):
        raise SchemaError(path, f"expected object, got {type(value).__name__}")
    return value


def _as_list(value: Any, path: str) -> list:
    if not isinstance(value, list):
        raise SchemaError(path, f"expected array, got {type(value).__name__}")
    return value


def _as_int(value: Any, path: str, minimum: Optional[int] = None, maximum: Optional[int] = None) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise SchemaError(path, f"expected integer, got {type(value).__name__}")
    if minimum is not None and value < minimum:
        raise SchemaError(path, f"must be >= {minimum}, got {value}")
    if maximum is not None and value > maximum:
        raise SchemaError(path, f"must be <= {maximum}, got {value}")
    return value


def _as_bool(value: Any, path: str) -> bool:
    if not isinstance(value, bool):
        raise SchemaError(path, f"expected boolean, got {type(value).__name__}")
    return value


def _as_id(value: Any, path: str) -> str:
    if not isinstance(value, str):
        raise SchemaError(path, f"expected string, got {type(value).__name__}")
    if not value or not value.isascii():
        raise SchemaError(path, "ids must be non-empty ASCII strings")
    return value


def _as_choice(value: Any, path: str, choices: tuple[str, ...]) -> str:
    if not isinstance(value, str) or value not in choices:
        raise SchemaError(path, f"expected one of {list(choices)}, got {value!r}")
    return value


def _parse_node(raw: Any, path: str) -> Node:
    obj = _as_object(raw, path)
    _check_keys(obj, {"id", "pos"}, path)
    node_id = _as_id(_require(obj, "id", path), f"{path}.id")
    pos = _as_list(_require(obj, "pos", path), f"{path}.pos")
    if len(pos) != 2:
        raise SchemaError(f"{path}.pos", f"expected [x, y], got {len(pos)} items")
    x = _as_int(pos[0], f"{path}.pos[0]")
    y = _as_int(pos[1], f"{path}.pos[1]")
    return Node(id=node_id, pos=(x, y))


def _parse_edge(raw: Any, path: str) -> Edge:
    obj = _as_object(raw, path)
    _check_keys(obj, {"id", "a", "b", "length"}, path)
    return Edge(
        id=_as_id(_require(obj, "id", path), f"{path}.id"),
        a=_as_id(_require(obj, "a", path), f"{path}.a"),
        b=_as_id(_require(obj, "b", path), f"{path}.b"),
        length=_as_int(_require(obj, "length", path), f"{path}.length", minimum=1),
    )


def _parse_ignition(raw: Any, path: str) -> Ignition:
    obj = _as_object(raw, path)
    _check_keys(obj, {"tick", "edge"}, path)
    return Ignition(
        tick=_as_int(_require(obj, "tick", path), f"{path}.tick", minimum=0),
        edge=_as_id(_require(obj, "edge", path), f"{path}.edge"),
    )


def _parse_event(raw: Any, path: str) -> TrafficEvent:
    obj = _as_object(raw, path)
    _check_keys(obj, {"id", "kind", "start", "end", "edge"}, path)
    return TrafficEvent(
        id=_as_id(_require(obj, "id", path), f"{path}.id"),
        kind=_as_choice(_require(obj, "kind", path), f"{path}.kind", EVENT_KINDS),
        start=_as_int(_require(obj, "start", path), f"{path}.start", minimum=0),
        end=_as_int(_require(obj, "end", path), f"{path}.end", minimum=0),
        edge=_as_id(_require(obj, "edge", path), f"{path}.edge"),
    )


def _parse_payload(raw: Any, path: str) -> Payload:
    obj = _as_object(raw, path)
    kind = _as_choice(_require(obj, "type", path), f"{path}.type", PAYLOAD_KINDS)
    if kind in (PAYLOAD_ROAD_CLOSURE, PAYLOAD_ROAD_REOPENED):
        _check_keys(obj, {"type", "edge"}, path)
        return Payload(kind=kind, edge=_as_id(_require(obj, "edge", path), f"{path}.edge"))
    if kind == PAYLOAD_SHELTER_WARNING:
        _check_keys(obj, {"type", "deadline"}, path)
        return Payload(
            kind=kind,
            deadline=_as_int(_require(obj, "deadline", path), f"{path}.deadline", minimum=0),
        )
    if kind == PAYLOAD_ROUTE_INFO:
        _check_keys(obj, {"type", "text"}, path)
        text = _require(obj, "text", path)
        if not isinstance(text, str):
            raise SchemaError(f"{path}.text", "expected string")
        return Payload(kind=kind, text=text)
    _check_keys(obj, {"type"}, path)
    return Payload(kind=PAYLOAD_ALL_CLEAR)


def _parse_message(raw: Any, path: str) -> InfoMessage:
    obj = _as_object(raw, path)
    _check_keys(obj, {"id", "channel", "tick", "sequence", "payload"}, path)
    return InfoMessage(
        id=_as_id(_require(obj, "id", path), f"{path}.id"),
        channel=_as_choice(_require(obj, "channel", path), f"{path}.channel", CHANNELS),
        deliver_tick=_as_int(_require(obj, "tick", path), f"{path}.tick", minimum=0),
        sequence=_as_int(_require(obj, "sequence", path), f"{path}.sequence", minimum=0),
        payload=_parse_payload(_require(obj, "payload", path), f"{path}.payload"),
    )


def _parse_cue(raw: Any, path: str) -> CueEvent:
    obj = _as_object(raw, path)
    kind = _as_choice(_require(obj, "kind", path), f"{path}.kind", CUE_KINDS)
    direction = None
    node = None
    if kind == CUE_SMOKE_VISIBLE:
        _check_keys(obj, {"id", "kind", "start", "end", "edge", "direction"}, path)
        direction = _as_choice(_require(obj, "direction", path), f"{path}.direction", DIRECTIONS)
    else:
        _check_keys(obj, {"id", "kind", "start", "end", "edge", "node"}, path)
        node = _as_id(_require(obj, "node", path), f"{path}.node")
    return CueEvent(
        id=_as_id(_require(obj, "id", path), f"{path}.id"),
        kind=kind,
        start=_as_int(_require(obj, "start", path), f"{path}.start", minimum=0),
        end=_as_int(_require(obj, "end", path), f"{path}.end", minimum=0),
        edge=_as_id(_require(obj, "edge", path), f"{path}.edge"),
        direction=direction,
        node=node,
    )


def _parse_tuning(raw: Any, path: str) -> TuningConstants:
    obj = _as_object(raw, path)
    _check_keys(obj, {"cruise_speed", "brake_grace", "noncompliance_penalty", "shelter_all_clear"}, path)
    defaults = TuningConstants()
    return TuningConstants(
        cruise_speed=_as_int(obj.get("cruise_speed", defaults.cruise_speed), f"{path}.cruise_speed", minimum=1),
        brake_grace=_as_int(obj.get("brake_grace", defaults.brake_grace), f"{path}.brake_grace", minimum=1),
        noncompliance_penalty=_as_int(
            obj.get("noncompliance_penalty", defaults.noncompliance_penalty),
            f"{path}.noncompliance_penalty",
            minimum=1,
        ),
        shelter_all_clear=_as_bool(
            obj.get("shelter_all_clear", defaults.shelter_all_clear), f"{path}.shelter_all_clear"
        ),
    )


def parse_scenario(text: str) -> ScenarioSpec:
    """Parse a scenario document; structural checks only.

    Lists come out in canonical order (nodes and edges by id, timelines by
    tick) regardless of the order they were written in. Semantic problems —
    dangling references, unreachable exits — are validate_scenario's job.
    """
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ScenarioSyntaxError(exc.msg, exc.lineno, exc.colno) from None
    top = _as_object(raw, "$")
    missing = TOP_LEVEL_KEYS - set(top)
    if missing:
        raise SchemaError(sorted(missing)[0], "missing required field")
    _check_keys(top, TOP_LEVEL_KEYS, "")

    start_obj = _as_object(top["start"], "start")
    _check_keys(start_obj, {"node", "heading"}, "start")
    start = Start(
        node=_as_id(_require(start_obj, "node", "start"), "start.node"),
        heading=_as_choice(_require(start_obj, "heading", "start"), "start.heading", DIRECTIONS),
    )

    nodes = [_parse_node(x, f"nodes[{i}]") for i, x in enumerate(_as_list(top["nodes"], "nodes"))]
    edges = [_parse_edge(x, f"edges[{i}]") for i, x in enumerate(_as_list(top["edges"], "edges"))]
    shelters = [
        _as_id(x, f"shelters[{i}]") for i, x in enumerate(_as_list(top["shelters"], "shelters"))
    ]
    fire = [
        _parse_ignition(x, f"fire_timeline[{i}]")
        for i, x in enumerate(_as_list(top["fire_timeline"], "fire_timeline"))
    ]
    events = [
        _parse_event(x, f"traffic_events[{i}]")
        for i, x in enumerate(_as_list(top["traffic_events"], "traffic_events"))
    ]
    messages = [
        _parse_message(x, f"messages[{i}]")
        for i, x in enumerate(_as_list(top["messages"], "messages"))
    ]
    cues = [_parse_cue(x, f"cues[{i}]") for i, x in enumerate(_as_list(top["cues"], "cues"))]

    return ScenarioSpec(
        id=_as_id(top["id"], "id"),
        grid_unit=_as_int(top["grid_unit"], "grid_unit", minimum=1),
        nodes=tuple(sorted(nodes, key=lambda n: n.id)),
        edges=tuple(sorted(edges, key=lambda e: e.id)),
        start=start,
        exit=_as_id(top["exit"], "exit"),
        shelters=tuple(sorted(shelters)),
        fire_timeline=tuple(sorted(fire, key=lambda f: (f.tick, f.edge))),
        traffic_events=tuple(sorted(events, key=lambda e: (e.start, e.id))),
        messages=tuple(sorted(messages, key=lambda m: (m.deliver_tick, m.sequence, m.channel, m.id))),
        cues=tuple(sorted(cues, key=lambda c: (c.start, c.id))),
        radio_available=_as_bool(top["radio_available"], "radio_available"),
        tuning=_parse_tuning(top["tuning"], "tuning"),
        seed=_as_int(top["seed"], "seed", minimum=0, maximum=MAX_SEED),
    )


# ---------------------------------------------------------------------------
# Serialization


def _payload_dict(p: Payload) -> dict:
    if p.kind in (PAYLOAD_ROAD_CLOSURE, PAYLOAD_ROAD_REOPENED):
        return {"type": p.kind, "edge": p.edge}
    if p.kind == PAYLOAD_SHELTER_WARNING:
        return {"type": p.kind, "deadline": p.deadline}
    if p.kind == PAYLOAD_ROUTE_INFO:
        return {"type": p.kind, "text": p.text}
    return {"type": p.kind}


def _cue_dict(c: CueEvent) -> dict:
    out = {"id": c.id, "kind": c.kind, "start": c.start, "end": c.end, "edge": c.edge}
    if c.kind == CUE_SMOKE_VISIBLE:
        out["direction"] = c.direction
    else:
        out["node"] = c.node
    return out


def scenario_to_dict(spec: ScenarioSpec) -> dict:
    return {
        "id": spec.id,
        "grid_unit": spec.grid_unit,
        "nodes": [{"id": n.id, "pos": [n.pos[0], n.pos[1]]} for n in sorted(spec.nodes, key=lambda n: n.id)],
        "edges": [
            {"id": e.id, "a": e.a, "b": e.b, "length": e.length}
            for e in sorted(spec.edges, key=lambda e: e.id)
        ],
        "start": {"node": spec.start.node, "heading": spec.start.heading},
        "exit": spec.exit,
        "shelters": sorted(spec.shelters),
        "fire_timeline": [
            {"tick": f.tick, "edge": f.edge}
            for f in sorted(spec.fire_timeline, key=lambda f: (f.tick, f.edge))
        ],
        "traffic_events": [
            {"id": e.id, "kind": e.kind, "start": e.start, "end": e.end, "edge": e.edge}
            for e in sorted(spec.traffic_events, key=lambda e: (e.start, e.id))
        ],
        "messages": [
            {
                "id": m.id,
                "channel": m.channel,
                "tick": m.deliver_tick,
                "sequence": m.sequence,
                "payload": _payload_dict(m.payload),
            }
            for m in sorted(spec.messages, key=lambda m: (m.deliver_tick, m.sequence, m.channel, m.id))
        ],
        "cues": [_cue_dict(c) for c in sorted(spec.cues, key=lambda c: (c.start, c.id))],
        "radio_available": spec.radio_available,
        "tuning": {
            "cruise_speed": spec.tuning.cruise_speed,
            "brake_grace": spec.tuning.brake_grace,
            "noncompliance_penalty": spec.tuning.noncompliance_penalty,
            "shelter_all_clear": spec.tuning.shelter_all_clear,
        },
        "seed": spec.seed,
    }


def serialize_scenario(spec: ScenarioSpec) -> str:
    """Canonical text form: sorted keys, sorted lists, one byte representation."""
    return json.dumps(scenario_to_dict(spec), sort_keys=True, indent=2) + "\n"


def scenario_digest(spec: ScenarioSpec) -> str:
    """Content digest over the canonical serialization; pins a map to a replay."""
    return hashlib.sha256(serialize_scenario(spec).encode("utf-8")).hexdigest()


def load_scenario(path: str) -> ScenarioSpec:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_scenario(fh.read())


# ---------------------------------------------------------------------------
# Validation


def _aligned_start_edge(spec: ScenarioSpec) -> Optional[str]:
    """Edge the vehicle rolls onto at tick 0, if the start heading has one."""
    nodes = {n.id: n for n in spec.nodes}
    for e in spec.edges:
        if spec.start.node not in (e.a, e.b):
            continue
        other = e.b if e.a == spec.start.node else e.a
        if nodes[e.a].pos == nodes[e.b].pos:
            continue
        try:
            direction = direction_between(nodes[spec.start.node].pos, nodes[other].pos)
        except ValueError:
            continue
        if direction == spec.start.heading:
            return e.id
    return None


def _check_structure(spec: ScenarioSpec, report: ValidationReport) -> bool:
    """Reference integrity and geometry. Returns False when the road graph
    itself is too broken for reachability or solvability analysis."""
    nodes = {n.id: n for n in spec.nodes}
    graph_ok = True

    seen_pos: dict[tuple[int, int], str] = {}
    seen_node_ids: set[str] = set()
    for i, n in enumerate(spec.nodes):
        if n.id in seen_node_ids:
            report.error("NODE_DUP_ID", f"duplicate node id {n.id}", f"nodes[{i}]")
            graph_ok = False
        seen_node_ids.add(n.id)
        if n.pos in seen_pos:
            report.error("NODE_DUP_POS", f"nodes {seen_pos[n.pos]} and {n.id} share {list(n.pos)}", f"nodes[{i}]")
            graph_ok = False
        seen_pos[n.pos] = n.id

    seen_edge_ids: set[str] = set()
    seen_pairs: set[frozenset[str]] = set()
    directions_at: dict[str, set[str]] = {}
    for i, e in enumerate(spec.edges):
        loc = f"edges[{i}]"
        if e.id in seen_edge_ids:
            report.error("EDGE_DUP_ID", f"duplicate edge id {e.id}", loc)
            graph_ok = False
        seen_edge_ids.add(e.id)
        if e.a not in nodes or e.b not in nodes:
            report.error("EDGE_UNKNOWN_NODE", f"edge {e.id} references a missing node", loc)
            graph_ok = False
            continue
        if e.a == e.b:
            report.error("EDGE_SELF_LOOP", f"edge {e.id} connects {e.a} to itself", loc)
            graph_ok = False
            continue
        pair = frozenset((e.a, e.b))
        if pair in seen_pairs:
            report.error("EDGE_DUP_PAIR", f"second edge between {e.a} and {e.b}", loc)
            graph_ok = False
        seen_pairs.add(pair)
        try:
            d_ab = direction_between(nodes[e.a].pos, nodes[e.b].pos)
        except ValueError:
            report.error("EDGE_NOT_AXIS_ALIGNED", f"edge {e.id} is not axis-aligned", loc)
            graph_ok = False
            continue
        # Two roads leaving one intersection in the same compass direction
        # would make "turn left" ambiguous.
        for end, d in ((e.a, d_ab), (e.b, direction_between(nodes[e.b].pos, nodes[e.a].pos))):
            if d in directions_at.setdefault(end, set()):
                report.error("EDGE_DIRECTION_CLASH", f"node {end} has two {d}-bound edges", loc)
                graph_ok = False
            directions_at[end].add(d)

    if spec.start.node not in nodes:
        report.error("START_UNKNOWN", f"start node {spec.start.node} does not exist", "start.node")
        graph_ok = False
    if spec.exit not in nodes:
        report.error("EXIT_MISSING", f"exit node {spec.exit} does not exist", "exit")
        graph_ok = False
    elif spec.exit == spec.start.node:
        report.error("EXIT_EQUALS_START", "exit node equals start node", "exit")
        graph_ok = False

    for i, s in enumerate(spec.shelters):
        if s not in nodes:
            report.error("SHELTER_UNKNOWN", f"shelter {s} does not exist", f"shelters[{i}]")

    return graph_ok


def _check_scripts(spec: ScenarioSpec, report: ValidationReport, start_edge: Optional[str]) -> None:
    edge_ids = {e.id for e in spec.edges}
    node_ids = {n.id for n in spec.nodes}

    for i, f in enumerate(spec.fire_timeline):
        if f.edge not in edge_ids:
            report.error("FIRE_UNKNOWN_EDGE", f"ignition targets missing edge {f.edge}", f"fire_timeline[{i}]")
        elif f.tick == 0 and start_edge is not None and f.edge == start_edge:
            # Igniting the road under the vehicle at tick 0 loses the game
            # before any input can matter.
            report.error("FIRE_ON_START", f"start edge {f.edge} ignites at tick 0", f"fire_timeline[{i}]")

    seen_event_ids: set[str] = set()
    for i, e in enumerate(spec.traffic_events):
        loc = f"traffic_events[{i}]"
        if e.id in seen_event_ids:
            report.error("EVENT_DUP_ID", f"duplicate event id {e.id}", loc)
        seen_event_ids.add(e.id)
        if e.start >= e.end:
            report.error("EVENT_BAD_WINDOW", f"event {e.id} window [{e.start}, {e.end}) is empty", loc)
        elif e.end - e.start <= spec.tuning.brake_grace:
            report.error(
                "GRACE_EXCEEDS_EVENT",
                f"event {e.id} lasts {e.end - e.start} ticks but brake_grace is {spec.tuning.brake_grace}",
                loc,
            )
        if e.edge not in edge_ids:
            report.error("EVENT_UNKNOWN_EDGE", f"event {e.id} targets missing edge {e.edge}", loc)

    seen_msg_ids: set[str] = set()
    seen_keys: set[tuple[str, int, int]] = set()
    for i, m in enumerate(spec.messages):
        loc = f"messages[{i}]"
        if m.id in seen_msg_ids:
            report.error("MSG_DUP_ID", f"duplicate message id {m.id}", loc)
        seen_msg_ids.add(m.id)
        key = (m.channel, m.deliver_tick, m.sequence)
        if key in seen_keys:
            report.error("MSG_DUP_KEY", f"two messages share (channel, tick, sequence) {key}", loc)
        seen_keys.add(key)
        p = m.payload
        if p.kind in (PAYLOAD_ROAD_CLOSURE, PAYLOAD_ROAD_REOPENED) and p.edge not in edge_ids:
            report.error("MSG_UNKNOWN_EDGE", f"message {m.id} names missing edge {p.edge}", loc)
        if p.kind == PAYLOAD_SHELTER_WARNING and p.deadline <= m.deliver_tick:
            report.error(
                "MSG_SHELTER_DEADLINE",
                f"message {m.id} deadline {p.deadline} is not after delivery tick {m.deliver_tick}",
                loc,
            )
        if m.channel == "radio" and not spec.radio_available:
            report.warn(
                "RADIO_UNDELIVERABLE",
                f"message {m.id} is on radio but the scenario has no radio",
                loc,
            )

    seen_cue_ids: set[str] = set()
    for i, c in enumerate(spec.cues):
        loc = f"cues[{i}]"
        if c.id in seen_cue_ids:
            report.error("CUE_DUP_ID", f"duplicate cue id {c.id}", loc)
        seen_cue_ids.add(c.id)
        if c.start >= c.end:
            report.error("CUE_BAD_WINDOW", f"cue {c.id} window [{c.start}, {c.end}) is empty", loc)
        if c.edge not in edge_ids:
            report.error("CUE_UNKNOWN_EDGE", f"cue {c.id} visible from missing edge {c.edge}", loc)
        if c.kind == CUE_SIGNALS_OUT and c.node not in node_ids:
            report.error("CUE_UNKNOWN_NODE", f"cue {c.id} names missing node {c.node}", loc)


def _check_supersession(spec: ScenarioSpec, report: ValidationReport) -> None:
    """Warn about messages that are dead on arrival: a same-tick later-sequence
    message on the same key overrides them before anyone could act."""
    by_tick: dict[int, list[InfoMessage]] = {}
    for m in spec.messages:
        by_tick.setdefault(m.deliver_tick, []).append(m)
    for tick, msgs in sorted(by_tick.items()):
        msgs = sorted(msgs, key=lambda m: m.sequence)
        for i, m in enumerate(msgs):
            key = None
            if m.payload.kind in (PAYLOAD_ROAD_CLOSURE, PAYLOAD_ROAD_REOPENED):
                key = ("road", m.payload.edge)
            elif m.payload.kind in (PAYLOAD_SHELTER_WARNING, PAYLOAD_ALL_CLEAR):
                key = ("shelter",)
            if key is None:
                continue
            for later in msgs[i + 1 :]:
                later_key = None
                if later.payload.kind in (PAYLOAD_ROAD_CLOSURE, PAYLOAD_ROAD_REOPENED):
                    later_key = ("road", later.payload.edge)
                elif later.payload.kind in (PAYLOAD_SHELTER_WARNING, PAYLOAD_ALL_CLEAR):
                    later_key = ("shelter",)
                if later_key == key:
                    report.warn(
                        "MSG_SUPERSEDED",
                        f"message {m.id} is superseded by {later.id} in the same tick",
                        f"messages[{spec.messages.index(m)}]",
                    )
                    break


def _check_shelter_script(spec: ScenarioSpec, report: ValidationReport, graph_ok: bool) -> None:
    from .world import build_graph, shortest_path

    warnings = [m for m in spec.messages if m.payload.kind == PAYLOAD_SHELTER_WARNING]
    if not warnings:
        return
    graph = build_graph(spec) if graph_ok else None
    for m in warnings:
        loc = f"messages[{spec.messages.index(m)}]"
        if graph is not None and spec.shelters:
            # Lint approximation: earliest possible arrival measured from the
            # start node, ignoring fire. Authors get a warning, not an error.
            best = None
            for s in spec.shelters:
                path = shortest_path(graph, spec.start.node, s)
                if path is not None:
                    cost = sum(graph.edges[e].length for e in path)
                    best = cost if best is None else min(best, cost)
            if best is None or best > m.payload.deadline:
                report.warn(
                    "SHELTER_OUT_OF_REACH",
                    f"no shelter reachable from start within deadline {m.payload.deadline}",
                    loc,
                )
        elif not spec.shelters:
            report.warn("SHELTER_OUT_OF_REACH", "shelter warning scripted but no shelters exist", loc)
        if spec.tuning.shelter_all_clear:
            cleared = any(
                later.payload.kind == PAYLOAD_ALL_CLEAR and later.deliver_tick > m.deliver_tick
                for later in spec.messages
            )
            if not cleared:
                report.warn(
                    "SHELTER_NO_ALL_CLEAR",
                    f"shelter warning {m.id} has no subsequent all-clear",
                    loc,
                )


def quick_validate(spec: ScenarioSpec) -> ValidationReport:
    """Error checks only: everything that makes a scenario unplayable, none of
    the authoring lints, and no solvability search. Cheap enough to gate every
    init."""
    report = ValidationReport()
    graph_ok = _check_structure(spec, report)
    start_edge = _aligned_start_edge(spec) if graph_ok else None
    if graph_ok and start_edge is None:
        report.error(
            "START_NO_EDGE",
            f"no edge leaves {spec.start.node} heading {spec.start.heading}",
            "start.heading",
        )
    _check_scripts(spec, report, start_edge)
    if graph_ok:
        from .world import build_graph, shortest_path

        graph = build_graph(spec)
        if shortest_path(graph, spec.start.node, spec.exit) is None:
            report.error("UNREACHABLE", "exit is unreachable from start even ignoring fire", "exit")
    return report


def validate_scenario(spec: ScenarioSpec) -> ValidationReport:
    """Semantic validation. Errors make a scenario unplayable; warnings flag
    authoring problems (unwinnable under fire, dead script lines)."""
    report = quick_validate(spec)
    graph_ok = not any(
        f.code
        in {
            "NODE_DUP_ID",
            "NODE_DUP_POS",
            "EDGE_DUP_ID",
            "EDGE_UNKNOWN_NODE",
            "EDGE_SELF_LOOP",
            "EDGE_DUP_PAIR",
            "EDGE_NOT_AXIS_ALIGNED",
            "EDGE_DIRECTION_CLASH",
            "START_UNKNOWN",
            "EXIT_MISSING",
            "EXIT_EQUALS_START",
        }
        for f in report.errors
    )
    _check_supersession(spec, report)
    _check_shelter_script(spec, report, graph_ok)

    if graph_ok and not report.has("START_NO_EDGE") and not report.has("UNREACHABLE"):
        # Solvability under the fire timeline, via the brute-force oracle.
        from .oracle import BoundExceeded, solvable

        try:
            if not solvable(spec):
                report.warn("UNSOLVABLE", "no input sequence wins under the fire timeline", "fire_timeline")
        except BoundExceeded as exc:
            report.warn("SOLVABILITY_UNKNOWN", str(exc), "fire_timeline")

    return report
