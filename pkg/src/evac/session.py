"""Interactive session host: the command/snapshot boundary the UI drives.

The UI owns the clock. It sends command records as the players act and a
`step` record at its fixed tick rate; the host coalesces the commands queued
since the last step into exactly one input frame, advances the engine one
tick, and emits a render snapshot. Wall-clock times on commands are accepted
(and ignored) so determinism depends only on record order.

Records are newline-delimited JSON on stdin/stdout:

    in:  {"type": "command", "payload": {"kind": "brake_down"}, "wt": 123}
         {"type": "command", "payload": {"kind": "turn_request", "turn": "left"}}
         {"type": "step"}
         {"type": "export_replay", "payload": {"path": "out.replay"}}
         {"type": "restart"}
         {"type": "quit"}
    out: {"type": "hello", "v": 1, ...}           (once, on start)
         {"type": "snapshot", "v": 1, ...}        (on start and after each step)
         {"type": "replay_saved", ...} / {"type": "notice", ...} / {"type": "error", ...}
"""

from __future__ import annotations

import json
import sys
from dataclasses import dataclass
from typing import IO, Optional

from .hazard import EVENT_BRAKE_LIGHTS_AHEAD, EVENT_EMERGENCY_BEHIND, event_active
from .infochannel import CUE_SIGNALS_OUT, CUE_SMOKE_VISIBLE, gps_snapshot
from .rules import GameState, InputFrame, NavigatorInput, init_state, state_digest, step
from .scenario import ScenarioSpec
from .vehicle import DriverInput
from .world import RoadGraph, build_graph

SNAPSHOT_VERSION = 1

COMMAND_KINDS = ("brake_down", "brake_up", "turn_request", "radio_toggle")


@dataclass
class _Pending:
    """Commands queued since the last step, pre-coalesced."""

    brake_level: bool = False
    turn: Optional[str] = None
    radio_target: Optional[bool] = None


class Session:
    """One live game bound to one scenario."""

    def __init__(self, spec: ScenarioSpec) -> None:
        self.spec = spec
        self.graph: RoadGraph = build_graph(spec)
        self.state: GameState = init_state(spec, self.graph)
        self.frames: list[InputFrame] = []
        self.digests: list[str] = []
        self.pending = _Pending()

    def restart(self) -> None:
        # Fresh start: nothing carries over between attempts.
        self.state = init_state(self.spec, self.graph)
        self.frames = []
        self.digests = []
        self.pending = _Pending()

    def command(self, kind: str, turn: Optional[str] = None) -> Optional[str]:
        """Queue one player command; returns a notice string for no-ops."""
        if self.state.outcome.terminal:
            return "game over: only restart is accepted"
        if kind == "brake_down":
            self.pending.brake_level = True
        elif kind == "brake_up":
            self.pending.brake_level = False
        elif kind == "turn_request":
            self.pending.turn = turn
        elif kind == "radio_toggle":
            if not self.spec.radio_available:
                return "no radio in this region"
            current = (
                self.pending.radio_target
                if self.pending.radio_target is not None
                else self.state.radio_on
            )
            self.pending.radio_target = not current
        else:
            return f"unknown command {kind!r}"
        return None

    def tick(self) -> GameState:
        """Coalesce pending commands into one frame and advance one tick."""
        frame = InputFrame(
            driver=DriverInput(
                brake_held=self.pending.brake_level,
                turn_request=self.pending.turn,
            ),
            navigator=NavigatorInput(radio_toggle=self.pending.radio_target),
        )
        # Brake is level-triggered and survives the frame; the rest is edge-triggered.
        self.pending.turn = None
        self.pending.radio_target = None
        if not self.state.outcome.terminal:
            self.state = step(self.state, frame, self.graph, self.spec)
            self.frames.append(frame)
            self.digests.append(state_digest(self.state))
        return self.state

    def export_replay(self, path: str) -> None:
        from .harness import RunResult, to_replay
        from .replay import save_replay

        result = RunResult(
            outcome=self.state.outcome,
            final_tick=self.state.tick,
            frames=tuple(self.frames),
            digests=tuple(self.digests),
            timeout=not self.state.outcome.terminal,
        )
        save_replay(to_replay(result, self.spec), path)

    # -- snapshots ---------------------------------------------------------

    def snapshot(self) -> dict:
        """Render snapshot: driver pane sees the road, navigator pane sees the
        phone. The navigator side is built from gps_snapshot only, so nothing
        unannounced can appear there."""
        state = self.state
        spec = self.spec
        v = state.vehicle
        tick = state.tick

        brake_lights = False
        emergency = False
        for ev in spec.traffic_events:
            if event_active(ev, v.edge, tick):
                if ev.kind == EVENT_BRAKE_LIGHTS_AHEAD:
                    brake_lights = True
                elif ev.kind == EVENT_EMERGENCY_BEHIND:
                    emergency = True
        smoke = None
        signals_out = False
        for cue in spec.cues:
            if cue.edge == v.edge and cue.start <= tick < cue.end:
                if cue.kind == CUE_SMOKE_VISIBLE:
                    smoke = cue.direction
                elif cue.kind == CUE_SIGNALS_OUT:
                    signals_out = True

        view = gps_snapshot(state, self.graph)
        length = self.graph.edge_length(v.edge)
        shelter = None
        if view.shelter_warning is not None:
            shelter = {
                "deadline": view.shelter_warning,
                "remaining": max(0, view.shelter_warning - tick),
            }
        return {
            "type": "snapshot",
            "v": SNAPSHOT_VERSION,
            "tick": tick,
            "driver": {
                "heading": v.heading,
                "speed": v.speed,
                "brake_held": v.brake_held,
                "forced_stop": v.forced_stop_until is not None,
                "waiting": v.speed == 0 and v.offset == length and not v.brake_held,
                "distance_to_intersection": length - v.offset,
                "brake_lights": brake_lights,
                "emergency_behind": emergency,
                "smoke": smoke,
                "signals_out": signals_out,
            },
            "navigator": {
                "map": {
                    "nodes": [list(n) for n in view.nodes],
                    "edges": [list(e) for e in view.edges],
                    "exit": view.exit_node,
                    "shelters": list(view.shelters),
                    "vehicle": {
                        "edge": view.vehicle_edge,
                        "from": view.vehicle_from_node,
                        "offset": view.vehicle_offset,
                    },
                    "known_closed": sorted(view.known_closed),
                },
                "log": [
                    {
                        "id": m.id,
                        "channel": m.channel,
                        "tick": m.deliver_tick,
                        "kind": m.payload.kind,
                        "edge": m.payload.edge,
                        "deadline": m.payload.deadline,
                        "text": m.payload.text,
                    }
                    for m in state.knowledge.message_log
                ],
                "radio_on": state.radio_on,
                "radio_available": spec.radio_available,
                "shelter": shelter,
            },
            "outcome": {"status": state.outcome.status, "reason": state.outcome.reason},
            "digest": state_digest(state),
        }


def run_session(spec: ScenarioSpec, stdin: Optional[IO[str]] = None, stdout: Optional[IO[str]] = None) -> int:
    """Serve one session over NDJSON until quit or EOF."""
    stdin = stdin if stdin is not None else sys.stdin
    stdout = stdout if stdout is not None else sys.stdout
    session = Session(spec)

    def emit(obj: dict) -> None:
        stdout.write(json.dumps(obj, sort_keys=True) + "\n")
        stdout.flush()

    emit(
        {
            "type": "hello",
            "v": SNAPSHOT_VERSION,
            "scenario": spec.id,
            "radio_available": spec.radio_available,
            "tick_rate_hint": 10,
        }
    )
    emit(session.snapshot())

    for line in stdin:
        line = line.strip()
        if not line:
            continue
        try:
            record = json.loads(line)
        except json.JSONDecodeError as exc:
            emit({"type": "error", "message": f"bad record: {exc.msg}"})
            continue
        kind = record.get("type")
        if kind == "quit":
            return 0
        if kind == "step":
            session.tick()
            emit(session.snapshot())
        elif kind == "command":
            payload = record.get("payload") or {}
            notice = session.command(payload.get("kind", ""), payload.get("turn"))
            if notice is not None:
                emit({"type": "notice", "message": notice})
        elif kind == "restart":
            session.restart()
            emit(session.snapshot())
        elif kind == "export_replay":
            payload = record.get("payload") or {}
            path = payload.get("path")
            if not path:
                emit({"type": "error", "message": "export_replay needs payload.path"})
                continue
            session.export_replay(path)
            emit({"type": "replay_saved", "path": path})
        else:
            emit({"type": "error", "message": f"unknown record type {kind!r}"})
    return 0
