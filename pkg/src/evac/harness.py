"""Headless execution: bot policies, trace running, and corpus statistics.

Two bots automate the two human roles for testing. The omniscient bot plays
the solvability oracle's witness, so it wins everything winnable; the naive
bot drives by the map alone and ignores every alert, which is exactly the
player the game is designed to punish. The gap between them is the game's
thesis in test form.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence

from .infochannel import MapView, gps_snapshot
from .oracle import BoundExceeded, solve_scenario, tick_bound
from .rules import (
    EMPTY_FRAME,
    GameState,
    InputFrame,
    Outcome,
    init_state,
    state_digest,
    step,
)
from .scenario import ScenarioSpec, load_scenario, scenario_digest, validate_scenario
from .vehicle import DriverInput
from .world import RoadGraph, TURN_STRAIGHT, build_graph, relative_options

OBSERVATION_OMNISCIENT = "omniscient"
OBSERVATION_NAVIGATOR = "navigator"

POLICY_NAMES = ("omniscient", "naive")


@dataclass
class RunResult:
    outcome: Outcome
    final_tick: int
    frames: tuple[InputFrame, ...]
    digests: tuple[str, ...]
    timeout: bool


class Policy:
    """Deterministic decision rule for one scenario."""

    name = "policy"
    observation = OBSERVATION_NAVIGATOR

    def decide(self, state: GameState, view: MapView, tick: int) -> InputFrame:
        raise NotImplementedError


class OmniscientPolicy(Policy):
    """Plays the witness found by the solvability oracle.

    Solves the scenario once up front; if it is unsolvable the policy just
    coasts (no winning line exists for anyone).
    """

    name = "omniscient"
    observation = OBSERVATION_OMNISCIENT

    def __init__(self, spec: ScenarioSpec) -> None:
        try:
            result = solve_scenario(spec)
        except BoundExceeded:
            result = None
        self._witness: Sequence[InputFrame] = result.witness if result and result.witness else ()

    def decide(self, state: GameState, view: MapView, tick: int) -> InputFrame:
        if tick < len(self._witness):
            return self._witness[tick]
        return EMPTY_FRAME


class NaivePolicy(Policy):
    """Drives by the printed map and nothing else.

    Goes straight whenever straight exists; when the road forces a choice it
    turns toward the exit by static distance. Never brakes, never touches the
    radio, never reads an alert — so scripted closures, fires and shelter
    warnings sail right past it.
    """

    name = "naive"
    observation = OBSERVATION_NAVIGATOR

    def __init__(self, spec: ScenarioSpec, graph: Optional[RoadGraph] = None) -> None:
        self._graph = graph if graph is not None else build_graph(spec)
        self._cruise = spec.tuning.cruise_speed
        self._dist = _distance_map(self._graph, spec.exit)

    def decide(self, state: GameState, view: MapView, tick: int) -> InputFrame:
        lengths = {e[0]: e[3] for e in view.edges}
        length = lengths[view.vehicle_edge]
        if view.vehicle_offset + self._cruise < length:
            return EMPTY_FRAME
        node = self._graph.other_end(view.vehicle_edge, view.vehicle_from_node)
        heading = self._graph.edge_direction(view.vehicle_edge, view.vehicle_from_node)
        options = relative_options(self._graph, node, heading)
        if not options or TURN_STRAIGHT in options:
            return EMPTY_FRAME  # the engine defaults to straight; dead ends are its problem
        best = min(
            options.items(),
            key=lambda kv: (
                self._graph.edges[kv[1][0]].length + self._dist.get(self._graph.other_end(kv[1][0], node), 1 << 30),
                kv[0],
            ),
        )
        return InputFrame(driver=DriverInput(turn_request=best[0]))


def _distance_map(graph: RoadGraph, src: str) -> dict[str, int]:
    dist = {src: 0}
    heap = [(0, src)]
    while heap:
        d, node = heapq.heappop(heap)
        if d > dist.get(node, 1 << 30):
            continue
        for adj in graph.adjacency[node]:
            nd = d + graph.edges[adj.edge].length
            if nd < dist.get(adj.neighbor, 1 << 30):
                dist[adj.neighbor] = nd
                heapq.heappush(heap, (nd, adj.neighbor))
    return dist


def make_policy(name: str, spec: ScenarioSpec, graph: Optional[RoadGraph] = None) -> Policy:
    if name == "omniscient":
        return OmniscientPolicy(spec)
    if name == "naive":
        return NaivePolicy(spec, graph)
    raise ValueError(f"unknown policy {name!r}")


def run_policy(spec: ScenarioSpec, policy: Policy, max_ticks: Optional[int] = None) -> RunResult:
    """Step from the initial state under a policy until terminal or the cap."""
    cap = max_ticks if max_ticks is not None else tick_bound(spec)
    if cap <= 0:
        raise ValueError("max_ticks must be positive")
    graph = build_graph(spec)
    state = init_state(spec, graph)
    frames: list[InputFrame] = []
    digests: list[str] = []
    while not state.outcome.terminal and state.tick < cap:
        view = gps_snapshot(state, graph)
        frame = policy.decide(state, view, state.tick)
        state = step(state, frame, graph, spec)
        frames.append(frame)
        digests.append(state_digest(state))
    return RunResult(
        outcome=state.outcome,
        final_tick=state.tick,
        frames=tuple(frames),
        digests=tuple(digests),
        timeout=not state.outcome.terminal,
    )


def run_trace(spec: ScenarioSpec, frames: Sequence[InputFrame]) -> RunResult:
    """Run a fixed input trace; stops early if the game ends before the trace does."""
    graph = build_graph(spec)
    state = init_state(spec, graph)
    used: list[InputFrame] = []
    digests: list[str] = []
    for frame in frames:
        if state.outcome.terminal:
            break
        state = step(state, frame, graph, spec)
        used.append(frame)
        digests.append(state_digest(state))
    return RunResult(
        outcome=state.outcome,
        final_tick=state.tick,
        frames=tuple(used),
        digests=tuple(digests),
        timeout=not state.outcome.terminal,
    )


def to_replay(result: RunResult, spec: ScenarioSpec) -> "ReplayFile":
    from .replay import ReplayFile

    return ReplayFile(
        scenario_id=spec.id,
        scenario_digest=scenario_digest(spec),
        frames=result.frames,
        outcome=result.outcome,
        final_digest=result.digests[-1] if result.digests else "0" * 64,
    )


# ---------------------------------------------------------------------------
# Corpus statistics


def _solvable_verdict(report) -> object:
    codes_w = {f.code for f in report.warnings}
    codes_e = {f.code for f in report.errors}
    if "UNSOLVABLE" in codes_w:
        return False
    if "SOLVABILITY_UNKNOWN" in codes_w:
        return "unknown"
    if "UNREACHABLE" in codes_e:
        return False
    if codes_e & {"START_NO_EDGE", "EXIT_MISSING", "START_UNKNOWN", "EDGE_UNKNOWN_NODE"}:
        return "unknown"
    return True


def corpus_stats(directory: str) -> dict:
    """Run every scenario in a directory and aggregate a reproducible report.

    The report contains no timings or timestamps; two runs over the same
    corpus must serialize to identical bytes.
    """
    rows = []
    totals: dict[str, dict[str, int]] = {name: {} for name in POLICY_NAMES}
    for path in sorted(Path(directory).glob("*.json")):
        spec = load_scenario(str(path))
        report = validate_scenario(spec)
        row = {
            "id": spec.id,
            "file": path.name,
            "nodes": len(spec.nodes),
            "edges": len(spec.edges),
            "errors": sorted({f.code for f in report.errors}),
            "warnings": sorted({f.code for f in report.warnings}),
            "solvable": _solvable_verdict(report),
            "policies": None,
        }
        if report.ok:
            policies = {}
            for name in POLICY_NAMES:
                result = run_policy(spec, make_policy(name, spec))
                encoded = "timeout" if result.timeout else result.outcome.encode()
                policies[name] = {"outcome": encoded, "ticks": result.final_tick}
                totals[name][encoded] = totals[name].get(encoded, 0) + 1
            row["policies"] = policies
        rows.append(row)
    rows.sort(key=lambda r: r["id"])
    return {
        "scenario_count": len(rows),
        "scenarios": rows,
        "outcome_totals": totals,
    }
