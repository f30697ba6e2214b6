"""Brute-force solvability: does any input sequence win this scenario?

The search walks the time-expanded state space — (edge, entry node, offset)
crossed with tick, pending shelter deadline, forced-stop countdown and the
set of already-violated traffic events — with waiting allowed at
intersections and braking allowed anywhere. It deliberately re-models the
movement and hazard rules instead of calling the engine, so that replaying a
found witness through the real engine is a meaningful cross-check rather
than a tautology.

Radio choices are folded in per delivery tick: since toggling is free and
instantaneous, "what was the radio doing at tick t" is an independent binary
choice at exactly the ticks radio messages are scripted for.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from typing import Optional

from .infochannel import (
    CHANNEL_RADIO,
    PAYLOAD_ALL_CLEAR,
    PAYLOAD_SHELTER_WARNING,
)
from .rules import EMPTY_FRAME, InputFrame, NavigatorInput
from .scenario import ScenarioSpec
from .vehicle import DriverInput
from .world import TURNS, build_graph, relative_options


class BoundExceeded(RuntimeError):
    """The search hit its tick bound with states still unexplored."""


@dataclass
class SolveResult:
    solvable: bool
    witness: Optional[list[InputFrame]]  # input frames reaching Win, if any
    ticks_searched: int


def tick_bound(spec: ScenarioSpec) -> int:
    """Generous horizon: four times the total road length of the map."""
    return 4 * sum(e.length for e in spec.edges)


class _Model:
    """Precomputed transition tables for one scenario."""

    def __init__(self, spec: ScenarioSpec) -> None:
        self.spec = spec
        graph = build_graph(spec)
        self.graph = graph
        self.exit = spec.exit
        self.shelters = frozenset(spec.shelters)
        self.cruise = spec.tuning.cruise_speed
        self.grace = spec.tuning.brake_grace
        self.penalty = spec.tuning.noncompliance_penalty

        self.length = {e.id: e.length for e in spec.edges}
        self.far_end: dict[tuple[str, str], str] = {}
        for e in spec.edges:
            self.far_end[(e.id, e.a)] = e.b
            self.far_end[(e.id, e.b)] = e.a

        # Arrival table: (node, heading) -> (proceed options, wait request or None).
        self.arrivals: dict[tuple[str, str], tuple[tuple[tuple[str, str, str], ...], Optional[str]]] = {}
        for node in graph.nodes:
            for heading in "NESW":
                options = relative_options(graph, node, heading)
                proceed = tuple(
                    (turn, edge, new_heading)
                    for turn, (edge, new_heading) in sorted(options.items())
                )
                missing = [t for t in TURNS if t not in options]
                wait = missing[0] if missing and options else None
                self.arrivals[(node, heading)] = (proceed, wait)

        # Fire as cumulative breakpoints, queried by bisect.
        self.fire_ticks: list[int] = []
        self.fire_sets: list[frozenset[str]] = []
        acc: set[str] = set()
        for ig in spec.fire_timeline:
            acc.add(ig.edge)
            if self.fire_ticks and self.fire_ticks[-1] == ig.tick:
                self.fire_sets[-1] = frozenset(acc)
            else:
                self.fire_ticks.append(ig.tick)
                self.fire_sets.append(frozenset(acc))

        # Shelter-relevant message effects per tick, in delivery (sequence) order.
        self.effects: dict[int, list[tuple[str, Optional[int]]]] = {}
        self.radio_ticks: set[int] = set()
        for m in spec.messages:
            if m.payload.kind == PAYLOAD_SHELTER_WARNING:
                effect = ("warn", m.payload.deadline)
            elif m.payload.kind == PAYLOAD_ALL_CLEAR:
                effect = ("clear", None)
            else:
                effect = None
            if m.channel == CHANNEL_RADIO and spec.radio_available:
                self.radio_ticks.add(m.deliver_tick)
            if effect is not None:
                self.effects.setdefault(m.deliver_tick, []).append(
                    (m.channel,) + effect  # type: ignore[operator]
                )

        self.events_by_edge: dict[str, tuple] = {}
        for ev in spec.traffic_events:
            self.events_by_edge.setdefault(ev.edge, [])
            self.events_by_edge[ev.edge].append(ev)
        self.events_by_edge = {k: tuple(v) for k, v in self.events_by_edge.items()}

        horizon = 0
        if spec.fire_timeline:
            horizon = max(horizon, spec.fire_timeline[-1].tick)
        for m in spec.messages:
            horizon = max(horizon, m.deliver_tick)
            if m.payload.kind == PAYLOAD_SHELTER_WARNING:
                horizon = max(horizon, m.payload.deadline)
        for ev in spec.traffic_events:
            horizon = max(horizon, ev.end)
        self.horizon = horizon + 1

    def burning_at(self, tick: int) -> frozenset[str]:
        i = bisect_right(self.fire_ticks, tick)
        return self.fire_sets[i - 1] if i else frozenset()

    def start_pose(self) -> Optional[tuple[str, str, int]]:
        for adj in self.graph.adjacency.get(self.spec.start.node, ()):
            if adj.direction == self.spec.start.heading:
                return (adj.edge, self.spec.start.node, 0)
        return None

    def shelter_after(self, shelter: Optional[int], tick: int, radio_on: bool) -> Optional[int]:
        for entry in self.effects.get(tick, ()):
            channel, kind, deadline = entry
            if channel == CHANNEL_RADIO and not radio_on:
                continue
            shelter = deadline if kind == "warn" else None
        return shelter


# A search state, excluding the tick (kept alongside):
#   (edge, from_node, offset, shelter_deadline, forced_until, violated_ids)
_State = tuple[str, str, int, Optional[int], Optional[int], tuple[str, ...]]


def _frame(brake: bool, turn: Optional[str], radio: Optional[bool]) -> InputFrame:
    return InputFrame(
        driver=DriverInput(brake_held=brake, turn_request=turn),
        navigator=NavigatorInput(radio_toggle=radio),
    )


def solve_scenario(spec: ScenarioSpec, max_ticks: Optional[int] = None) -> SolveResult:
    """Search for a winning input sequence; returns the first one found.

    Breadth-first over ticks, so a returned witness has minimal length. Raises
    BoundExceeded when the bound is hit with live states remaining (only
    pathological scenarios get there: the state space is deduplicated once the
    script is exhausted).
    """
    model = _Model(spec)
    bound = max_ticks if max_ticks is not None else tick_bound(spec)
    start = model.start_pose()
    if start is None:
        return SolveResult(solvable=False, witness=None, ticks_searched=0)

    initial: _State = (start[0], start[1], start[2], None, None, ())
    parents: dict[tuple[int, _State], tuple[Optional[tuple[int, _State]], InputFrame]] = {
        (0, initial): (None, EMPTY_FRAME)
    }
    frontier: list[_State] = [initial]
    timeless_seen: set = set()

    def reconstruct(final_key: tuple[int, _State], final_frame: InputFrame) -> list[InputFrame]:
        frames = [final_frame]
        key = final_key
        while True:
            parent, frame = parents[key]
            if parent is None:
                break
            frames.append(frame)
            key = parent
        frames.reverse()
        return frames

    for tick in range(bound):
        if not frontier:
            return SolveResult(solvable=False, witness=None, ticks_searched=tick)
        burning = model.burning_at(tick)
        next_frontier: list[_State] = []
        for state in frontier:
            edge, from_node, offset, shelter, forced, violated = state
            key = (tick, state)
            radio_choices = (False, True) if tick in model.radio_ticks else (False,)
            for radio_on in radio_choices:
                radio_toggle = radio_on if tick in model.radio_ticks else None
                new_shelter = model.shelter_after(shelter, tick, radio_on)
                for brake in (False, True):
                    # Compliance (pre-motion, on the current edge).
                    new_forced = forced
                    new_violated = violated
                    if not brake:
                        for ev in model.events_by_edge.get(edge, ()):
                            if ev.id in violated or not (ev.start <= tick < ev.end):
                                continue
                            if tick >= ev.start + model.grace:
                                until = tick + model.penalty
                                if new_forced is None or until > new_forced:
                                    new_forced = until
                                new_violated = tuple(sorted(set(new_violated) | {ev.id}))
                    stopped = brake or (new_forced is not None and tick < new_forced)

                    moves: list[tuple[tuple[str, str, int], Optional[str], bool]]
                    if stopped:
                        moves = [((edge, from_node, offset), None, True)]
                    else:
                        length = model.length[edge]
                        new_offset = min(offset + model.cruise, length)
                        if new_offset < length:
                            moves = [((edge, from_node, new_offset), None, False)]
                        else:
                            node = model.far_end[(edge, from_node)]
                            if node == model.exit:
                                final_frame = _frame(brake, None, radio_toggle)
                                return SolveResult(
                                    solvable=True,
                                    witness=reconstruct(key, final_frame),
                                    ticks_searched=tick + 1,
                                )
                            if model.graph.degree(node) <= 1:
                                continue  # dead end: this branch dies
                            heading = model.graph.edge_direction(edge, from_node)
                            proceed, wait_request = model.arrivals[(node, heading)]
                            moves = [
                                ((new_edge, node, 0), turn, False)
                                for turn, new_edge, _ in proceed
                            ]
                            if wait_request is not None:
                                # Stationary at the node without braking:
                                # request a turn that does not exist there.
                                moves.append(((edge, from_node, length), wait_request, True))

                    for pose, turn, stationary in moves:
                        p_edge, p_from, p_offset = pose
                        shelter_final = new_shelter
                        if shelter_final is not None and shelter_final == tick:
                            at_node = None
                            if p_offset == 0:
                                at_node = p_from
                            elif p_offset == model.length[p_edge]:
                                at_node = model.far_end[(p_edge, p_from)]
                            heeded = (
                                stationary
                                and at_node is not None
                                and at_node in model.shelters
                            )
                            if not heeded:
                                continue  # shelter warning ignored: branch dies
                            shelter_final = None
                        if shelter_final is not None and shelter_final < tick:
                            shelter_final = None
                        if p_edge in burning:
                            continue  # fire contact: branch dies

                        forced_norm = new_forced if (new_forced is not None and new_forced > tick + 1) else None
                        succ: _State = (p_edge, p_from, p_offset, shelter_final, forced_norm, new_violated)
                        succ_key = (tick + 1, succ)
                        if succ_key in parents:
                            continue
                        if tick + 1 >= model.horizon:
                            # Script exhausted: states repeat modulo the clock.
                            rel = None if forced_norm is None else forced_norm - (tick + 1)
                            timeless = (p_edge, p_from, p_offset, shelter_final, rel, new_violated)
                            if timeless in timeless_seen:
                                continue
                            timeless_seen.add(timeless)
                        parents[succ_key] = (key, _frame(brake, turn, radio_toggle))
                        next_frontier.append(succ)
        frontier = next_frontier

    if frontier:
        raise BoundExceeded(f"no verdict within {bound} ticks")
    return SolveResult(solvable=False, witness=None, ticks_searched=bound)


def solvable(spec: ScenarioSpec) -> bool:
    """True iff some input sequence reaches Win within the tick bound."""
    return solve_scenario(spec).solvable
