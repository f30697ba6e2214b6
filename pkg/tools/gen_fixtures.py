#!/usr/bin/env python3
"""Regenerate the scenario fixture corpus under fixtures/.

Fixtures are committed; this script exists so they can be rebuilt (and stay
canonical) after schema changes. Run from the repository root:

    python3 tools/gen_fixtures.py
"""

from __future__ import annotations

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from evac.hazard import Ignition, TrafficEvent
from evac.infochannel import CueEvent, InfoMessage, Payload
from evac.scenario import Edge, Node, ScenarioSpec, Start, TuningConstants, serialize_scenario

FIXTURES = Path(__file__).resolve().parents[1] / "fixtures"


def msg(mid, channel, tick, seq, payload):
    return InfoMessage(id=mid, channel=channel, deliver_tick=tick, sequence=seq, payload=payload)


def closure(edge):
    return Payload(kind="road_closure", edge=edge)


def reopened(edge):
    return Payload(kind="road_reopened", edge=edge)


def shelter_warning(deadline):
    return Payload(kind="shelter_warning", deadline=deadline)


def all_clear():
    return Payload(kind="all_clear")


def route_info(text):
    return Payload(kind="route_info", text=text)


def spec(sid, nodes, edges, start, exit_node, **kw):
    return ScenarioSpec(
        id=sid,
        grid_unit=kw.pop("grid_unit", 1),
        nodes=tuple(Node(i, p) for i, p in nodes),
        edges=tuple(Edge(i, a, b, ln) for i, a, b, ln in edges),
        start=Start(*start),
        exit=exit_node,
        shelters=tuple(kw.pop("shelters", ())),
        fire_timeline=tuple(Ignition(t, e) for t, e in kw.pop("fire", ())),
        traffic_events=tuple(kw.pop("events", ())),
        messages=tuple(kw.pop("messages", ())),
        cues=tuple(kw.pop("cues", ())),
        radio_available=kw.pop("radio", True),
        tuning=kw.pop("tuning", TuningConstants()),
        seed=kw.pop("seed", 1),
    )


def lattice(n, length=1, prefix="n"):
    """n x n grid lattice with unit spacing; returns (nodes, edges)."""
    nodes = [(f"{prefix}{x}{y}", (x, y)) for x in range(n) for y in range(n)]
    edges = []
    for x in range(n):
        for y in range(n):
            if x + 1 < n:
                edges.append((f"eh{x}{y}", f"{prefix}{x}{y}", f"{prefix}{x + 1}{y}", length))
            if y + 1 < n:
                edges.append((f"ev{x}{y}", f"{prefix}{x}{y}", f"{prefix}{x}{y + 1}", length))
    return nodes, edges


def build_all() -> dict[str, ScenarioSpec]:
    out = {}

    out["minimal"] = spec(
        "minimal",
        nodes=[("n0", (0, 0)), ("n1", (3, 0))],
        edges=[("e01", "n0", "n1", 3)],
        start=("n0", "E"),
        exit_node="n1",
        seed=1,
    )

    n, e = lattice(2, length=2)
    out["grid2x2"] = spec(
        "grid2x2",
        nodes=n,
        edges=e,
        start=("n00", "E"),
        exit_node="n11",
        fire=[(1, "eh01")],  # the top road burns; go east first
        messages=[
            msg("m1", "text", 1, 0, closure("eh01")),
            msg("m2", "radio", 2, 0, route_info("Northern crossing is blocked by crews.")),
        ],
        seed=2,
    )

    n, e = lattice(3)
    out["grid3x3"] = spec(
        "grid3x3",
        nodes=n,
        edges=e,
        start=("n00", "E"),
        exit_node="n22",
        seed=3,
    )

    n, e = lattice(4, length=2)
    e = [(i, a, b, 6 if i == "eh10" else ln) for i, a, b, ln in e]
    out["grid4x4"] = spec(
        "grid4x4",
        nodes=n,
        edges=e,
        start=("n00", "E"),
        exit_node="n33",
        shelters=["n21"],
        fire=[(6, "eh11"), (7, "ev22")],
        events=[TrafficEvent(id="jam1", kind="brake_lights_ahead", start=2, end=8, edge="eh10")],
        messages=[
            msg("m1", "text", 2, 0, closure("eh11")),
            msg("m2", "radio", 3, 0, route_info("Congestion eastbound past First Ave.")),
            msg("m3", "text", 4, 0, closure("ev22")),
            msg("m4", "radio", 5, 0, reopened("eh11")),  # wrong, superseding: conflicting info
        ],
        cues=[
            CueEvent(id="c1", kind="smoke_visible", start=4, end=9, edge="eh10", direction="N"),
            CueEvent(id="c2", kind="signals_out", start=4, end=9, edge="eh10", node="n20"),
        ],
        seed=4,
    )

    n, e = lattice(5)
    out["grid5x5_unsolvable"] = spec(
        "grid5x5_unsolvable",
        nodes=n,
        edges=e,
        start=("n00", "E"),
        exit_node="n44",
        fire=[(1, "eh34"), (2, "ev43")],  # both approaches to the exit burn early
        messages=[msg("m1", "text", 1, 0, closure("eh34")), msg("m2", "text", 2, 0, closure("ev43"))],
        seed=5,
    )

    n, e = lattice(6)
    out["grid6x6"] = spec(
        "grid6x6",
        nodes=n,
        edges=e,
        start=("n00", "E"),
        exit_node="n55",
        shelters=["n33"],
        fire=[(3, "eh22"), (4, "ev22"), (5, "eh33"), (6, "ev14")],
        messages=[
            msg("m1", "text", 1, 0, closure("eh22")),
            msg("m2", "text", 2, 0, closure("ev22")),
            msg("m3", "radio", 3, 0, closure("eh33")),
            msg("m4", "text", 4, 0, closure("ev14")),
        ],
        seed=6,
    )

    out["straightline"] = spec(
        "straightline",
        nodes=[
            ("s0", (0, 0)),
            ("s1", (6, 0)),
            ("s2", (12, 0)),
            ("s2s", (12, -3)),
            ("s3", (18, 0)),
            ("s4", (24, 0)),
        ],
        edges=[
            ("el0", "s0", "s1", 6),
            ("el1", "s1", "s2", 6),
            ("el2", "s2", "s3", 6),
            ("el3", "s3", "s4", 6),
            ("es2", "s2", "s2s", 3),
        ],
        start=("s0", "E"),
        exit_node="s4",
        fire=[(9, "es2")],
        messages=[
            msg("m1", "text", 3, 0, route_info("Crews are active north of Main St.")),
            msg("m2", "text", 5, 0, closure("es2")),
            msg("m3", "radio", 6, 0, route_info("Southern spur is being evacuated.")),
        ],
        cues=[CueEvent(id="c1", kind="smoke_visible", start=8, end=10, edge="el1", direction="N")],
        seed=7,
    )

    out["trap"] = spec(
        "trap",
        nodes=[("t0", (0, 0)), ("t1", (3, 0)), ("t2", (6, 0)), ("t3", (3, -2)), ("t4", (6, -2))],
        edges=[
            ("ta", "t0", "t1", 3),
            ("tb", "t1", "t2", 3),
            ("tc", "t1", "t3", 2),
            ("td", "t3", "t4", 3),
        ],
        start=("t0", "E"),
        exit_node="t4",
        fire=[(8, "tb")],
        messages=[msg("m1", "text", 1, 0, closure("tb"))],
        seed=8,
    )

    out["firetrap"] = spec(
        "firetrap",
        nodes=[
            ("f0", (0, 0)),
            ("f1", (2, 0)),
            ("f2", (4, 0)),
            ("f3", (6, 0)),
            ("f1s", (2, -2)),
            ("f2s", (4, -2)),
        ],
        edges=[
            ("fa", "f0", "f1", 2),
            ("fb", "f1", "f2", 2),
            ("fc", "f2", "f3", 2),
            ("fd", "f1", "f1s", 2),
            ("fe", "f1s", "f2s", 2),
            ("ff", "f2s", "f2", 2),
        ],
        start=("f0", "E"),
        exit_node="f3",
        fire=[(2, "fb")],
        messages=[msg("m1", "text", 0, 0, closure("fb"))],
        radio=False,
        seed=9,
    )

    out["shelter_drill"] = spec(
        "shelter_drill",
        nodes=[("h0", (0, 0)), ("h1", (4, 0)), ("h2", (8, 0))],
        edges=[("ha", "h0", "h1", 4), ("hb", "h1", "h2", 4)],
        start=("h0", "E"),
        exit_node="h2",
        shelters=["h1"],
        fire=[(9, "ha")],
        messages=[
            msg("m1", "text", 1, 0, shelter_warning(6)),
            msg("m2", "text", 8, 0, all_clear()),
        ],
        seed=10,
    )

    out["unsolvable_mini"] = spec(
        "unsolvable_mini",
        nodes=[("u0", (0, 0)), ("u1", (2, 0)), ("u2", (4, 0))],
        edges=[("ua", "u0", "u1", 2), ("ub", "u1", "u2", 2)],
        start=("u0", "E"),
        exit_node="u2",
        fire=[(0, "ub")],
        seed=11,
    )

    out["firestart_invalid"] = spec(
        "firestart_invalid",
        nodes=[("v0", (0, 0)), ("v1", (3, 0))],
        edges=[("va", "v0", "v1", 3)],
        start=("v0", "E"),
        exit_node="v1",
        fire=[(0, "va")],
        seed=12,
    )

    nodes = [(f"m{i}", (61 * i, 0)) for i in range(11)]
    edges = [(f"me{i}", f"m{i}", f"m{i + 1}", 61) for i in range(10)]
    out["marathon"] = spec(
        "marathon",
        nodes=nodes,
        edges=edges,
        start=("m0", "E"),
        exit_node="m10",
        messages=[msg("m1", "text", 5, 0, route_info("Single evacuation route; keep moving."))],
        cues=[CueEvent(id="c1", kind="smoke_visible", start=100, end=120, edge="me3", direction="S")],
        radio=False,
        seed=99,
    )

    out["micro_deadend"] = spec(
        "micro_deadend",
        nodes=[("d0", (0, 0)), ("d1", (3, 0)), ("d2", (6, 0)), ("d3", (3, -2))],
        edges=[("da", "d0", "d1", 3), ("db", "d1", "d2", 3), ("dc", "d1", "d3", 2)],
        start=("d0", "E"),
        exit_node="d3",
        seed=13,
    )

    out["micro_shelter"] = spec(
        "micro_shelter",
        nodes=[("p0", (0, 0)), ("p1", (4, 0)), ("p2", (8, 0))],
        edges=[("pa", "p0", "p1", 4), ("pb", "p1", "p2", 4)],
        start=("p0", "E"),
        exit_node="p2",
        shelters=["p1"],
        messages=[msg("m1", "text", 1, 0, shelter_warning(6))],
        tuning=TuningConstants(shelter_all_clear=False),
        seed=14,
    )

    out["micro_event"] = spec(
        "micro_event",
        nodes=[("g0", (0, 0)), ("g1", (8, 0))],
        edges=[("ga", "g0", "g1", 8)],
        start=("g0", "E"),
        exit_node="g1",
        events=[TrafficEvent(id="ev1", kind="brake_lights_ahead", start=2, end=7, edge="ga")],
        seed=15,
    )

    return out


def main() -> int:
    FIXTURES.mkdir(exist_ok=True)
    for name, sc in sorted(build_all().items()):
        assert sc.id == name, (sc.id, name)
        path = FIXTURES / f"{name}.json"
        path.write_text(serialize_scenario(sc), encoding="utf-8")
        print(f"wrote {path.relative_to(FIXTURES.parent)}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
