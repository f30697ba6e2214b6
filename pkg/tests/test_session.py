from __future__ import annotations

import io
import json

from conftest import load_fixture
from evac.session import Session, run_session


def test_snapshot_navigator_pane_hides_unannounced_closures():
    spec = load_fixture("firetrap")
    session = Session(spec)
    snap = session.snapshot()
    # Fire is scripted for fb at tick 2 but the closure alert lands at tick 0;
    # before any step the navigator knows nothing.
    assert snap["navigator"]["map"]["known_closed"] == []
    session.tick()
    snap = session.snapshot()
    announced = {
        m["edge"] for m in snap["navigator"]["log"] if m["kind"] == "road_closure"
    }
    assert set(snap["navigator"]["map"]["known_closed"]) <= announced


def test_snapshot_exit_marker_and_distance():
    spec = load_fixture("trap")
    session = Session(spec)
    snap = session.snapshot()
    assert snap["navigator"]["map"]["exit"] == "t4"
    assert snap["driver"]["distance_to_intersection"] == 3


def test_driver_pane_shows_traffic_event_indicator():
    spec = load_fixture("micro_event")
    session = Session(spec)
    session.tick()
    session.tick()  # state tick 2: brake-lights window [2, 7) opens
    snap = session.snapshot()
    assert snap["driver"]["brake_lights"] is True
    assert snap["driver"]["emergency_behind"] is False


def test_radio_toggle_without_radio_is_a_notice():
    spec = load_fixture("firetrap")  # radio_available false
    session = Session(spec)
    notice = session.command("radio_toggle")
    assert notice == "no radio in this region"
    session.tick()
    assert session.state.radio_on is False


def test_terminal_state_ignores_commands_until_restart():
    spec = load_fixture("micro_deadend")
    session = Session(spec)
    for _ in range(10):
        session.tick()
    assert session.state.outcome.encode() == "lose:dead_end"
    notice = session.command("brake_down")
    assert notice is not None
    before = session.snapshot()["digest"]
    session.tick()
    assert session.snapshot()["digest"] == before
    session.restart()
    assert session.state.tick == 0
    assert session.state.outcome.status == "in_progress"
    assert session.frames == []


def test_brake_is_level_triggered_across_ticks():
    spec = load_fixture("minimal")
    session = Session(spec)
    session.command("brake_down")
    session.tick()
    session.tick()
    assert [f.driver.brake_held for f in session.frames] == [True, True]
    session.command("brake_up")
    session.tick()
    assert session.frames[-1].driver.brake_held is False
    assert session.state.vehicle.offset == 1


def test_turn_requests_coalesce_to_the_latest():
    spec = load_fixture("trap")
    session = Session(spec)
    session.command("turn_request", "left")
    session.command("turn_request", "right")
    session.tick()
    assert session.frames[-1].driver.turn_request == "right"
    session.tick()
    assert session.frames[-1].driver.turn_request is None


def test_stdio_session_round():
    spec_path_lines = [
        {"type": "step"},
        {"type": "command", "payload": {"kind": "turn_request", "turn": "right"}, "wt": 5},
        {"type": "step"},
        {"type": "step"},
        {"type": "quit"},
    ]
    stdin = io.StringIO("\n".join(json.dumps(x) for x in spec_path_lines) + "\n")
    stdout = io.StringIO()
    code = run_session(load_fixture("trap"), stdin, stdout)
    assert code == 0
    records = [json.loads(line) for line in stdout.getvalue().splitlines()]
    assert records[0]["type"] == "hello"
    snaps = [r for r in records if r["type"] == "snapshot"]
    assert [s["tick"] for s in snaps] == [0, 1, 2, 3]
    assert all(s["v"] == 1 for s in snaps)
