from __future__ import annotations

import random
from dataclasses import replace

from conftest import load_fixture, random_walk
from evac import build_graph, gps_snapshot, init_state, step
from evac.infochannel import (
    InfoMessage,
    Knowledge,
    Payload,
    due_messages,
    fold_knowledge,
)
from evac.rules import EMPTY_FRAME, InputFrame, NavigatorInput


def _msg(mid, channel, tick, seq, payload):
    return InfoMessage(id=mid, channel=channel, deliver_tick=tick, sequence=seq, payload=payload)


CLOSE_E2 = Payload(kind="road_closure", edge="E2")
OPEN_E2 = Payload(kind="road_reopened", edge="E2")
CLOSE_E5 = Payload(kind="road_closure", edge="E5")
OPEN_E5 = Payload(kind="road_reopened", edge="E5")


def test_no_messages_due_on_a_quiet_tick():
    script = [_msg("a", "text", 7, 0, CLOSE_E2)]
    assert due_messages(script, 3, radio_on=True) == []


def test_radio_is_opt_in():
    script = [
        _msg("t", "text", 7, 0, CLOSE_E2),
        _msg("r", "radio", 7, 1, CLOSE_E5),
    ]
    delivered = due_messages(script, 7, radio_on=False)
    assert [m.id for m in delivered] == ["t"]
    delivered = due_messages(script, 7, radio_on=True)
    assert [m.id for m in delivered] == ["t", "r"]


def test_missed_radio_message_is_gone_for_good():
    # Scripted for tick 7; the radio only came on at tick 8. There is no
    # queue: the broadcast happened without us.
    script = [_msg("r", "radio", 7, 0, CLOSE_E5)]
    assert due_messages(script, 7, radio_on=False) == []
    for tick in range(8, 20):
        assert due_messages(script, tick, radio_on=True) == []


def test_fold_empty_is_identity():
    k = Knowledge()
    assert fold_knowledge(k, []) is k


def test_closure_then_reopen_supersedes():
    k = fold_knowledge(Knowledge(), [_msg("a", "text", 1, 0, CLOSE_E2)])
    assert k.known_closed == frozenset({"E2"})
    k = fold_knowledge(k, [_msg("b", "text", 4, 0, OPEN_E2)])
    assert k.known_closed == frozenset()
    assert [m.id for m in k.message_log] == ["a", "b"]


def test_same_tick_conflict_resolved_by_sequence():
    # Closure at sequence 1, reopen at sequence 2: the later word wins.
    msgs = [
        _msg("a", "text", 7, 1, CLOSE_E5),
        _msg("b", "text", 7, 2, OPEN_E5),
    ]
    k = fold_knowledge(Knowledge(), due_messages(msgs, 7, radio_on=False))
    assert "E5" not in k.known_closed


def test_shelter_warning_lifecycle():
    warn = Payload(kind="shelter_warning", deadline=40)
    k = fold_knowledge(Knowledge(), [_msg("w", "text", 3, 0, warn)])
    assert k.active_shelter_warning == 40
    k = fold_knowledge(k, [_msg("c", "radio", 9, 0, Payload(kind="all_clear"))])
    assert k.active_shelter_warning is None


def test_supersession_order_is_deterministic():
    # Any permutation of distinct-key messages, folded back in delivery
    # order, lands on identical knowledge.
    msgs = [
        _msg("a", "text", 1, 0, CLOSE_E2),
        _msg("b", "text", 2, 0, CLOSE_E5),
        _msg("c", "text", 3, 0, OPEN_E2),
        _msg("d", "text", 4, 0, Payload(kind="shelter_warning", deadline=9)),
        _msg("e", "text", 5, 0, Payload(kind="route_info", text="hi")),
    ]
    rng = random.Random(5)
    baseline = None
    for _ in range(12):
        shuffled = msgs[:]
        rng.shuffle(shuffled)
        ordered = sorted(shuffled, key=lambda m: (m.deliver_tick, m.sequence))
        k = fold_knowledge(Knowledge(), ordered)
        if baseline is None:
            baseline = k
        else:
            assert k == baseline


def test_gps_never_leaks_unannounced_fire():
    # Strip the messages from a burning scenario: the map stays clean even
    # though two roads are on fire.
    spec = replace(load_fixture("grid5x5_unsolvable"), messages=())
    graph = build_graph(spec)
    state = init_state(spec, graph)
    for _ in range(4):
        state = step(state, EMPTY_FRAME, graph, spec)
    assert len(state.fire.burning) == 2
    view = gps_snapshot(state, graph)
    assert view.known_closed == frozenset()


def test_gps_shows_announced_closure():
    spec = load_fixture("straightline")
    graph = build_graph(spec)
    state = init_state(spec, graph)
    for _ in range(6):  # closure of es2 is scripted for tick 5
        state = step(state, EMPTY_FRAME, graph, spec)
    view = gps_snapshot(state, graph)
    assert view.known_closed == frozenset({"es2"})
    assert view.vehicle_edge == state.vehicle.edge


def test_exit_marker_always_present():
    for name in ("grid4x4", "trap", "straightline"):
        spec = load_fixture(name)
        for seed in range(3):
            for state, graph in random_walk(spec, seed, max_ticks=25):
                assert gps_snapshot(state, graph).exit_node == spec.exit


def test_radio_off_log_is_subset_of_radio_on_log():
    spec = load_fixture("grid4x4")
    steps = 12
    radio_on = [
        InputFrame(navigator=NavigatorInput(radio_toggle=True if t == 0 else None))
        for t in range(steps)
    ]
    radio_off = [EMPTY_FRAME] * steps
    graph = build_graph(spec)
    logs = {}
    for key, frames in (("on", radio_on), ("off", radio_off)):
        state = init_state(spec, graph)
        for f in frames:
            state = step(state, f, graph, spec)
        logs[key] = {m.id for m in state.knowledge.message_log}
    assert logs["off"] <= logs["on"]
    assert logs["on"] - logs["off"]  # the radio actually carried something extra
