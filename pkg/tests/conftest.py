from __future__ import annotations

import random
from pathlib import Path

from evac import build_graph, init_state, load_scenario, state_digest, step
from evac.rules import InputFrame, NavigatorInput
from evac.vehicle import DriverInput
from evac.world import TURNS

FIXTURES = Path(__file__).resolve().parents[1] / "fixtures"

# Fixtures authored so that ignoring the information channel loses the game.
TRAP_FIXTURES = ("trap", "firetrap", "shelter_drill", "micro_shelter")

# Small state spaces: exhaustive engine enumeration stays cheap. The
# firestart fixture is absent because validation (correctly) refuses to
# init it, so there is no engine run to compare against.
COMPLETENESS_FIXTURES = (
    "minimal",
    "micro_deadend",
    "micro_event",
    "micro_shelter",
    "shelter_drill",
    "unsolvable_mini",
    "grid2x2",
)

LATTICE_FIXTURES = ("grid2x2", "grid3x3", "grid4x4", "grid5x5_unsolvable", "grid6x6")

DETERMINISM_FIXTURES = ("grid3x3", "grid4x4", "trap", "firetrap", "shelter_drill")


def fixture_path(name: str) -> Path:
    return FIXTURES / f"{name}.json"


def load_fixture(name: str):
    return load_scenario(str(fixture_path(name)))


def all_fixture_names() -> list[str]:
    return sorted(p.stem for p in FIXTURES.glob("*.json"))


def valid_fixture_names() -> list[str]:
    return [n for n in all_fixture_names() if n != "firestart_invalid"]


def random_frame(rng: random.Random, radio_available: bool) -> InputFrame:
    turn = rng.choice((None, None, None) + TURNS)
    radio = rng.choice((None, None, True, False)) if radio_available else None
    return InputFrame(
        driver=DriverInput(brake_held=rng.random() < 0.25, turn_request=turn),
        navigator=NavigatorInput(radio_toggle=radio),
    )


def random_walk(spec, seed: int, max_ticks: int = 40):
    """Step a scenario under seeded random inputs, yielding each state."""
    rng = random.Random(seed)
    graph = build_graph(spec)
    state = init_state(spec, graph)
    yield state, graph
    for _ in range(max_ticks):
        if state.outcome.terminal:
            break
        state = step(state, random_frame(rng, spec.radio_available), graph, spec)
        yield state, graph


def random_digest_trace(spec, seed: int, max_ticks: int = 40) -> list[str]:
    return [state_digest(s) for s, _ in random_walk(spec, seed, max_ticks)]
