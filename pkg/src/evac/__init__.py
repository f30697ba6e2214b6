"""Deterministic two-player wildfire-evacuation driving game.

A tick-based simulation core (road graph, always-rolling vehicle, scripted
fire and information channels), a headless harness with bot policies and a
brute-force solvability oracle, and an interactive session host for the
shared-screen UI.
"""

from .hazard import (
    ComplianceResult,
    FireState,
    Ignition,
    TrafficEvent,
    advance_fire,
    check_compliance,
)
from .harness import (
    NaivePolicy,
    OmniscientPolicy,
    Policy,
    RunResult,
    corpus_stats,
    make_policy,
    run_policy,
    run_trace,
)
from .infochannel import (
    CueEvent,
    InfoMessage,
    Knowledge,
    MapView,
    Payload,
    due_messages,
    fold_knowledge,
    gps_snapshot,
)
from .oracle import BoundExceeded, SolveResult, solvable, solve_scenario, tick_bound
from .replay import (
    DigestDivergence,
    ReplayFile,
    ScenarioMismatch,
    load_replay,
    parse_replay,
    format_replay,
    replay_run,
    save_replay,
)
from .rules import (
    GameState,
    InputFrame,
    NavigatorInput,
    Outcome,
    evaluate_outcome,
    init_state,
    state_digest,
    step,
)
from .scenario import (
    Edge,
    InvalidScenario,
    Node,
    ScenarioSpec,
    SchemaError,
    ScenarioSyntaxError,
    TuningConstants,
    ValidationReport,
    load_scenario,
    parse_scenario,
    quick_validate,
    scenario_digest,
    serialize_scenario,
    validate_scenario,
)
from .vehicle import DriverInput, VehicleEvent, VehicleState, advance_vehicle, resolve_turn
from .world import RoadGraph, build_graph, relative_options, shortest_path

__version__ = "0.1.0"
