"""Replay files: record an input trace, re-run it bit-exactly later.

The format is line-oriented UTF-8:

    EVAC-REPLAY 1 <scenario-id> <scenario-digest>
    t=0 brake=0 turn=- radio=-
    t=1 brake=1 turn=L radio=1
    ...
    outcome=win digest=<64 hex chars>

The header pins the exact scenario (by canonical content digest) so a trace
can never silently replay against an edited map. The footer pins where the
run ended; any engine divergence shows up as a digest mismatch.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .rules import InputFrame, NavigatorInput, Outcome
from .scenario import ScenarioSpec, scenario_digest
from .vehicle import DriverInput
from .world import TURN_LEFT, TURN_RIGHT, TURN_STRAIGHT

MAGIC = "EVAC-REPLAY"
VERSION = "1"

_TURN_CODE = {TURN_LEFT: "L", TURN_STRAIGHT: "S", TURN_RIGHT: "R", None: "-"}
_CODE_TURN = {v: k for k, v in _TURN_CODE.items()}

_TICK_RE = re.compile(r"^t=(\d+) brake=([01]) turn=([LSR-]) radio=([01-])$")
_FOOTER_RE = re.compile(r"^outcome=(\S+) digest=([0-9a-f]{64})$")


class ReplayFormatError(ValueError):
    pass


class ScenarioMismatch(ValueError):
    """The replay was recorded against a different scenario."""


class DigestDivergence(RuntimeError):
    """Re-execution diverged from the recorded run."""

    def __init__(self, tick: int, expected: str, actual: str) -> None:
        super().__init__(f"divergence at tick {tick}: expected {expected}, got {actual}")
        self.tick = tick
        self.expected = expected
        self.actual = actual


@dataclass(frozen=True)
class ReplayFile:
    scenario_id: str
    scenario_digest: str
    frames: tuple[InputFrame, ...]
    outcome: Outcome
    final_digest: str


def _encode_frame(tick: int, frame: InputFrame) -> str:
    radio = frame.navigator.radio_toggle
    radio_code = "-" if radio is None else ("1" if radio else "0")
    return (
        f"t={tick}"
        f" brake={1 if frame.driver.brake_held else 0}"
        f" turn={_TURN_CODE[frame.driver.turn_request]}"
        f" radio={radio_code}"
    )


def format_replay(replay: ReplayFile) -> str:
    lines = [f"{MAGIC} {VERSION} {replay.scenario_id} {replay.scenario_digest}"]
    lines.extend(_encode_frame(i, frame) for i, frame in enumerate(replay.frames))
    lines.append(f"outcome={replay.outcome.encode()} digest={replay.final_digest}")
    return "\n".join(lines) + "\n"


def parse_replay(text: str) -> ReplayFile:
    lines = text.splitlines()
    if not lines:
        raise ReplayFormatError("empty replay file")
    header = lines[0].split(" ")
    if len(header) != 4 or header[0] != MAGIC:
        raise ReplayFormatError("bad header line")
    if header[1] != VERSION:
        raise ReplayFormatError(f"unsupported version {header[1]}")
    footer = None
    frames: list[InputFrame] = []
    for lineno, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        m = _TICK_RE.match(line)
        if m:
            if footer is not None:
                raise ReplayFormatError(f"line {lineno}: tick record after footer")
            tick = int(m.group(1))
            if tick != len(frames):
                raise ReplayFormatError(f"line {lineno}: expected t={len(frames)}, got t={tick}")
            radio_code = m.group(4)
            frames.append(
                InputFrame(
                    driver=DriverInput(
                        brake_held=m.group(2) == "1",
                        turn_request=_CODE_TURN[m.group(3)],
                    ),
                    navigator=NavigatorInput(
                        radio_toggle=None if radio_code == "-" else radio_code == "1"
                    ),
                )
            )
            continue
        m = _FOOTER_RE.match(line)
        if m:
            footer = m
            continue
        raise ReplayFormatError(f"line {lineno}: unrecognized record {line!r}")
    if footer is None:
        raise ReplayFormatError("missing footer line")
    return ReplayFile(
        scenario_id=header[2],
        scenario_digest=header[3],
        frames=tuple(frames),
        outcome=Outcome.decode(footer.group(1)),
        final_digest=footer.group(2),
    )


def save_replay(replay: ReplayFile, path: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(format_replay(replay))


def load_replay(path: str) -> ReplayFile:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_replay(fh.read())


def check_scenario(replay: ReplayFile, spec: ScenarioSpec) -> None:
    if replay.scenario_id != spec.id:
        raise ScenarioMismatch(f"replay is for {replay.scenario_id!r}, scenario is {spec.id!r}")
    digest = scenario_digest(spec)
    if replay.scenario_digest != digest:
        raise ScenarioMismatch(
            f"scenario content changed: replay pinned {replay.scenario_digest}, file is {digest}"
        )


def replay_run(replay: ReplayFile, spec: ScenarioSpec) -> "RunResult":
    """Re-execute a recorded trace and verify it lands on the recorded digest.

    Per-tick digests are not stored in the file, so the earliest detectable
    divergence is at the end of the trace; the error reports that tick.
    """
    from .harness import run_trace

    check_scenario(replay, spec)
    result = run_trace(spec, replay.frames)
    actual = result.digests[-1] if result.digests else ""
    if result.outcome != replay.outcome or actual != replay.final_digest:
        raise DigestDivergence(result.final_tick, replay.final_digest, actual)
    return result
