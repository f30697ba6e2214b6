"""Command-line harness.

    evac validate <scenario>
    evac run <scenario> --policy {omniscient|naive|replay} [--record FILE] [--max-ticks N]
    evac replay <file> [--scenario FILE]
    evac solve <scenario>
    evac stats <dir> --out report.json
    evac session <scenario>

Exit codes: 0 success, 1 validation/verification failure, 2 usage error.
Output is deterministic: identical arguments over identical files print
identical bytes.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional

from .harness import corpus_stats, make_policy, run_policy, run_trace, to_replay
from .oracle import BoundExceeded, solve_scenario
from .replay import (
    DigestDivergence,
    ReplayFormatError,
    ScenarioMismatch,
    check_scenario,
    load_replay,
    save_replay,
)
from .scenario import (
    ScenarioSpec,
    SchemaError,
    ScenarioSyntaxError,
    load_scenario,
    quick_validate,
    validate_scenario,
)


def _load(path: str) -> ScenarioSpec:
    try:
        return load_scenario(path)
    except FileNotFoundError:
        print(f"error: no such file: {path}", file=sys.stderr)
        raise SystemExit(1)
    except (ScenarioSyntaxError, SchemaError) as exc:
        print(f"error: {path}: {exc}", file=sys.stderr)
        raise SystemExit(1)


def _cmd_validate(args: argparse.Namespace) -> int:
    spec = _load(args.scenario)
    report = validate_scenario(spec)
    for f in report.errors:
        print(f"ERROR {f.code} {f.location}: {f.message}")
    for f in report.warnings:
        print(f"WARN {f.code} {f.location}: {f.message}")
    if not report.errors and not report.warnings:
        print("ok")
    return 0 if report.ok else 1


def _cmd_run(args: argparse.Namespace) -> int:
    if args.max_ticks is not None and args.max_ticks <= 0:
        print("error: --max-ticks must be positive", file=sys.stderr)
        return 2
    spec = _load(args.scenario)
    report = quick_validate(spec)
    if report.errors:
        for f in report.errors:
            print(f"ERROR {f.code} {f.location}: {f.message}", file=sys.stderr)
        return 1

    if args.policy == "replay":
        if not args.replay_file:
            print("error: --policy replay requires --replay-file", file=sys.stderr)
            return 2
        try:
            replay = load_replay(args.replay_file)
            check_scenario(replay, spec)
        except (ReplayFormatError, ScenarioMismatch) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 1
        result = run_trace(spec, replay.frames)
    else:
        policy = make_policy(args.policy, spec)
        result = run_policy(spec, policy, args.max_ticks)

    outcome = "timeout" if result.timeout else result.outcome.encode()
    print(f"outcome={outcome} ticks={result.final_tick}")
    if args.record:
        save_replay(to_replay(result, spec), args.record)
        print(f"recorded={args.record}")
    return 0


def _find_scenario_for(replay_path: str, scenario_id: str) -> Optional[Path]:
    name = f"{scenario_id}.json"
    candidates = [
        Path(replay_path).resolve().parent / name,
        Path.cwd() / name,
        Path.cwd() / "fixtures" / name,
    ]
    for c in candidates:
        if c.is_file():
            return c
    return None


def _cmd_replay(args: argparse.Namespace) -> int:
    try:
        replay = load_replay(args.file)
    except FileNotFoundError:
        print(f"error: no such file: {args.file}", file=sys.stderr)
        return 1
    except ReplayFormatError as exc:
        print(f"error: {args.file}: {exc}", file=sys.stderr)
        return 1

    if args.scenario:
        scenario_path = Path(args.scenario)
    else:
        found = _find_scenario_for(args.file, replay.scenario_id)
        if found is None:
            print(
                f"error: cannot find scenario {replay.scenario_id!r}; pass --scenario",
                file=sys.stderr,
            )
            return 1
        scenario_path = found
    spec = _load(str(scenario_path))

    from .replay import replay_run

    try:
        result = replay_run(replay, spec)
    except ScenarioMismatch as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except DigestDivergence as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print("digest OK")
    print(f"outcome={result.outcome.encode()} ticks={result.final_tick}")
    return 0


def _cmd_solve(args: argparse.Namespace) -> int:
    spec = _load(args.scenario)
    report = quick_validate(spec)
    fatal = [f for f in report.errors if f.code != "FIRE_ON_START"]
    if fatal:
        for f in fatal:
            print(f"ERROR {f.code} {f.location}: {f.message}", file=sys.stderr)
        return 1
    try:
        result = solve_scenario(spec)
    except BoundExceeded:
        print("solvable=unknown (bound exceeded)")
        return 0
    print(f"solvable={'true' if result.solvable else 'false'}")
    if result.solvable and args.witness:
        from .replay import format_replay

        run = run_trace(spec, result.witness)
        Path(args.witness).write_text(format_replay(to_replay(run, spec)), encoding="utf-8")
        print(f"witness={args.witness}")
    return 0


def _cmd_stats(args: argparse.Namespace) -> int:
    if not Path(args.directory).is_dir():
        print(f"error: no such directory: {args.directory}", file=sys.stderr)
        return 1
    report = corpus_stats(args.directory)
    text = json.dumps(report, sort_keys=True, indent=2) + "\n"
    Path(args.out).write_text(text, encoding="utf-8")
    print(f"scenarios={report['scenario_count']}")
    print(f"wrote={args.out}")
    return 0


def _cmd_session(args: argparse.Namespace) -> int:
    spec = _load(args.scenario)
    report = quick_validate(spec)
    if report.errors:
        for f in report.errors:
            print(f"ERROR {f.code} {f.location}: {f.message}", file=sys.stderr)
        return 1
    from .session import run_session

    return run_session(spec)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="evac", description="Wildfire evacuation game harness")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a scenario file")
    p.add_argument("scenario")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("run", help="run a scenario under a bot policy")
    p.add_argument("scenario")
    p.add_argument("--policy", choices=["omniscient", "naive", "replay"], required=True)
    p.add_argument("--record", metavar="FILE", help="write the run as a replay file")
    p.add_argument("--max-ticks", type=int, default=None)
    p.add_argument("--replay-file", metavar="FILE", help="input trace for --policy replay")
    p.set_defaults(func=_cmd_run)

    p = sub.add_parser("replay", help="re-run a recorded trace and verify its digest")
    p.add_argument("file")
    p.add_argument("--scenario", help="scenario file (default: look up by id)")
    p.set_defaults(func=_cmd_replay)

    p = sub.add_parser("solve", help="search for a winning input sequence")
    p.add_argument("scenario")
    p.add_argument("--witness", metavar="FILE", help="write the winning trace as a replay file")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("stats", help="run a scenario corpus and write a report")
    p.add_argument("directory")
    p.add_argument("--out", required=True, metavar="FILE")
    p.set_defaults(func=_cmd_stats)

    p = sub.add_parser("session", help="serve an interactive session over stdio")
    p.add_argument("scenario")
    p.set_defaults(func=_cmd_session)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
