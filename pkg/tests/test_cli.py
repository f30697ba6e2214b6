from __future__ import annotations

import pytest

from conftest import fixture_path
from evac.cli import main


def _run(capsys, *argv):
    try:
        code = main(list(argv))
    except SystemExit as exc:
        code = exc.code
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_validate_clean_fixture(capsys):
    code, out, err = _run(capsys, "validate", str(fixture_path("grid3x3")))
    assert code == 0
    assert out == "ok\n"


def test_validate_reports_errors_with_exit_1(capsys):
    code, out, _ = _run(capsys, "validate", str(fixture_path("firestart_invalid")))
    assert code == 1
    assert "ERROR FIRE_ON_START" in out
    assert "WARN UNSOLVABLE" in out


def test_validate_missing_file(capsys):
    code, _, err = _run(capsys, "validate", "no-such-file.json")
    assert code == 1
    assert "no such file" in err


def test_run_records_and_replays(tmp_path, capsys):
    replay = tmp_path / "out.replay"
    code, out, _ = _run(
        capsys, "run", str(fixture_path("trap")), "--policy", "omniscient", "--record", str(replay)
    )
    assert code == 0
    assert out.splitlines()[0] == "outcome=win ticks=8"
    code, out, _ = _run(capsys, "replay", str(replay), "--scenario", str(fixture_path("trap")))
    assert code == 0
    assert out.splitlines()[0] == "digest OK"


def test_replay_finds_scenario_next_to_file(tmp_path, capsys):
    # No --scenario flag: the id in the header resolves against the replay's
    # own directory.
    import shutil

    shutil.copy(fixture_path("trap"), tmp_path / "trap.json")
    replay = tmp_path / "out.replay"
    _run(capsys, "run", str(tmp_path / "trap.json"), "--policy", "omniscient", "--record", str(replay))
    code, out, _ = _run(capsys, "replay", str(replay))
    assert code == 0
    assert "digest OK" in out


def test_replay_divergence_exits_1(tmp_path, capsys):
    replay = tmp_path / "out.replay"
    _run(capsys, "run", str(fixture_path("trap")), "--policy", "omniscient", "--record", str(replay))
    text = replay.read_text().splitlines()
    text[1] = "t=0 brake=1 turn=- radio=-"
    replay.write_text("\n".join(text) + "\n")
    code, _, err = _run(capsys, "replay", str(replay), "--scenario", str(fixture_path("trap")))
    assert code == 1
    assert "divergence" in err


def test_run_replay_policy(tmp_path, capsys):
    replay = tmp_path / "out.replay"
    _run(capsys, "run", str(fixture_path("trap")), "--policy", "omniscient", "--record", str(replay))
    code, out, _ = _run(
        capsys,
        "run",
        str(fixture_path("trap")),
        "--policy",
        "replay",
        "--replay-file",
        str(replay),
    )
    assert code == 0
    assert "outcome=win" in out


def test_run_replay_policy_requires_file(capsys):
    code, _, err = _run(capsys, "run", str(fixture_path("trap")), "--policy", "replay")
    assert code == 2
    assert "--replay-file" in err


def test_solve_verdicts(capsys):
    code, out, _ = _run(capsys, "solve", str(fixture_path("trap")))
    assert code == 0 and out == "solvable=true\n"
    code, out, _ = _run(capsys, "solve", str(fixture_path("unsolvable_mini")))
    assert code == 0 and out == "solvable=false\n"


def test_solve_witness_export(tmp_path, capsys):
    witness = tmp_path / "w.replay"
    code, out, _ = _run(capsys, "solve", str(fixture_path("trap")), "--witness", str(witness))
    assert code == 0
    assert witness.read_text().startswith("EVAC-REPLAY 1 trap ")
    code, out, _ = _run(capsys, "replay", str(witness), "--scenario", str(fixture_path("trap")))
    assert code == 0


def test_stats_deterministic_output(tmp_path, capsys):
    out1 = tmp_path / "r1.json"
    out2 = tmp_path / "r2.json"
    fixtures = str(fixture_path("minimal").parent)
    code, stdout1, _ = _run(capsys, "stats", fixtures, "--out", str(out1))
    assert code == 0
    code, stdout2, _ = _run(capsys, "stats", fixtures, "--out", str(out2))
    assert code == 0
    assert out1.read_bytes() == out2.read_bytes()
    assert stdout1.replace(str(out1), "X") == stdout2.replace(str(out2), "X")


def test_identical_argv_identical_stdout(capsys):
    a = _run(capsys, "run", str(fixture_path("grid4x4")), "--policy", "naive")
    b = _run(capsys, "run", str(fixture_path("grid4x4")), "--policy", "naive")
    assert a == b


def test_usage_error_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["run", str(fixture_path("trap"))])  # --policy is required
    assert exc.value.code == 2
