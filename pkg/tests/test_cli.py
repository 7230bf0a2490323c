"""End-to-end checks of the command line interface."""

import json
import subprocess
import sys

import pytest

CLI = [sys.executable, "-m", "quatflow.cli"]


def run_cli(*argv):
    return subprocess.run(CLI + list(argv), capture_output=True, text=True)


def run_json(*argv):
    proc = run_cli(*argv)
    assert proc.returncode == 0, proc.stderr
    return json.loads(proc.stdout)


def test_verify_passes_and_reports_every_check():
    payload = run_json("verify")
    assert payload["status"] == "pass"
    assert len(payload["checks"]) >= 15
    for check in payload["checks"]:
        assert check["status"] == "pass", check
        assert check["gap"] <= check["tol"]


def test_verify_is_deterministic_across_thread_counts():
    outputs = [run_cli("verify", "--threads", str(n)).stdout
               for n in (1, 4, 8)]
    assert outputs[0] == outputs[1] == outputs[2]


def test_verify_reports_failure_when_tolerance_is_unreachable():
    proc = run_cli("verify", "--tol", "1e-30")
    assert proc.returncode == 1
    payload = json.loads(proc.stdout)
    assert payload["status"] == "fail"
    failing = [c for c in payload["checks"] if c["status"] == "fail"]
    assert failing
    for check in failing:
        assert check["gap"] > check["tol"]


def test_force_default_scenario_passes():
    payload = run_json("force")
    assert payload["command"] == "force"
    assert payload["scenario"] == "sphere-stream"
    assert payload["status"] == "pass"
    assert set(payload["results"]) >= {"pressure", "blasius",
                                       "components-sc"}
    assert payload["max_disagreement"] <= payload["tol"]


def test_force_is_deterministic_across_thread_counts():
    outputs = [run_cli("force", "--scenario", "cylinder-vortex",
                       "--threads", str(n)).stdout for n in (1, 4, 8)]
    assert outputs[0] == outputs[1] == outputs[2]


def test_force_reports_the_lift_oracle():
    payload = run_json("force", "--scenario", "cylinder-vortex")
    assert payload["expected_force"] is not None
    assert payload["expected_gap"] <= 1e-8
    lift = payload["results"]["blasius"]["force"][1]
    assert abs(lift + 6.283185307179586) <= 1e-8
    assert "monogenic-form" in payload["results"]
    assert payload["gated"] == {}


def test_force_gates_the_sphere_scenario():
    payload = run_json("force", "--scenario", "sphere-stream")
    assert "monogenic-form" in payload["gated"]
    assert "monogenic-form" not in payload["results"]


def test_force_csv_output(tmp_path):
    out = tmp_path / "force.csv"
    proc = run_cli("force", "--scenario", "control-box-uniform",
                   "--format", "csv", "--output", str(out))
    assert proc.returncode == 0, proc.stderr
    lines = out.read_text().splitlines()
    assert lines[0] == "scenario,method,order,nodes,fx,fy,fz"
    assert len(lines) >= 4
    for line in lines[1:]:
        assert line.startswith("control-box-uniform,")


def test_moment_subcommand_with_shift():
    payload = run_json("moment", "--scenario", "cylinder-vortex",
                       "--about", "0.3,0,0", "--shift-to", "0,0,0")
    assert payload["status"] == "pass"
    mz = payload["results"]["quadratic-form"]["moment"][2]
    assert abs(mz - 0.6 * 3.141592653589793) <= 1e-8
    shifted = payload["results"]["quadratic-form+shift"]["moment"]
    assert abs(shifted[2]) <= 1e-8
    assert payload["method_gap"] <= payload["tol"]


def test_convergence_subcommand():
    payload = run_json("convergence", "--scenario", "cylinder-vortex",
                       "--order", "8", "--order", "16")
    assert payload["status"] == "pass"
    assert [e["order"] for e in payload["entries"]] == [8, 16]
    assert payload["entries"][0]["change_from_previous"] is None


def test_reduce2d_subcommand():
    payload = run_json("reduce2d", "--about", "0.3,0")
    assert payload["status"] == "pass"
    assert payload["force_gap"] <= 1e-8
    assert payload["moment_gap"] <= 1e-8


def test_config_file_round_trip(tmp_path):
    from quatflow.cli import ScenarioConfig

    cfg = ScenarioConfig(
        name="skew-box",
        potential={"kind": "uniform", "components": [0.8, -0.3, 0.5]},
        body={"kind": "box", "x": [-0.6, 0.7], "y": [-0.5, 0.5],
              "z": [-0.4, 0.55]},
        rho=1.25)
    assert ScenarioConfig.from_dict(cfg.to_dict()) == cfg
    path = tmp_path / "scenario.json"
    path.write_text(json.dumps(cfg.to_dict()))
    payload = run_json("force", "--config", str(path))
    assert payload["scenario"] == "skew-box"
    assert payload["status"] == "pass"
    blasius = payload["results"]["blasius"]["force"]
    assert max(abs(c) for c in blasius) <= 1e-8


def test_bad_config_exits_with_usage_error(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"name": "x", "potential": {"kind": "no"},
                                "body": {"kind": "sphere", "radius": 1.0},
                                "bogus": 1}))
    proc = run_cli("force", "--config", str(path))
    assert proc.returncode == 2
    assert "quatflow:" in proc.stderr


def test_unknown_scenario_exits_with_usage_error():
    proc = run_cli("force", "--scenario", "not-a-scenario")
    assert proc.returncode == 2


def test_scenario_and_config_are_mutually_exclusive(tmp_path):
    path = tmp_path / "cfg.json"
    path.write_text(json.dumps({"name": "x",
                                "potential": {"kind": "identity"},
                                "body": {"kind": "sphere", "radius": 1.0}}))
    proc = run_cli("force", "--scenario", "cylinder-vortex", "--config",
                   str(path))
    assert proc.returncode == 2


def test_help_exits_cleanly():
    proc = run_cli("--help")
    assert proc.returncode == 0
    for name in ("force", "moment", "verify", "convergence", "reduce2d"):
        assert name in proc.stdout
