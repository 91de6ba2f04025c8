import json
import os
import sys

import pytest
from click.testing import CliRunner

sys.path.append(os.path.dirname(os.path.abspath(__file__)))

from derq.cli import cli
from derq.config import DEFAULT_BUDGET_SECONDS, load_config
from derq.errors import InputError

ASSETS = os.path.join(os.path.dirname(os.path.abspath(__file__)), "assets")


def asset(name):
    return os.path.join(ASSETS, name)


@pytest.fixture
def runner():
    return CliRunner()


def run_json(runner, tmp_path, args, name="out.json"):
    out = tmp_path / name
    result = runner.invoke(cli, args + ["--format", "json", "--out", str(out)])
    return result, (json.loads(out.read_text()) if out.exists() else None)


# -- check ------------------------------------------------------------------------


def test_check_consistent(runner):
    result = runner.invoke(cli, ["check", asset("heisenberg5.pc")])
    assert result.exit_code == 0
    assert "consistent" in result.output


def test_check_library_group(runner):
    result = runner.invoke(cli, ["check", "--group", "maxclass_p4", "--p", "7"])
    assert result.exit_code == 0


def test_check_reports_violations(runner):
    result = runner.invoke(cli, ["check", asset("corrupted.pc")])
    assert result.exit_code == 1
    assert "power-self (1)" in result.output


def test_check_parse_error(runner):
    result = runner.invoke(cli, ["check", asset("unparseable.pc")])
    assert result.exit_code == 3
    assert "line 3" in result.output


def test_check_missing_file(runner):
    result = runner.invoke(cli, ["check", asset("missing.pc")])
    assert result.exit_code == 3


def test_check_unreadable_files(runner, tmp_path):
    keyless = tmp_path / "keyless.pc"
    keyless.write_text("p 5\nn 3\n= a1\n")
    result = runner.invoke(cli, ["check", str(keyless)])
    assert result.exit_code == 3
    assert "line 3" in result.output

    binary = tmp_path / "binary.pc"
    binary.write_bytes(b"p 5\nn 3\n\xff\n")
    result = runner.invoke(cli, ["check", str(binary)])
    assert result.exit_code == 3
    assert "UTF-8" in result.output


def test_check_needs_a_source(runner):
    assert runner.invoke(cli, ["check"]).exit_code == 2
    result = runner.invoke(cli, ["check", asset("heisenberg5.pc"), "--group", "heisenberg"])
    assert result.exit_code == 2


# -- scan -------------------------------------------------------------------------


def test_scan_extraspecial_json(runner, tmp_path):
    result, data = run_json(runner, tmp_path, ["scan", asset("extraspecial3.pc")])
    assert result.exit_code == 0
    assert data["p"] == 3
    assert data["order_exp"] == 3
    assert data["small_ds"] == [0]
    assert data["chain_classes"] == {"0": "ch2"}
    assert data["quotient_exps"] == {"0": 2}


def test_scan_abelian_json(runner, tmp_path):
    result, data = run_json(runner, tmp_path, ["scan", asset("abelian5.pc")])
    assert result.exit_code == 0
    assert data["small_ds"] == []
    assert data["metabelian"] is True
    assert data["class"] == 1


def test_scan_sylow2(runner, tmp_path):
    result, data = run_json(runner, tmp_path, ["scan", "--sylow2", "8"])
    assert result.exit_code == 0
    assert data["p"] == 2
    assert data["order_exp"] == 7


def test_scan_rejects_mixed_sources(runner):
    result = runner.invoke(cli, ["scan", asset("abelian5.pc"), "--sylow2", "8"])
    assert result.exit_code == 2


def test_scan_rejects_inconsistent_presentations(runner):
    result = runner.invoke(cli, ["scan", asset("corrupted.pc")])
    assert result.exit_code == 3
    assert "power-self (1)" in result.output
    assert "nilpotency class" not in result.output


def test_scan_is_deterministic(runner, tmp_path):
    args = ["scan", asset("heisenberg5_scaled.pc"), "--format", "json", "--out"]
    runner.invoke(cli, args + [str(tmp_path / "a.json")])
    runner.invoke(cli, args + [str(tmp_path / "b.json")])
    assert (tmp_path / "a.json").read_bytes() == (tmp_path / "b.json").read_bytes()


def test_sylow2_quotient(runner, tmp_path):
    result, data = run_json(runner, tmp_path, ["sylow2", "16"])
    assert result.exit_code == 0
    assert data["order_exp"] == 15
    assert data["d"] == 2
    assert data["quotient_exp"] == data["expected_quotient_exp"] == 5
    assert len(data["generators"]) == 4


def test_sylow2_rejects_non_powers(runner):
    assert runner.invoke(cli, ["sylow2", "12"]).exit_code == 3


# -- formulas -------------------------------------------------------------------------


@pytest.mark.parametrize("p,value", [("5", "16"), ("7", "20"), ("11", "24"), ("13", "28")])
def test_count(runner, p, value):
    result = runner.invoke(cli, ["count", "--p", p])
    assert result.exit_code == 0
    assert result.output.strip().splitlines()[-1] == value


def test_count_outside_domain(runner):
    assert runner.invoke(cli, ["count", "--p", "3"]).exit_code == 3
    assert runner.invoke(cli, ["count", "--p", "9"]).exit_code == 3


@pytest.mark.parametrize("d,variant,value", [("3", "hall", 11), ("3", "mann", 12), ("5", "metabelian", 41)])
def test_bounds(runner, tmp_path, d, variant, value):
    result, data = run_json(runner, tmp_path, ["bounds", "--d", d, "--variant", variant])
    assert result.exit_code == 0
    assert data["log_p_order_at_least"] == value


def test_bounds_usage_errors(runner):
    assert runner.invoke(cli, ["bounds", "--d", "3", "--variant", "other"]).exit_code == 2
    assert runner.invoke(cli, ["bounds"]).exit_code == 2
    assert runner.invoke(cli, ["bounds", "--d", "0"]).exit_code == 3


# -- isomorphism ------------------------------------------------------------------------


def test_iso_self(runner):
    result = runner.invoke(cli, ["iso", asset("heisenberg5.pc"), asset("heisenberg5.pc")])
    assert result.exit_code == 0
    assert "true" in result.output


def test_iso_rescaled(runner, tmp_path):
    result, data = run_json(runner, tmp_path, ["iso", asset("heisenberg5.pc"), asset("heisenberg5_scaled.pc")])
    assert result.exit_code == 0
    assert data["isomorphic"] is True
    assert len(data["witness"]["images"]) == 3


def test_iso_different_groups(runner):
    result = runner.invoke(cli, ["iso", asset("heisenberg5.pc"), asset("abelian5.pc")])
    assert result.exit_code == 1
    assert "false" in result.output


def test_iso_rejects_inconsistent_presentations(runner):
    result = runner.invoke(cli, ["iso", asset("corrupted.pc"), asset("heisenberg5.pc")])
    assert result.exit_code == 3
    assert "inconsistent" in result.output


# -- census ---------------------------------------------------------------------------


def test_verify_p3(runner):
    result = runner.invoke(cli, ["verify", "--p", "3"])
    assert result.exit_code == 0
    assert "0 two-small classes" in result.output


def test_verify_rejects_p2(runner):
    assert runner.invoke(cli, ["verify", "--p", "2"]).exit_code == 3


def test_enumerate_and_search(runner, tmp_path):
    path = tmp_path / "maxclass3.json"
    result = runner.invoke(cli, ["enumerate", "--p", "3", "--out", str(path)])
    assert result.exit_code == 0
    assert path.exists()
    assert (tmp_path / "maxclass3.digest.json").exists()

    result, data = run_json(runner, tmp_path, ["search", "--catalog", str(path)], name="hits.json")
    assert result.exit_code == 0
    assert data["hits"] == []
    assert data["entries"] == len(json.loads(path.read_text()))


def test_budget_breach_exits_with_progress(runner):
    result = runner.invoke(cli, ["enumerate", "--p", "3"], env={"DERQ_MAX_NODES": "2"})
    assert result.exit_code == 3
    assert "roots_total" in result.output


# -- configuration ----------------------------------------------------------------------


def test_config_precedence(tmp_path):
    path = tmp_path / "derq.yaml"
    path.write_text("budget_seconds: 60\njobs: 2\nunknown_key: 1\n")

    config = load_config(path=path, environ={})
    assert config.budget_seconds == 60 and config.jobs == 2

    config = load_config(path=path, environ={"DERQ_BUDGET_SECONDS": "30"})
    assert config.budget_seconds == 30 and config.jobs == 2

    config = load_config(path=path, environ={"DERQ_BUDGET_SECONDS": "30"}, budget_seconds=10, jobs=None)
    assert config.budget_seconds == 10 and config.jobs == 2

    config = load_config(path=tmp_path / "absent.yaml", environ={})
    assert config.budget_seconds == DEFAULT_BUDGET_SECONDS


def test_config_errors(tmp_path):
    with pytest.raises(InputError):
        load_config(path=tmp_path / "absent.yaml", environ={"DERQ_BUDGET_SECONDS": "soon"})
    with pytest.raises(InputError):
        load_config(path=tmp_path / "absent.yaml", environ={}, jobs=0)
    bad = tmp_path / "derq.yaml"
    bad.write_text("- just\n- a list\n")
    with pytest.raises(InputError):
        load_config(path=bad, environ={})


def test_budget_env_reaches_the_cli(runner):
    result = runner.invoke(cli, ["count", "--p", "5"], env={"DERQ_BUDGET_SECONDS": "-1"})
    assert result.exit_code == 3
