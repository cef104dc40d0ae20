import json

import jsonschema
import pytest
from click.testing import CliRunner

from seshadri.cli import main
from seshadri.reports import REPORT_SCHEMA


@pytest.fixture
def runner():
    # click >= 8.2 always keeps stderr separate
    return CliRunner()


@pytest.fixture
def cone_file(tmp_path):
    path = tmp_path / "cone.txt"
    path.write_text("vars: x,y,z\nx*y - z^2\n", encoding="utf-8")
    return str(path)


@pytest.fixture
def surface_file(tmp_path):
    path = tmp_path / "surface.txt"
    path.write_text(
        "vars: x,y,z\n"
        "2*x^2 - 3*x*y + y^2 + x^3 - y^3 + z^3 + x^4 + y^4 + z^4 + x*y*z\n",
        encoding="utf-8",
    )
    return str(path)


def test_analyze_cone(runner, cone_file):
    result = runner.invoke(main, ["analyze", cone_file, "--point", "0,0,0", "--output", "json"])
    assert result.exit_code == 0
    report = json.loads(result.stdout)
    jsonschema.validate(report, REPORT_SCHEMA)
    assert report["command"] == "analyze"
    assert report["certificate"]["kind"] == "LINE_PRESENT"
    line = next(c for c in report["checks"] if c["name"] == "line-through-point")
    assert line["data"]["contains_line"] is True


def test_analyze_point_off_variety_exits_1(runner, cone_file):
    result = runner.invoke(main, ["analyze", cone_file, "--point", "1,1,0"])
    assert result.exit_code == 1


def test_usage_errors_exit_2(runner, cone_file, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("vars: x,y\nx^\n", encoding="utf-8")
    result = runner.invoke(main, ["analyze", str(bad), "--point", "0,0"])
    assert result.exit_code == 2
    result = runner.invoke(main, ["analyze", cone_file, "--point", "0,0"])
    assert result.exit_code == 2  # wrong coordinate count
    result = runner.invoke(main, ["construct-surface", "--d", "4", "--m", "3"])
    assert result.exit_code == 2  # m out of range
    result = runner.invoke(main, ["enumerate", "--d", "4"])
    assert result.exit_code == 2  # neither clause selected
    result = runner.invoke(main, ["analyze", cone_file, "--point", "0,0,0", "--modulus", "10"])
    assert result.exit_code == 2  # modulus not prime


def test_budget_exit_3(runner, surface_file):
    result = runner.invoke(
        main, ["certify", surface_file, "--point", "0,0,0", "--slice", "--budget", "3"]
    )
    assert result.exit_code == 3


def test_enumerate_case_b(runner):
    result = runner.invoke(main, ["enumerate", "--d", "4", "--case", "b", "--output", "json"])
    assert result.exit_code == 0
    report = json.loads(result.stdout)
    values = {(v["a"], v["b"]) for v in report["result"]["values"]}
    assert values == {(3, 2), (4, 3)}
    for v in report["result"]["values"]:
        assert isinstance(v["value"]["num"], int) and isinstance(v["value"]["den"], int)


def test_construct_surface_json(runner):
    result = runner.invoke(
        main,
        ["construct-surface", "--d", "4", "--m", "2", "--seed", "1", "--output", "json"],
    )
    assert result.exit_code == 0
    report = json.loads(result.stdout)
    jsonschema.validate(report, REPORT_SCHEMA)
    assert report["result"]["verified"] is True
    assert report["result"]["epsilon"] == {"num": 4, "den": 3}


def test_construct_surface_text_says_verified(runner):
    result = runner.invoke(main, ["construct-surface", "--d", "4", "--m", "2", "--seed", "1"])
    assert result.exit_code == 0
    assert "VERIFIED" in result.stdout


def test_json_determinism(runner):
    args = ["construct-surface", "--d", "4", "--m", "2", "--seed", "1", "--output", "json"]
    first = runner.invoke(main, args)
    second = runner.invoke(main, args)
    assert first.exit_code == second.exit_code == 0
    assert first.stdout_bytes == second.stdout_bytes
    args2 = ["enumerate", "--d", "5", "--surface-m", "2", "--output", "json"]
    assert runner.invoke(main, args2).stdout_bytes == runner.invoke(main, args2).stdout_bytes


def test_analyze_with_modulus_marks_field(runner, surface_file):
    result = runner.invoke(
        main,
        ["analyze", surface_file, "--point", "0,0,0", "--modulus", "2147483647", "--output", "json"],
    )
    assert result.exit_code == 0
    report = json.loads(result.stdout)
    line = next(c for c in report["checks"] if c["name"] == "line-through-point")
    assert line["data"]["field"] == "GF(2147483647)"
    assert line["data"]["certified"] == "probabilistic"
    assert report["certificate"] is None


def test_no_floats_anywhere(runner):
    result = runner.invoke(
        main,
        ["construct-surface", "--d", "4", "--m", "2", "--seed", "1", "--output", "json"],
    )

    def scan(value):
        assert not isinstance(value, float)
        if isinstance(value, dict):
            for v in value.values():
                scan(v)
        elif isinstance(value, list):
            for v in value:
                scan(v)

    scan(json.loads(result.stdout))
