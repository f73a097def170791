import json

import pytest
from typer.testing import CliRunner

from etgrs import cli
from etgrs.cli import app, main

EXAMPLE1 = ["--field", "13", "--n", "5", "--k", "3", "--alpha", "1,2,5,6,7", "--eta", "9", "--delta", "9"]
EXAMPLE2 = ["--field", "2^3", "--k", "4", "--alpha", "1,g^3,g^5,g^6"]
EXAMPLE4 = ["--field", "11", "--k", "3", "--alpha", "0,4,5,8,9"]


@pytest.fixture()
def runner():
    return CliRunner()


@pytest.fixture(autouse=True)
def _quiet_logging(mocker):
    mocker.patch("etgrs.cli.configure_logging")


def test_classify_example1(runner):
    result = runner.invoke(app, ["classify", *EXAMPLE1, "--mode", "both"])
    assert result.exit_code == 0, result.output
    assert "MDS [8,3,6]" in result.output
    assert "agreement: yes" in result.output
    assert "extension contract: ok" in result.output


def test_classify_example3(runner):
    args = ["--field", "2^3", "--n", "5", "--k", "3", "--alpha", "1,g^1,g^2,g^4,g^5"]
    args += ["--eta", "g^2", "--delta", "0"]
    result = runner.invoke(app, ["classify", *args])
    assert result.exit_code == 0, result.output
    assert "NMDS [8,3,5]" in result.output


def test_classify_json(runner):
    result = runner.invoke(app, ["classify", *EXAMPLE1, "--format", "json", "--schur"])
    assert result.exit_code == 0, result.output
    report = json.loads(result.stdout)
    assert report["verdict"] == "mds"
    assert report["agreement"] is True
    assert report["code"]["min_distance"] == 6
    assert report["schur"]["regime"] == "c_case1"
    assert report["timings"] is None


@pytest.mark.parametrize("via", ["formula", "rank-oracle"])
def test_classify_single_evaluation_path(runner, via):
    args = ["classify", *EXAMPLE1, "--mode", "theorems", "--via", via, "--format", "json"]
    result = runner.invoke(app, args)
    assert result.exit_code == 0, result.output
    report = json.loads(result.stdout)
    assert report["verdict"] == "mds"
    assert {c["via"] for check in report["checks"] for c in check["conditions"]} == {via.replace("-", "_")}


def test_classify_output_is_deterministic(runner):
    first = runner.invoke(app, ["classify", *EXAMPLE1, "--format", "json"])
    second = runner.invoke(app, ["classify", *EXAMPLE1, "--format", "json"])
    assert first.stdout == second.stdout


@pytest.mark.parametrize(
    ("override", "message"),
    [
        (["--alpha", "1,2,1,6,7"], "positions 1 and 3"),
        (["--alpha", "1,2,,6,7"], "entry 3 is empty"),
        (["--alpha", "1,2,5,6,x"], "entry 5"),
        (["--eta", "0"], "eta must be nonzero"),
        (["--n", "4"], "--n is 4"),
        (["--field", "6"], "prime"),
        (["--mode", "sideways"], "not a valid Mode"),
        (["--format", "yaml"], "--format"),
        (["--via", "guess"], "not a valid EvalPath"),
        (["--budget", "2"], "10 subsets of size 3 exceed the budget 2"),
    ],
    ids=[
        "repeated-alpha", "empty-entry", "bad-entry", "zero-eta",
        "wrong-n", "bad-field", "bad-mode", "bad-format", "bad-via", "over-budget",
    ],
)
def test_classify_usage_errors(runner, override, message):
    args = list(EXAMPLE1)
    option = override[0]
    if option in args:
        position = args.index(option)
        args[position : position + 2] = override
    else:
        args.extend(override)
    result = runner.invoke(app, ["classify", *args])
    assert result.exit_code == 1
    assert message in result.output


def test_brute_mode_over_budget_exits_1(runner):
    result = runner.invoke(app, ["classify", *EXAMPLE1, "--mode", "brute", "--budget", "100"])
    assert result.exit_code == 1
    assert "enumeration distance of a [8,3] code over GF(13) costs 2197, over the budget 100" in result.output


def test_classify_disagreement_exit_code(runner, mocker, example1):
    report = cli.classify_full(example1, cli.Mode.THEOREMS)
    mocker.patch("etgrs.cli.classify_full", return_value=report.model_copy(update={"agreement": False}))
    result = runner.invoke(app, ["classify", *EXAMPLE1])
    assert result.exit_code == 2


def test_classify_oracle_disagreement(runner, mocker):
    mocker.patch("etgrs.cli.classify_full", side_effect=cli.OracleDisagreementError("formula says True"))
    result = runner.invoke(app, ["classify", *EXAMPLE1])
    assert result.exit_code == 2
    assert "formula says True" in result.output


def test_search_example2(runner):
    result = runner.invoke(
        app,
        ["search", *EXAMPLE2, "--eta-set", "g,g^2,g^3,g^4,g^5,g^6", "--delta-set", "1", "--format", "json"],
    )
    assert result.exit_code == 0, result.output
    rows = json.loads(result.stdout)
    assert len(rows) == 6
    assert {row["verdict"] for row in rows} == {"mds"}
    assert [row["eta"] for row in rows] == sorted(row["eta"] for row in rows)


def test_search_workers_do_not_change_output(runner):
    args = ["search", *EXAMPLE4, "--eta-set", "1,2,3", "--delta-set", "all", "--format", "json"]
    assert runner.invoke(app, args).stdout == runner.invoke(app, [*args, "--workers", "3"]).stdout


def test_search_dual_amds(runner):
    result = runner.invoke(app, ["search", *EXAMPLE4, "--dual-amds"])
    assert result.exit_code == 0, result.output
    assert "dual AMDS: 100/110" in result.output


def test_search_only_filter(runner):
    result = runner.invoke(
        app,
        ["search", *EXAMPLE2, "--eta-set", "g,g^2", "--delta-set", "1", "--only", "NMDS", "--format", "json"],
    )
    assert result.exit_code == 0
    assert json.loads(result.stdout) == []


def test_search_formula_path_matches_default(runner):
    args = ["search", *EXAMPLE4, "--eta-set", "1,2", "--format", "json"]
    default = runner.invoke(app, args)
    formula = runner.invoke(app, [*args, "--via", "formula"])
    assert formula.exit_code == 0, formula.output
    assert formula.stdout == default.stdout


@pytest.mark.parametrize("eta_set", ["", "0"], ids=["empty", "only-zero"])
def test_search_rejects_eta_sets(runner, eta_set):
    result = runner.invoke(app, ["search", *EXAMPLE4, "--eta-set", eta_set])
    assert result.exit_code == 1


def test_certify(runner):
    args = ["--field", "13", "--k", "3", "--alpha", "1,2,3,4,5,6,7", "--eta", "5", "--delta", "2"]
    result = runner.invoke(app, ["certify", *args, "--format", "json"])
    assert result.exit_code == 0, result.output
    reports = json.loads(result.stdout)
    assert reports["c1"]["regime"] == "c1_low_k"
    assert reports["c1"]["certified"] is True
    assert reports["c"]["regime"] == "c_case1"


def test_matrix_generator(runner):
    result = runner.invoke(app, ["matrix", *EXAMPLE1, "--which", "G"])
    assert result.exit_code == 0
    assert result.stdout.splitlines() == ["1 1 1 1 1 0 0 1", "1 2 5 6 7 0 1 0", "10 6 5 2 5 1 0 9"]


def test_matrix_extension_vector(runner):
    result = runner.invoke(app, ["matrix", *EXAMPLE1, "--which", "t"])
    lines = result.stdout.splitlines()
    assert len(lines[0].split()) == 7
    assert lines[1] == "contract: ok (formula)"


def test_matrix_dual(runner):
    result = runner.invoke(app, ["matrix", *EXAMPLE1, "--which", "dual"])
    lines = result.stdout.splitlines()
    assert len(lines) == 6
    assert all(len(line.split()) == 8 for line in lines[:5])
    assert lines[5] == "G H^T = 0: ok"


def test_matrix_rejects_unknown_choice(runner):
    result = runner.invoke(app, ["matrix", *EXAMPLE1, "--which", "H"])
    assert result.exit_code == 1


def test_reproduce(runner):
    result = runner.invoke(app, ["reproduce", "1"])
    assert result.exit_code == 0, result.output
    assert "1 pass, 0 deviation, 0 fail" in result.output


def test_reproduce_unknown(runner):
    result = runner.invoke(app, ["reproduce", "9"])
    assert result.exit_code == 1


def test_schema(runner):
    result = runner.invoke(app, ["schema"])
    schema = json.loads(result.stdout)
    assert {"params", "verdict", "checks", "schur", "findings", "timings"} <= set(schema["properties"])


def test_main_maps_usage_errors_to_one(mocker):
    mocker.patch("sys.argv", ["etgrs", "classify", "--field", "13"])
    with pytest.raises(SystemExit) as excinfo:
        main()
    assert excinfo.value.code == 1


def test_main_success(mocker, capsys):
    mocker.patch("sys.argv", ["etgrs", "matrix", *EXAMPLE1, "--which", "G1"])
    with pytest.raises(SystemExit) as excinfo:
        main()
    assert excinfo.value.code == 0
    assert capsys.readouterr().out.splitlines()[0] == "1 1 1 1 1 0 0"
