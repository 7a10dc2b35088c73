"""End-to-end command line behaviour, including exit codes."""

import json

import pytest

from lieprefrat.cli import main
from lieprefrat.corpus import truncated_weyl_algebra
from lieprefrat.fileformat import serialize_algebra

FOUR_LINES = [
    [[0, 0, 1, 0, 0]],
    [[0, 1, 1, 0, 0]],
    [[1, 0, 1, 0, 0]],
    [[1, 1, 1, 0, 0]],
]


@pytest.fixture()
def family_file(tmp_path):
    path = tmp_path / "family_p2.json"
    path.write_text(serialize_algebra(truncated_weyl_algebra(2)))
    return str(path)


def test_check_accepts_valid_file(family_file, capsys):
    assert main(["check", family_file]) == 0
    out = capsys.readouterr().out
    assert "ok" in out and "GF(2)" in out


def test_check_rejects_non_lie_table(tmp_path, capsys):
    # [a,b]=c, [a,c]=a breaks Jacobi.
    path = tmp_path / "bad.json"
    path.write_text(
        json.dumps(
            {
                "p": 2,
                "dim": 3,
                "basis": ["a", "b", "c"],
                "brackets": [
                    {"i": 0, "j": 1, "terms": [[1, 2]]},
                    {"i": 0, "j": 2, "terms": [[1, 0]]},
                ],
            }
        )
    )
    assert main(["check", str(path)]) == 2
    assert "jacobi" in capsys.readouterr().err


def test_check_rejects_malformed_json(tmp_path, capsys):
    path = tmp_path / "broken.json"
    path.write_text("{oops")
    assert main(["check", str(path)]) == 2
    assert "error" in capsys.readouterr().err


def test_check_missing_file(capsys):
    assert main(["check", "/no/such/file.json"]) == 2


def test_analyze_info(family_file, capsys):
    assert main(["analyze", family_file, "--what", "info", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["p"] == 2
    assert data["dim"] == 5
    assert data["solvable"] is True
    assert data["completely_solvable"] is False
    assert data["residual_dim"] == 2


def test_analyze_prefrattini_json(family_file, capsys):
    assert main(["analyze", family_file, "--what", "prefrattini", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["count"] == 4
    assert data["common_dim"] == 1
    assert data["index_set"] == [1, 3, 4]
    assert sorted(data["members"]) == FOUR_LINES


def test_analyze_with_u(family_file, capsys):
    code = main(
        [
            "analyze",
            family_file,
            "--u",
            "0,0,1,0,0;0,0,0,1,0;0,0,0,0,1",
            "--what",
            "prefrattini",
            "--json",
        ]
    )
    assert code == 0
    data = json.loads(capsys.readouterr().out)
    assert data["count"] == 1
    assert data["common_dim"] == 3
    assert data["index_set"] == [1]


def test_analyze_rejects_open_u(family_file, capsys):
    code = main(
        ["analyze", family_file, "--u", "0,0,0,1,0;0,0,0,0,1", "--what", "frattini"]
    )
    assert code == 2
    assert "bracket-closed" in capsys.readouterr().err


def test_analyze_chief_text(family_file, capsys):
    assert main(["analyze", family_file, "--what", "chief"]) == 0
    out = capsys.readouterr().out
    assert "factor_dims" in out


def test_analyze_omega_min(family_file, capsys):
    assert main(["analyze", family_file, "--what", "omega-min", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert sorted(data["members"]) == FOUR_LINES


def test_analyze_conjugacy(family_file, capsys):
    assert main(["analyze", family_file, "--what", "conjugacy", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["status"] == "PASS"
    assert data["group_order"] == 4


def test_verify_corpus_exit_zero(capsys):
    code = main(
        ["verify", "--corpus", "--p", "2", "--checks", "prefrat-theorem,dimension"]
    )
    assert code == 0
    out = capsys.readouterr().out
    assert "PASS" in out
    assert "cells" in out


def test_verify_single_file(family_file, capsys):
    code = main(["verify", family_file, "--checks", "axioms,conjugacy"])
    assert code == 0
    out = capsys.readouterr().out
    assert "conjugacy" in out


def test_verify_json_is_deterministic(capsys):
    argv = [
        "verify",
        "--corpus",
        "--p",
        "2",
        "--checks",
        "dimension,conjugacy",
        "--json",
    ]
    assert main(argv) == 0
    first = capsys.readouterr().out
    assert main(argv) == 0
    second = capsys.readouterr().out
    assert first == second
    rows = json.loads(first)
    assert all(
        list(r) == ["algebra", "check", "status", "u", "witnesses"] for r in rows
    )


def test_verify_unknown_check(capsys):
    assert main(["verify", "--corpus", "--p", "2", "--checks", "bogus"]) == 2
    assert "unknown checks" in capsys.readouterr().err


def test_verify_without_input(capsys):
    assert main(["verify"]) == 2


def test_verify_resource_exit(family_file, capsys):
    code = main(
        [
            "verify",
            family_file,
            "--checks",
            "jordan-holder",
            "--node-budget",
            "1",
        ]
    )
    assert code == 3
    assert "SKIPPED(resource)" in capsys.readouterr().out


def test_verify_u_mode_sample(family_file, capsys):
    code = main(
        [
            "verify",
            family_file,
            "--u-mode",
            "sample:2",
            "--checks",
            "dimension",
        ]
    )
    assert code == 0
    out = capsys.readouterr().out
    assert out.count("dimension") == 2


def test_example_round_trip(tmp_path, capsys):
    out_path = tmp_path / "fam.json"
    assert main(["example", "--p", "3", "--out", str(out_path)]) == 0
    data = json.loads(out_path.read_text())
    assert data["p"] == 3
    assert data["dim"] == 6
    assert main(["check", str(out_path)]) == 0


def test_example_to_stdout(capsys):
    assert main(["example", "--p", "2"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["dim"] == 5


def test_bad_u_spec_exit_code(family_file, capsys):
    assert main(["analyze", family_file, "--u", "1,2", "--what", "info"]) == 2
